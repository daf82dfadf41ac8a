#include "sumrank/seeds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumrank {

namespace {

using u128 = unsigned __int128;

std::uint64_t pow_u64_checked(std::uint64_t b, std::size_t e, std::uint64_t cap,
                              const char* what) {
    u128 v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        v *= b;
        if (v > cap) throw CapError(what);
    }
    return std::uint64_t(v);
}

FieldLevel qr_level(const FieldContext& ctx, std::uint64_t q, std::size_t r) {
    FieldLevel lq = ctx.subfield_level(q);
    return ctx.level(lq.degree * unsigned(r));
}

}  // namespace

std::string seed_kind_name(SeedKind k) {
    switch (k) {
        case SeedKind::Trivial: return "trivial";
        case SeedKind::Mds: return "mds";
        case SeedKind::Hamming: return "hamming";
        case SeedKind::Bch: return "bch";
        case SeedKind::Hermitian: return "hermitian";
    }
    throw std::logic_error("unknown seed kind");
}

SeedKind seed_kind_from_name(const std::string& s) {
    if (s == "trivial") return SeedKind::Trivial;
    if (s == "mds") return SeedKind::Mds;
    if (s == "hamming") return SeedKind::Hamming;
    if (s == "bch") return SeedKind::Bch;
    if (s == "hermitian") return SeedKind::Hermitian;
    throw std::invalid_argument("unknown seed kind: " + s);
}

CyclotomicData cyclotomic_cosets(std::uint64_t qr, std::uint64_t mu) {
    if (mu == 0 || qr == 0) throw std::invalid_argument("modulus and base must be positive");
    if (std::gcd(qr, mu) != 1) throw std::invalid_argument("base and modulus must be coprime");
    if (mu > (std::uint64_t(1) << 20)) throw CapError("cyclotomic modulus exceeds the desk cap");

    CyclotomicData data;
    data.modulus = mu;
    data.base = qr;
    // s = ord_mu(qr)
    std::uint64_t pw = qr % mu;
    data.s = 1;
    while (pw != 1 % mu) {
        pw = std::uint64_t((u128(pw) * qr) % mu);
        ++data.s;
        if (data.s > mu) throw std::logic_error("order computation did not terminate");
    }
    std::vector<bool> seen(mu, false);
    for (std::uint64_t i = 0; i < mu; ++i) {
        if (seen[i]) continue;
        std::vector<std::uint64_t> coset;
        std::uint64_t x = i;
        do {
            coset.push_back(x);
            seen[x] = true;
            x = std::uint64_t((u128(x) * qr) % mu);
        } while (x != i);
        std::sort(coset.begin(), coset.end());
        data.cosets.push_back(std::move(coset));
    }
    return data;
}

std::vector<std::uint64_t> bch_defining_set(const CyclotomicData& data, std::uint64_t b,
                                            std::size_t t) {
    std::vector<const std::vector<std::uint64_t>*> coset_of(data.modulus);
    for (const auto& c : data.cosets)
        for (auto x : c) coset_of[x] = &c;
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < t; ++k) {
        const auto& c = *coset_of[(b + k) % data.modulus];
        out.insert(out.end(), c.begin(), c.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SeedCode trivial_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r) {
    FieldLevel lqr = qr_level(*ctx, q, r);
    Matrix H(lqr, 1, 1);
    H.set(0, 0, 1);
    return SeedCode{SeedKind::Trivial, q, r, 1, 1, 2, std::move(H)};
}

SeedCode mds_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r,
                  std::size_t mu, std::size_t t) {
    FieldLevel lqr = qr_level(*ctx, q, r);
    const std::uint64_t qr = lqr.cardinality();
    if (t == 0 || t > mu) throw std::invalid_argument("need 1 <= t <= mu");
    if (mu > qr + 1) throw std::invalid_argument("mds seed needs mu <= q^r + 1");
    if (mu > kMaxSeedLength) throw CapError("seed length exceeds the desk cap");

    const FieldContext& f = *ctx;
    std::vector<Elem> pts = lqr.elements();  // ascending packed order
    const std::size_t nfinite = std::min<std::size_t>(mu, qr);
    Matrix H(lqr, t, mu);
    for (std::size_t j = 0; j < nfinite; ++j) {
        Elem x = pts[j];
        Elem cur = 1;
        for (std::size_t i = 0; i < t; ++i) {
            H.set(i, j, cur);
            cur = f.mul(cur, x);
        }
    }
    if (mu == std::size_t(qr) + 1) H.set(t - 1, mu - 1, 1);  // projective extension column
    return SeedCode{SeedKind::Mds, q, r, mu, t, t + 1, std::move(H)};
}

SeedCode hamming_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r,
                      std::size_t rho) {
    if (rho == 0) throw std::invalid_argument("rho must be positive");
    FieldLevel lqr = qr_level(*ctx, q, r);
    const std::uint64_t qr = lqr.cardinality();
    const std::uint64_t qrho =
        pow_u64_checked(qr, rho, kMaxSeedLength * (qr - 1) + 1, "hamming seed exceeds desk cap");
    const std::uint64_t mu = (qrho - 1) / (qr - 1);
    if (mu > kMaxSeedLength) throw CapError("seed length exceeds the desk cap");

    std::vector<Elem> elems = lqr.elements();
    Matrix H(lqr, rho, mu);
    std::vector<std::size_t> odo(rho, 0);
    std::size_t col = 0;
    while (true) {
        // first nonzero coordinate must be 1: the canonical projective transversal
        std::size_t first = 0;
        while (first < rho && odo[first] == 0) ++first;
        if (first < rho && elems[odo[first]] == 1) {
            for (std::size_t i = 0; i < rho; ++i) H.set(i, col, elems[odo[i]]);
            ++col;
        }
        std::size_t i = rho;
        bool done = true;
        while (i-- > 0) {
            if (++odo[i] < elems.size()) {
                done = false;
                break;
            }
            odo[i] = 0;
            if (i == 0) break;
        }
        if (done) break;
    }
    if (col != mu) throw std::logic_error("projective transversal has unexpected size");
    return SeedCode{SeedKind::Hamming, q, r, std::size_t(mu), rho, 3, std::move(H)};
}

SeedCode bch_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r,
                  std::size_t s, std::size_t t, std::uint64_t b) {
    if (s == 0 || t == 0) throw std::invalid_argument("s and t must be positive");
    FieldLevel lqr = qr_level(*ctx, q, r);
    FieldLevel lqrs = ctx->level(lqr.degree * unsigned(s));
    const std::uint64_t mu = lqrs.cardinality() - 1;
    if (mu > kMaxSeedLength) throw CapError("seed length exceeds the desk cap");
    if (t + 1 > mu + 1) throw std::invalid_argument("prescribed distance exceeds the length");

    CyclotomicData cosets = cyclotomic_cosets(lqr.cardinality(), mu);
    std::vector<std::uint64_t> D = bch_defining_set(cosets, b, t);

    const FieldContext& f = *ctx;
    const Elem a = lqrs.primitive();  // primitive mu-th root of unity
    Basis delta_s = Basis::power_basis(lqrs, lqr);

    // rows (a^(i j))_j for i in the defining set, expanded over F_{q^r}
    Matrix stacked(lqr, D.size() * s, std::size_t(mu));
    std::size_t out_row = 0;
    for (std::uint64_t i : D) {
        for (std::uint64_t j = 0; j < mu; ++j) {
            Elem v = f.pow(a, std::uint64_t((u128(i) * j) % mu));
            std::vector<Elem> co = delta_s.coords(v);
            for (std::size_t k = 0; k < s; ++k) stacked.set(out_row + k, j, co[k]);
        }
        out_row += s;
    }
    // keep the lexicographically first independent row set
    Matrix kept(lqr, 0, std::size_t(mu));
    std::size_t have = 0;
    for (std::size_t i = 0; i < stacked.rows(); ++i) {
        Matrix candidate(lqr, have + 1, std::size_t(mu));
        for (std::size_t k = 0; k < have; ++k)
            for (std::size_t j = 0; j < std::size_t(mu); ++j) candidate.set(k, j, kept.at(k, j));
        for (std::size_t j = 0; j < std::size_t(mu); ++j) candidate.set(have, j, stacked.at(i, j));
        if (rank(candidate) == have + 1) {
            kept = std::move(candidate);
            ++have;
        }
    }
    if (have != D.size()) throw std::logic_error("bch parity rank differs from |defining set|");

    SeedCode seed{SeedKind::Bch, q, r, std::size_t(mu), have, t + 1, std::move(kept)};
    return seed;
}

SeedCode hermitian_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r,
                        std::size_t h) {
    FieldLevel lqr = qr_level(*ctx, q, r);
    if (lqr.degree % 2 != 0)
        throw std::invalid_argument("hermitian seed needs q^r to be a square");
    const FieldContext& f = *ctx;
    FieldLevel lq0 = ctx->level(lqr.degree / 2);
    const std::uint64_t q0 = lq0.cardinality();
    const std::uint64_t mu = q0 * q0 * q0;
    if (mu > kMaxSeedLength) throw CapError("seed length exceeds the desk cap");
    const std::uint64_t genus = q0 * (q0 - 1) / 2;
    if (h + 1 >= mu) throw std::invalid_argument("h too large for this curve");
    const std::uint64_t deg_g = mu - h - 1;
    if (!(2 * genus < deg_g + 2))  // 2g - 2 < deg G
        throw std::invalid_argument("degree window 2g-2 < deg(G) < mu violated");

    // affine points of y^q0 + y = x^(q0+1), lexicographic (x, y)
    std::vector<Elem> elems = lqr.elements();
    std::vector<std::pair<Elem, Elem>> points;
    for (Elem x : elems) {
        Elem rhs = f.pow(x, q0 + 1);
        for (Elem y : elems)
            if (f.add(f.pow(y, q0), y) == rhs) points.emplace_back(x, y);
    }
    if (points.size() != mu) throw std::logic_error("hermitian point count mismatch");

    // monomials x^i y^j with j < q0 and pole order i q0 + j (q0+1) <= deg G,
    // listed by pole order
    std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>>> monos;
    for (std::uint64_t jj = 0; jj < q0; ++jj)
        for (std::uint64_t ii = 0; ii * q0 + jj * (q0 + 1) <= deg_g; ++ii)
            monos.push_back({ii * q0 + jj * (q0 + 1), {ii, jj}});
    std::sort(monos.begin(), monos.end());
    const std::size_t dim = monos.size();
    if (dim != deg_g - genus + 1) throw std::logic_error("riemann-roch dimension mismatch");

    Matrix gen(lqr, dim, std::size_t(mu));
    for (std::size_t row = 0; row < dim; ++row) {
        const auto [ii, jj] = monos[row].second;
        for (std::size_t col = 0; col < points.size(); ++col) {
            const auto [x, y] = points[col];
            gen.set(row, col, f.mul(f.pow(x, ii), f.pow(y, jj)));
        }
    }
    if (rank(gen) != dim) throw std::logic_error("hermitian evaluation map lost rank");

    Matrix H = null_space(gen);
    if (H.rows() != h + genus) throw std::logic_error("hermitian redundancy mismatch");
    return SeedCode{SeedKind::Hermitian, q, r, std::size_t(mu), H.rows(), h + 1, std::move(H)};
}

std::vector<Elem> seed_to_gamma(const SeedCode& seed, const Basis& delta) {
    if (delta.size() != seed.rho)
        throw std::invalid_argument("delta must be a basis of F_{q^(r rho)} over F_{q^r}");
    if (delta.bottom() != seed.H.level())
        throw std::invalid_argument("delta bottom level must carry the seed parity check");
    std::vector<Elem> gamma(seed.mu);
    for (std::size_t j = 0; j < seed.mu; ++j) gamma[j] = delta.combine(seed.H.col(j));
    return gamma;
}

Basis default_delta_basis(const FieldContext& ctx, const SeedCode& seed) {
    FieldLevel bottom = seed.H.level();
    FieldLevel top = ctx.level(bottom.degree * unsigned(seed.rho));
    return Basis::power_basis(top, bottom);
}

}  // namespace sumrank
