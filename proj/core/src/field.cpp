#include "sumrank/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>

namespace sumrank {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((u128(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint64_t p) {
    return std::uint32_t(powmod_u64(a, p - 2, p));
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// dense F_p[x] arithmetic on coefficient vectors (ascending powers), used
// only during context construction
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = std::uint32_t((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    poly_trim(c);
    return c;
}

// remainder of a modulo the monic polynomial f
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    const std::size_t df = f.size() - 1;
    poly_trim(a);
    while (a.size() > df) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (lead) {
            for (std::size_t j = 0; j < f.size(); ++j) {
                std::uint64_t sub = (lead * f[j]) % p;
                a[shift + j] = std::uint32_t((a[shift + j] + p - sub) % p);
            }
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r = {1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = std::uint32_t((a[i] + p - b[i]) % p);
    poly_trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // make b monic before reducing
        Poly bm = b;
        std::uint32_t li = inv_mod_prime(bm.back(), p);
        for (auto& c : bm) c = std::uint32_t((std::uint64_t(c) * li) % p);
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
        poly_trim(b);
    }
    return a;
}

// degree-L monic f irreducible over F_p iff it has no irreducible factor of
// degree <= L/2, i.e. gcd(x^(p^i) - x mod f, f) = 1 for i = 1..L/2
bool poly_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t L = f.size() - 1;
    if (L == 1) return true;
    Poly x = {0, 1};
    Poly xq = x;
    for (std::size_t i = 1; 2 * i <= L; ++i) {
        xq = poly_powmod(std::move(xq), p, f, p);
        Poly g = poly_gcd(poly_sub(xq, x, p), f, p);
        if (g.size() >= 2) return false;
    }
    return true;
}

u128 packed_key(const Poly& f, std::uint64_t p) {
    u128 k = 0;
    for (std::size_t i = f.size(); i-- > 0;) k = k * p + f[i];
    return k;
}

std::uint64_t checked_pow_u64(std::uint64_t base, unsigned e, std::uint64_t cap) {
    u128 v = 1;
    for (unsigned i = 0; i < e; ++i) {
        v *= base;
        if (v > cap) throw CapError("p^L exceeds the desk-scale field cap 2^40");
    }
    return std::uint64_t(v);
}

}  // namespace

std::uint64_t enumeration_cap() {
    static const std::uint64_t cap = [] {
        std::uint64_t v = std::uint64_t(1) << 24;
        if (const char* env = std::getenv("SUMRANK_ENUM_CAP")) {
            char* end = nullptr;
            std::uint64_t parsed = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && parsed > 0) {
                std::cerr << "warning: SUMRANK_ENUM_CAP overrides the enumeration cap to " << parsed
                          << "\n";
                v = parsed;
            }
        }
        return v;
    }();
    return cap;
}

std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned e = 0;
    std::uint64_t t = q;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw std::invalid_argument("q is not a prime power");
    return {p, e};
}

// ---------------------------------------------------------------------------
// FieldContext

FieldContext::FieldContext(std::uint64_t p, unsigned L, std::vector<std::uint32_t> modulus)
    : p_(p), L_(L), q_(checked_pow_u64(p, L, kMaxOrder)), modulus_(std::move(modulus)) {
    if (p_ == 2) {
        mod_mask_ = 0;
        for (unsigned i = 0; i <= L_; ++i)
            if (modulus_[i]) mod_mask_ |= std::uint64_t(1) << i;
    }
}

std::shared_ptr<const FieldContext> FieldContext::make(std::uint64_t p, unsigned L) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
    if (L == 0) throw std::invalid_argument("extension degree must be positive");
    checked_pow_u64(p, L, kMaxOrder);

    Poly chosen;
    if (L == 1) {
        chosen = {0, 1};  // f = x
    } else {
        // fewest nonzero terms first, ties by smallest packed coefficient value
        for (unsigned w = 2; w <= L + 1 && chosen.empty(); ++w) {
            const unsigned k = w - 2;  // middle nonzero positions in 1..L-1
            std::vector<unsigned> pos(k);
            for (unsigned i = 0; i < k; ++i) pos[i] = i + 1;
            std::vector<std::pair<u128, Poly>> candidates;
            auto emit_values = [&](const std::vector<unsigned>& positions) {
                // c_0 and each middle coefficient range over F_p^*
                std::vector<std::uint32_t> vals(k + 1, 1);
                while (true) {
                    Poly f(L + 1, 0);
                    f[L] = 1;
                    f[0] = vals[0];
                    for (unsigned i = 0; i < k; ++i) f[positions[i]] = vals[i + 1];
                    candidates.emplace_back(packed_key(f, p), std::move(f));
                    unsigned i = 0;
                    for (; i <= k; ++i) {
                        if (std::uint64_t(vals[i]) + 1 < p) {
                            ++vals[i];
                            break;
                        }
                        vals[i] = 1;
                    }
                    if (i > k) break;
                }
            };
            if (k == 0) {
                emit_values({});
            } else {
                while (true) {
                    emit_values(pos);
                    // next combination of positions
                    int i = int(k) - 1;
                    while (i >= 0 && pos[i] == L - 1 - (k - 1 - i)) --i;
                    if (i < 0) break;
                    ++pos[i];
                    for (unsigned j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
                }
            }
            if (candidates.size() > (std::size_t(1) << 22))
                throw CapError("modulus search space too large for this (p, L)");
            std::sort(candidates.begin(), candidates.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [key, f] : candidates) {
                (void)key;
                if (poly_irreducible(f, p)) {
                    chosen = f;
                    break;
                }
            }
        }
        if (chosen.empty()) throw std::runtime_error("no irreducible modulus found");
    }

    auto ctx = std::shared_ptr<FieldContext>(new FieldContext(p, L, std::move(chosen)));
    ctx->find_primitive();
    ctx->build_tables();
    return ctx;
}

std::shared_ptr<const FieldContext> FieldContext::from_parts(std::uint64_t p, unsigned L,
                                                             std::vector<std::uint32_t> modulus,
                                                             Elem primitive) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
    if (L == 0) throw std::invalid_argument("extension degree must be positive");
    if (modulus.size() != std::size_t(L) + 1 || modulus[L] != 1)
        throw std::invalid_argument("modulus must be monic of degree L");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!poly_irreducible(modulus, p)) throw std::invalid_argument("modulus is not irreducible");

    auto ctx = std::shared_ptr<FieldContext>(new FieldContext(p, L, std::move(modulus)));
    if (primitive >= ctx->q_ || primitive == 0)
        throw std::invalid_argument("primitive element out of range");
    ctx->primefactors_ = prime_factors(ctx->q_ - 1);
    for (auto d : ctx->primefactors_)
        if (ctx->pow(primitive, (ctx->q_ - 1) / d) == 1)
            throw std::invalid_argument("claimed primitive element has non-maximal order");
    ctx->primitive_ = primitive;
    ctx->build_tables();
    return ctx;
}

void FieldContext::find_primitive() {
    primefactors_ = prime_factors(q_ - 1);
    for (Elem x = 1; x < q_; ++x) {
        bool ok = true;
        for (auto d : primefactors_) {
            if (pow(x, (q_ - 1) / d) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive_ = x;
            return;
        }
    }
    throw std::runtime_error("no primitive element found");  // unreachable for a field
}

void FieldContext::build_tables() {
    if (q_ > kLogTableMaxOrder) return;
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = std::uint32_t(i);
        cur = mul_generic(cur, primitive_);
    }
    has_tables_ = true;
}

Elem FieldContext::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (L_ == 1) return (a + b) % p_;
    Elem r = 0;
    std::uint64_t place = 1;
    for (unsigned i = 0; i < L_; ++i) {
        std::uint64_t da = (a / place) % p_;
        std::uint64_t db = (b / place) % p_;
        r += ((da + db) % p_) * place;
        place *= p_;
    }
    return r;
}

Elem FieldContext::neg(Elem a) const {
    if (p_ == 2) return a;
    if (L_ == 1) return a ? p_ - a : 0;
    Elem r = 0;
    std::uint64_t place = 1;
    for (unsigned i = 0; i < L_; ++i) {
        std::uint64_t da = (a / place) % p_;
        r += (da ? (p_ - da) : 0) * place;
        place *= p_;
    }
    return r;
}

Elem FieldContext::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldContext::mul_generic(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (L_ == 1) return mulmod_u64(a, b, p_);
    if (p_ == 2) {
        u128 acc = 0;
        for (unsigned i = 0; i < 64 && (b >> i); ++i)
            if ((b >> i) & 1) acc ^= u128(a) << i;
        for (int bit = 2 * int(L_) - 2; bit >= int(L_); --bit)
            if ((acc >> bit) & 1) acc ^= u128(mod_mask_) << (bit - int(L_));
        return Elem(acc);
    }
    // base-p digit convolution followed by reduction modulo the monic modulus
    std::uint64_t da[64], db[64], prod[128] = {0};
    std::uint64_t t = a;
    for (unsigned i = 0; i < L_; ++i) {
        da[i] = t % p_;
        t /= p_;
    }
    t = b;
    for (unsigned i = 0; i < L_; ++i) {
        db[i] = t % p_;
        t /= p_;
    }
    for (unsigned i = 0; i < L_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < L_; ++j) prod[i + j] += da[i] * db[j] % p_;
    }
    for (unsigned i = 0; i < 2 * L_ - 1; ++i) prod[i] %= p_;
    for (int i = 2 * int(L_) - 2; i >= int(L_); --i) {
        std::uint64_t c = prod[i] % p_;
        if (!c) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < L_; ++j)
            prod[i - L_ + j] = (prod[i - L_ + j] + c * (p_ - modulus_[j])) % p_;
    }
    Elem r = 0;
    std::uint64_t place = 1;
    for (unsigned i = 0; i < L_; ++i) {
        r += (prod[i] % p_) * place;
        place *= p_;
    }
    return r;
}

Elem FieldContext::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) {
        std::uint64_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    return mul_generic(a, b);
}

Elem FieldContext::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (has_tables_) {
        std::uint64_t e = (q_ - 1 - log_[a]) % (q_ - 1);
        return exp_[e];
    }
    return pow(a, q_ - 2);
}

Elem FieldContext::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (has_tables_) {
        std::uint64_t le = mulmod_u64(log_[a], e % (q_ - 1), q_ - 1);
        return exp_[le];
    }
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldContext::coeff(Elem a, unsigned i) const {
    if (i >= L_) throw std::invalid_argument("coefficient index out of range");
    if (p_ == 2) return std::uint32_t((a >> i) & 1);
    std::uint64_t place = 1;
    for (unsigned k = 0; k < i; ++k) place *= p_;
    return std::uint32_t((a / place) % p_);
}

Elem FieldContext::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > L_) throw std::invalid_argument("too many coefficients");
    Elem r = 0;
    std::uint64_t place = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        r += std::uint64_t(c[i]) * place;
        place *= p_;
    }
    return r;
}

std::vector<std::uint32_t> FieldContext::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(L_);
    for (unsigned i = 0; i < L_; ++i) {
        c[i] = std::uint32_t(a % p_);
        a /= p_;
    }
    return c;
}

std::uint64_t FieldContext::mul_order(Elem a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t d = q_ - 1;
    for (auto f : primefactors_)
        while (d % f == 0 && pow(a, d / f) == 1) d /= f;
    return d;
}

FieldLevel FieldContext::level(unsigned degree_over_prime) const {
    if (degree_over_prime == 0 || L_ % degree_over_prime != 0)
        throw std::invalid_argument("level degree must divide the ambient degree");
    return FieldLevel{this, degree_over_prime};
}

FieldLevel FieldContext::subfield_level(std::uint64_t q) const {
    std::uint64_t t = q;
    unsigned a = 0;
    while (t > 1 && t % p_ == 0) {
        t /= p_;
        ++a;
    }
    if (t != 1 || a == 0 || L_ % a != 0)
        throw std::invalid_argument("q is not a subfield cardinality of this context");
    return FieldLevel{this, a};
}

// ---------------------------------------------------------------------------
// FieldLevel

std::uint64_t FieldLevel::cardinality() const {
    std::uint64_t c = 1;
    for (unsigned i = 0; i < degree; ++i) c *= ctx->characteristic();
    return c;
}

bool FieldLevel::contains(Elem x) const {
    if (x >= ctx->order()) return false;
    return ctx->pow(x, cardinality()) == x;
}

Elem FieldLevel::primitive() const {
    std::uint64_t card = cardinality();
    return ctx->pow(ctx->primitive(), (ctx->order() - 1) / (card - 1));
}

std::vector<Elem> FieldLevel::elements() const {
    std::uint64_t card = cardinality();
    if (card > enumeration_cap()) throw CapError("level too large to enumerate");
    std::vector<Elem> out;
    out.reserve(card);
    out.push_back(0);
    Elem g = primitive();
    Elem cur = 1;
    for (std::uint64_t i = 0; i + 1 < card; ++i) {
        out.push_back(cur);
        cur = ctx->mul(cur, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Frobenius and truncated norms

namespace {

unsigned subfield_exponent(const FieldContext& ctx, std::uint64_t q) {
    std::uint64_t t = q;
    unsigned a = 0;
    while (t > 1 && t % ctx.characteristic() == 0) {
        t /= ctx.characteristic();
        ++a;
    }
    if (t != 1 || a == 0 || ctx.degree() % a != 0)
        throw std::invalid_argument("q is not a subfield cardinality of this context");
    return a;
}

}  // namespace

Elem frobenius(const FieldContext& ctx, Elem x, std::uint64_t q) {
    subfield_exponent(ctx, q);
    return ctx.pow(x, q);
}

Elem truncated_norm(const FieldContext& ctx, Elem a, std::uint64_t q, std::uint64_t i) {
    subfield_exponent(ctx, q);
    if (i == 0) return 1;
    if (a == 0) return 0;
    // exponent (q^i - 1)/(q - 1) = 1 + q + ... + q^(i-1), reduced mod |F^*|
    const std::uint64_t m = ctx.order() - 1;
    if (m == 1) return 1;
    std::uint64_t e = 0, pw = 1 % m;
    for (std::uint64_t k = 0; k < i; ++k) {
        e = (e + pw) % m;
        pw = mulmod_u64(pw, q % m, m);
    }
    return ctx.pow(a, e);
}

// ---------------------------------------------------------------------------
// prime-field vectorization

namespace {

// rank of rows over F_p; rows are digit vectors of length L, consumed in place
std::size_t fp_rank(std::vector<std::vector<std::uint32_t>>& rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const std::uint32_t li = inv_mod_prime(rows[rank][col], p);
        for (std::size_t j = col; j < ncols; ++j)
            rows[rank][j] = std::uint32_t((std::uint64_t(rows[rank][j]) * li) % p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const std::uint64_t f = rows[r][col];
            if (!f) continue;
            for (std::size_t j = col; j < ncols; ++j)
                rows[r][j] =
                    std::uint32_t((rows[r][j] + (p - f) * rows[rank][j]) % p);
        }
        ++rank;
    }
    return rank;
}

std::vector<Elem> fp_basis_of_level(FieldLevel lvl) {
    std::vector<Elem> w(lvl.degree);
    Elem g = lvl.primitive();
    Elem cur = 1;
    for (unsigned j = 0; j < lvl.degree; ++j) {
        w[j] = cur;
        cur = lvl.ctx->mul(cur, g);
    }
    return w;
}

}  // namespace

std::size_t rank_over_subfield(const FieldContext& ctx, std::span<const Elem> elems,
                               FieldLevel q_level) {
    if (q_level.ctx != &ctx) throw std::invalid_argument("level belongs to another context");
    const unsigned e = q_level.degree;
    std::vector<Elem> w = fp_basis_of_level(q_level);
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(elems.size() * e);
    for (Elem s : elems)
        for (unsigned j = 0; j < e; ++j) rows.push_back(ctx.coeffs(ctx.mul(s, w[j])));
    std::size_t rp = fp_rank(rows, ctx.characteristic());
    if (rp % e != 0) throw std::logic_error("prime rank not divisible by subfield degree");
    return rp / e;
}

bool is_t_wise_independent_over_subfield(const FieldContext& ctx, std::span<const Elem> elems,
                                         FieldLevel q_level, std::size_t t) {
    if (t == 0) throw std::invalid_argument("t must be positive");
    const std::size_t n = elems.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (elems[i] == elems[j]) return false;
    if (n == 0) return true;
    const std::size_t k = std::min(t, n);
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Elem> subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) subset[i] = elems[idx[i]];
        if (rank_over_subfield(ctx, subset, q_level) != k) return false;
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != n - k + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

// ---------------------------------------------------------------------------
// Basis

Basis::Basis(FieldLevel top, FieldLevel bottom, std::vector<Elem> vec)
    : top_(top), bottom_(bottom), vec_(std::move(vec)) {
    if (top_.ctx != bottom_.ctx) throw std::invalid_argument("levels from different contexts");
    if (top_.degree % bottom_.degree != 0)
        throw std::invalid_argument("bottom level does not embed in top level");
    const std::size_t n = top_.degree / bottom_.degree;
    if (vec_.size() != n) throw std::invalid_argument("basis must have [top : bottom] elements");
    const FieldContext& ctx = *top_.ctx;
    for (Elem v : vec_)
        if (!top_.contains(v)) throw std::invalid_argument("basis element outside the top level");
    if (rank_over_subfield(ctx, vec_, bottom_) != n)
        throw std::invalid_argument("basis elements are dependent over the bottom level");

    bottom_basis_ = fp_basis_of_level(bottom_);
    const unsigned b = bottom_.degree;
    const unsigned L = ctx.degree();
    nrows_ = n * b;

    // eliminate the L x (n*b) prime-field matrix of vec[i]*w_j once, keeping
    // the row operations so coords() only has to replay them
    std::vector<std::vector<std::uint32_t>> m(L, std::vector<std::uint32_t>(nrows_));
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned j = 0; j < b; ++j) {
            auto col = ctx.coeffs(ctx.mul(vec_[i], bottom_basis_[j]));
            for (unsigned row = 0; row < L; ++row) m[row][i * b + j] = col[row];
        }
    elim_.assign(L, std::vector<std::uint32_t>(L, 0));
    for (unsigned i = 0; i < L; ++i) elim_[i][i] = 1;
    const std::uint64_t p = ctx.characteristic();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nrows_ && rank < L; ++col) {
        std::size_t piv = rank;
        while (piv < L && m[piv][col] == 0) ++piv;
        if (piv == L) throw std::logic_error("basis matrix lost rank");
        std::swap(m[rank], m[piv]);
        std::swap(elim_[rank], elim_[piv]);
        const std::uint32_t li = inv_mod_prime(m[rank][col], p);
        for (auto& v : m[rank]) v = std::uint32_t((std::uint64_t(v) * li) % p);
        for (auto& v : elim_[rank]) v = std::uint32_t((std::uint64_t(v) * li) % p);
        for (std::size_t r = 0; r < L; ++r) {
            if (r == rank) continue;
            const std::uint64_t f = m[r][col];
            if (!f) continue;
            for (std::size_t j = 0; j < nrows_; ++j)
                m[r][j] = std::uint32_t((m[r][j] + (p - f) * m[rank][j]) % p);
            for (std::size_t j = 0; j < L; ++j)
                elim_[r][j] = std::uint32_t((elim_[r][j] + (p - f) * elim_[rank][j]) % p);
        }
        ++rank;
    }
    if (rank != nrows_) throw std::logic_error("basis matrix lost rank");
}

Basis Basis::power_basis(FieldLevel top, FieldLevel bottom) {
    const std::size_t n = top.degree / bottom.degree;
    std::vector<Elem> vec(n);
    Elem g = top.primitive();
    Elem cur = 1;
    for (std::size_t i = 0; i < n; ++i) {
        vec[i] = cur;
        cur = top.ctx->mul(cur, g);
    }
    return Basis(top, bottom, std::move(vec));
}

std::vector<Elem> Basis::coords(Elem x) const {
    const FieldContext& ctx = *top_.ctx;
    const std::uint64_t p = ctx.characteristic();
    const unsigned L = ctx.degree();
    auto v = ctx.coeffs(x);
    // y = E * v; rows 0..nrows-1 carry the solution, the rest must vanish
    std::vector<std::uint32_t> d(nrows_);
    for (std::size_t r = 0; r < L; ++r) {
        std::uint64_t acc = 0;
        for (unsigned s = 0; s < L; ++s) acc += std::uint64_t(elim_[r][s]) * v[s] % p;
        acc %= p;
        if (r < nrows_) {
            d[r] = std::uint32_t(acc);
        } else if (acc != 0) {
            throw std::invalid_argument("element does not lie in the top level");
        }
    }
    const unsigned b = bottom_.degree;
    std::vector<Elem> c(vec_.size(), 0);
    for (std::size_t i = 0; i < vec_.size(); ++i)
        for (unsigned j = 0; j < b; ++j)
            c[i] = ctx.add(c[i], ctx.mul(Elem(d[i * b + j]), bottom_basis_[j]));
    return c;
}

Elem Basis::combine(std::span<const Elem> c) const {
    if (c.size() != vec_.size()) throw std::invalid_argument("coordinate count mismatch");
    const FieldContext& ctx = *top_.ctx;
    Elem x = 0;
    for (std::size_t i = 0; i < c.size(); ++i) x = ctx.add(x, ctx.mul(c[i], vec_[i]));
    return x;
}

// ---------------------------------------------------------------------------
// conjugacy

bool base_field_reps_valid(std::uint64_t q, unsigned m) {
    std::uint64_t qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= q;
    return std::gcd(q - 1, (qm - 1) / (q - 1)) == 1;
}

std::vector<Elem> conjugacy_representatives(FieldLevel qm_level, std::uint64_t q, std::size_t ell,
                                            RepChoice choice) {
    const FieldContext& ctx = *qm_level.ctx;
    const std::uint64_t card = qm_level.cardinality();
    std::uint64_t t = card;
    unsigned m = 0;
    while (t > 1 && t % q == 0) {
        t /= q;
        ++m;
    }
    if (t != 1 || m == 0) throw std::invalid_argument("level cardinality is not a power of q");
    if (ell == 0 || ell > q - 1)
        throw std::invalid_argument("only q-1 nonzero conjugacy classes exist");

    std::vector<Elem> reps(ell);
    if (choice == RepChoice::PrimitivePowers) {
        Elem g = qm_level.primitive();
        Elem cur = 1;
        for (std::size_t i = 0; i < ell; ++i) {
            reps[i] = cur;
            cur = ctx.mul(cur, g);
        }
    } else {
        if (!base_field_reps_valid(q, m))
            throw std::invalid_argument(
                "F_q^* representatives need gcd(q-1, (q^m-1)/(q-1)) = 1");
        FieldLevel q_level = ctx.subfield_level(q);
        Elem g = q_level.primitive();
        Elem cur = 1;
        for (std::size_t i = 0; i < ell; ++i) {
            reps[i] = cur;
            cur = ctx.mul(cur, g);
        }
    }
    return reps;
}

bool is_conjugate(FieldLevel qm_level, Elem a, Elem b, std::uint64_t q) {
    if (a == 0 || b == 0) throw std::invalid_argument("conjugacy is defined on nonzero elements");
    const FieldContext& ctx = *qm_level.ctx;
    const std::uint64_t card = qm_level.cardinality();
    if ((card - 1) % (q - 1) != 0) throw std::invalid_argument("invalid subfield size");
    const std::uint64_t e = (card - 1) / (q - 1);
    return ctx.pow(ctx.mul(b, ctx.inv(a)), e) == 1;
}

// ---------------------------------------------------------------------------
// FieldEmbedding

FieldEmbedding::FieldEmbedding(std::shared_ptr<const FieldContext> from,
                               std::shared_ptr<const FieldContext> to)
    : from_(std::move(from)), to_(std::move(to)) {
    if (from_->characteristic() != to_->characteristic())
        throw std::invalid_argument("embedding requires equal characteristic");
    if (to_->degree() % from_->degree() != 0)
        throw std::invalid_argument("source degree must divide target degree");

    const unsigned L1 = from_->degree();
    Elem root = 0;
    if (from_->degree() == to_->degree() && from_->modulus() == to_->modulus()) {
        // identity embedding; the image of x is x itself (or 0 when f = x)
        root = (L1 == 1) ? 0 : to_->from_coeffs(std::vector<std::uint32_t>{0, 1});
    } else {
        if (from_->order() > FieldContext::kLogTableMaxOrder)
            throw CapError("embedding root search limited to source fields of order <= 2^20");
        FieldLevel sub = to_->level(L1);
        std::vector<Elem> cands = sub.elements();
        const auto& f = from_->modulus();
        bool found = false;
        for (Elem c : cands) {
            Elem v = 0;
            for (std::size_t i = f.size(); i-- > 0;) v = to_->add(to_->mul(v, c), Elem(f[i]));
            if (v == 0) {
                root = c;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("modulus has no root in the target field");
    }
    root_pows_.resize(L1);
    Elem cur = 1;
    for (unsigned i = 0; i < L1; ++i) {
        root_pows_[i] = cur;
        cur = to_->mul(cur, root);
    }
}

Elem FieldEmbedding::map(Elem x) const {
    Elem r = 0;
    for (unsigned i = 0; i < from_->degree(); ++i) {
        Elem c = Elem(from_->coeff(x, i));
        r = to_->add(r, to_->mul(c, root_pows_[i]));
    }
    return r;
}

}  // namespace sumrank
