#include "sumrank/msrd.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumrank {

namespace {

using u128 = unsigned __int128;

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] != n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

unsigned subfield_exponent(const FieldContext& ctx, std::uint64_t q) {
    return ctx.subfield_level(q).degree;
}

}  // namespace

void MsrdParams::validate() const {
    if (q < 2 || r == 0 || ell == 0 || mu == 0) throw std::invalid_argument("bad msrd parameters");
    if (ell > q - 1) throw std::invalid_argument("need ell <= q - 1 conjugacy classes");
    if (m < r) throw std::invalid_argument("no MSRD code exists with m < r");
    if (g != ell * mu || N != g * r) throw std::invalid_argument("inconsistent g, N");
    if (h == 0 || h >= N) throw std::invalid_argument("need 1 <= h <= N - 1");
    if (k != N - h || t != std::min(h, mu)) throw std::invalid_argument("inconsistent k, t");
}

FieldLevel MsrdCode::level_qm() const {
    return ctx->level(subfield_exponent(*ctx, params.q) * unsigned(params.m));
}

FieldLevel MsrdCode::level_q() const { return ctx->subfield_level(params.q); }

Basis MsrdCode::alpha() const {
    FieldLevel lq = level_q();
    FieldLevel lqr = ctx->level(lq.degree * unsigned(params.r));
    return Basis(lqr, lq, alpha_vec);
}

Matrix MsrdCode::generator() const { return null_space(parity_check); }

std::vector<Elem> tensor_beta(const Basis& alpha, std::span<const Elem> gamma) {
    const FieldContext& f = *alpha.top().ctx;
    std::vector<Elem> beta;
    beta.reserve(alpha.size() * gamma.size());
    for (Elem g : gamma)
        for (Elem a : alpha.vec()) beta.push_back(f.mul(a, g));
    return beta;
}

Matrix extended_moore_matrix(FieldLevel qm_level, std::uint64_t q, std::span<const Elem> a,
                             const std::vector<std::vector<Elem>>& beta_blocks, std::size_t h) {
    const FieldContext& f = *qm_level.ctx;
    if (a.size() != beta_blocks.size())
        throw std::invalid_argument("one evaluation vector per representative required");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (is_conjugate(qm_level, a[i], a[j], q))
                throw std::invalid_argument("representatives must be pairwise non-conjugate");

    std::size_t N = 0;
    for (const auto& b : beta_blocks) N += b.size();
    if (h == 0 || h > N) throw std::invalid_argument("h out of range");

    Matrix m(qm_level, h, N);
    std::vector<Elem> cur;  // beta^(q^k), flat
    cur.reserve(N);
    for (const auto& b : beta_blocks) cur.insert(cur.end(), b.begin(), b.end());
    std::vector<Elem> norm(a.size(), 1);  // N_k(a_i)
    for (std::size_t k = 0; k < h; ++k) {
        if (k > 0) {
            for (auto& x : cur) x = f.pow(x, q);
            for (std::size_t i = 0; i < a.size(); ++i)
                norm[i] = f.mul(f.pow(norm[i], q), a[i]);  // N_k = sigma(N_{k-1}) a
        }
        std::size_t col = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < beta_blocks[i].size(); ++j, ++col)
                m.set(k, col, f.mul(cur[col], norm[i]));
    }
    return m;
}

bool check_msrd_conditions(const FieldContext& ctx, std::span<const Elem> beta, std::size_t r,
                           std::size_t mu, std::size_t h, FieldLevel q_level) {
    if (beta.size() != mu * r) throw std::invalid_argument("beta must have mu * r entries");
    for (Elem b : beta)
        if (b == 0) return false;
    const std::size_t t = std::min(h, mu);
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    std::vector<Elem> gathered;
    gathered.reserve(t * r);
    do {
        gathered.clear();
        for (std::size_t i : idx)
            for (std::size_t u = 0; u < r; ++u) gathered.push_back(beta[i * r + u]);
        if (rank_over_subfield(ctx, gathered, q_level) != t * r) return false;
    } while (next_combination(idx, mu));
    return true;
}

bool is_msrd_matrix_bruteforce(const Matrix& m, std::size_t g, std::size_t r,
                               FieldLevel q_level) {
    if (m.cols() != g * r) throw std::invalid_argument("column count must be g * r");
    const std::uint64_t order = gl_order(r, q_level.cardinality());
    u128 tuples = 1;
    for (std::size_t i = 0; i < g; ++i) {
        tuples *= order;
        if (tuples > enumeration_cap())
            throw CapError("|GL_r(F_q)|^g exceeds the desk-scale enumeration cap");
    }

    std::vector<Matrix> gl = enumerate_gl(q_level, r);
    // identity tuple first: fastest rejection of invalid evaluation points
    for (std::size_t i = 0; i < gl.size(); ++i) {
        if (gl[i] == Matrix::identity(q_level, r)) {
            std::swap(gl[0], gl[i]);
            break;
        }
    }
    // lift the GL entries to the level of m (same ambient packing)
    std::vector<Matrix> lifted;
    lifted.reserve(gl.size());
    for (const auto& A : gl) lifted.emplace_back(m.level(), r, r, A.entries());

    std::vector<std::size_t> tuple(g, 0);
    Matrix scaled(m.level(), m.rows(), m.cols());
    while (true) {
        for (std::size_t b = 0; b < g; ++b) {
            std::vector<std::size_t> cols(r);
            for (std::size_t j = 0; j < r; ++j) cols[j] = b * r + j;
            Matrix block = m.select_columns(cols).mul(lifted[tuple[b]]);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < r; ++j) scaled.set(i, b * r + j, block.at(i, j));
        }
        if (!is_mds_matrix(scaled)) return false;
        std::size_t i = 0;
        for (; i < g; ++i) {
            if (++tuple[i] < gl.size()) break;
            tuple[i] = 0;
        }
        if (i == g) return true;
    }
}

MsrdCode build_msrd_code(std::shared_ptr<const FieldContext> ctx, const SeedCode& seed,
                         std::size_t ell, std::size_t h, const BuildOptions& opts) {
    const FieldContext& f = *ctx;
    MsrdParams p;
    p.q = seed.q;
    p.r = seed.r;
    p.m = seed.r * seed.rho;
    p.ell = ell;
    p.mu = seed.mu;
    p.g = ell * seed.mu;
    p.N = p.g * p.r;
    p.h = h;
    p.k = p.N - h;
    p.t = std::min(h, p.mu);
    p.validate();
    if (seed.guaranteed_distance < p.t + 1)
        throw std::invalid_argument(
            "seed distance too small for requested h: t-wise independence is not guaranteed");

    const unsigned e = subfield_exponent(f, p.q);
    FieldLevel lq = ctx->subfield_level(p.q);
    FieldLevel lqr = ctx->level(e * unsigned(p.r));
    FieldLevel lqm = ctx->level(e * unsigned(p.m));

    Basis alpha = Basis::power_basis(lqr, lq);
    Basis delta = default_delta_basis(f, seed);
    std::vector<Elem> gamma = seed_to_gamma(seed, delta);
    std::vector<Elem> beta = tensor_beta(alpha, gamma);
    std::vector<Elem> a = conjugacy_representatives(lqm, p.q, ell, opts.reps);

    std::vector<std::vector<Elem>> blocks(ell, beta);
    Matrix parity = extended_moore_matrix(lqm, p.q, a, blocks, h);

    if (!check_msrd_conditions(f, beta, p.r, p.mu, h, lq))
        throw std::logic_error("tensor-built evaluation points fail the MSRD conditions");
    if (opts.bruteforce_verify && !is_msrd_matrix_bruteforce(parity, p.g, p.r, lq))
        throw std::logic_error("GL oracle rejected a theorem-validated matrix");

    return MsrdCode{std::move(ctx), p,     std::move(a), std::move(beta), std::move(parity),
                    alpha.vec(),    seed};
}

std::size_t sum_rank_weight(std::span<const Elem> v, std::size_t g, std::size_t r,
                            const Basis& alpha_m) {
    if (v.size() != g * r) throw std::invalid_argument("vector length must be g * r");
    std::size_t w = 0;
    for (std::size_t i = 0; i < g; ++i) {
        Matrix rep = matrix_representation(v.subspan(i * r, r), alpha_m);
        w += rank(rep);
    }
    return w;
}

std::size_t min_sum_rank_distance_exhaustive(const Matrix& generator, std::size_t g,
                                             std::size_t r, const Basis& alpha_m) {
    const FieldContext& f = generator.ctx();
    const std::size_t kdim = generator.rows();
    const std::uint64_t card = generator.level().cardinality();
    u128 words = 1;
    for (std::size_t i = 0; i < kdim; ++i) {
        words *= card;
        if (words > enumeration_cap())
            throw CapError("codeword enumeration exceeds the desk-scale cap");
    }
    std::vector<Elem> elems = generator.level().elements();
    std::vector<std::size_t> coef(kdim, 0);
    std::size_t best = g * r + 1;
    std::vector<Elem> word(generator.cols());
    while (true) {
        std::size_t i = 0;
        for (; i < kdim; ++i) {
            if (++coef[i] < elems.size()) break;
            coef[i] = 0;
        }
        if (i == kdim) break;  // wrapped: all combinations visited
        std::fill(word.begin(), word.end(), 0);
        bool nonzero = false;
        for (std::size_t row = 0; row < kdim; ++row) {
            const Elem c = elems[coef[row]];
            if (!c) continue;
            for (std::size_t col = 0; col < word.size(); ++col)
                word[col] = f.add(word[col], f.mul(c, generator.at(row, col)));
        }
        for (Elem x : word) nonzero |= (x != 0);
        if (!nonzero) continue;
        best = std::min(best, sum_rank_weight(word, g, r, alpha_m));
        if (best == 1) break;
    }
    if (best == g * r + 1) throw std::invalid_argument("row space contains no nonzero codeword");
    return best;
}

CodePair dual_code(const MsrdCode& code) {
    return CodePair{code.parity_check, code.generator()};
}

namespace {

DerivedCode project(const MsrdCode& code, std::span<const std::size_t> cols, bool parity_side) {
    const std::size_t N = code.params.N;
    std::vector<bool> drop(N, false);
    for (std::size_t c : cols) {
        if (c >= N) throw std::invalid_argument("column index out of range");
        drop[c] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < N; ++c)
        if (!drop[c]) keep.push_back(c);
    if (keep.empty()) throw std::invalid_argument("cannot delete every column");

    std::vector<std::size_t> block_cols;
    for (std::size_t b = 0; b < code.params.g; ++b) {
        std::size_t cnt = 0;
        for (std::size_t j = 0; j < code.params.r; ++j)
            if (!drop[b * code.params.r + j]) ++cnt;
        if (cnt > 0) block_cols.push_back(cnt);
    }

    const Matrix& src = parity_side ? code.parity_check : code.generator();
    Matrix proj = src.select_columns(keep);
    RrefResult rr = rref(proj);
    Matrix canon(proj.level(), rr.rank, proj.cols());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < proj.cols(); ++j) canon.set(i, j, rr.mat.at(i, j));
    Matrix other = null_space(canon);
    if (parity_side) return DerivedCode{std::move(block_cols), std::move(other), std::move(canon)};
    return DerivedCode{std::move(block_cols), std::move(canon), std::move(other)};
}

}  // namespace

DerivedCode puncture(const MsrdCode& code, std::span<const std::size_t> cols) {
    return project(code, cols, /*parity_side=*/false);
}

DerivedCode shorten(const MsrdCode& code, std::span<const std::size_t> cols) {
    return project(code, cols, /*parity_side=*/true);
}

MsrdCode extend_scalars(const MsrdCode& code, unsigned M) {
    if (M == 0) throw std::invalid_argument("extension factor must be positive");
    if (M == 1) return code;

    const FieldContext& oldf = *code.ctx;
    auto newctx = FieldContext::make(oldf.characteristic(), oldf.degree() * M);
    FieldEmbedding emb(code.ctx, newctx);

    MsrdCode out;
    out.ctx = newctx;
    out.params = code.params;
    out.params.m = code.params.m * M;
    for (Elem x : code.a) out.a.push_back(emb.map(x));
    for (Elem x : code.beta) out.beta.push_back(emb.map(x));
    for (Elem x : code.alpha_vec) out.alpha_vec.push_back(emb.map(x));

    FieldLevel lqm = newctx->level(newctx->subfield_level(code.params.q).degree *
                                   unsigned(out.params.m));
    Matrix parity(lqm, code.parity_check.rows(), code.parity_check.cols());
    for (std::size_t i = 0; i < parity.rows(); ++i)
        for (std::size_t j = 0; j < parity.cols(); ++j)
            parity.set(i, j, emb.map(code.parity_check.at(i, j)));
    out.parity_check = std::move(parity);

    out.provenance = code.provenance;
    FieldLevel seed_lvl = newctx->level(code.provenance.H.level().degree);
    Matrix seedH(seed_lvl, code.provenance.H.rows(), code.provenance.H.cols());
    for (std::size_t i = 0; i < seedH.rows(); ++i)
        for (std::size_t j = 0; j < seedH.cols(); ++j)
            seedH.set(i, j, emb.map(code.provenance.H.at(i, j)));
    out.provenance.H = std::move(seedH);

    if (!check_msrd_conditions(*newctx, out.beta, out.params.r, out.params.mu, out.params.h,
                               newctx->subfield_level(out.params.q)))
        throw std::logic_error("scalar extension broke the MSRD conditions");
    return out;
}

}  // namespace sumrank
