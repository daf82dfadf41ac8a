#include "sumrank/pmds.hpp"

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

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    u128 r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > (u128(1) << 62)) throw std::overflow_error("binomial too large");
    }
    return std::uint64_t(r);
}

// every r columns of a generate an invertible r x r matrix
bool generates_mds(const Matrix& a) {
    const std::size_t r = a.rows();
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    do {
        if (rank(a.select_columns(idx)) != r) return false;
    } while (next_combination(idx, a.cols()));
    return true;
}

}  // namespace

Matrix rs_local_generator(FieldLevel q_level, std::size_t r, std::size_t nu) {
    if (r == 0 || nu < r) throw std::invalid_argument("need nu >= r >= 1");
    const FieldContext& f = *q_level.ctx;
    const std::uint64_t q = q_level.cardinality();
    if (nu == r) return Matrix::identity(q_level, r);
    if (nu == r + 1) {
        Matrix g = Matrix(q_level, r, nu);
        for (std::size_t i = 0; i < r; ++i) {
            g.set(i, i, 1);
            g.set(i, nu - 1, 1);
        }
        return g;
    }
    if (nu > q + 1)
        throw std::invalid_argument("local distance > 2 needs nu <= q + 1 over the base field");

    // (extended) Reed-Solomon generator, then systematize
    std::vector<Elem> pts = q_level.elements();
    const std::size_t nfinite = std::min<std::size_t>(nu, q);
    Matrix g(q_level, r, nu);
    for (std::size_t j = 0; j < nfinite; ++j) {
        Elem cur = 1;
        for (std::size_t i = 0; i < r; ++i) {
            g.set(i, j, cur);
            cur = f.mul(cur, pts[j]);
        }
    }
    if (nu == std::size_t(q) + 1) g.set(r - 1, nu - 1, 1);

    // row-reduce so the first r columns become the identity
    RrefResult rr = rref(g);
    if (rr.rank != r) throw std::logic_error("reed-solomon generator lost rank");
    for (std::size_t i = 0; i < r; ++i)
        if (rr.pivots[i] != i) throw std::logic_error("reed-solomon generator not systematizable");
    return rr.mat;
}

PmdsCode construct_pmds(const MsrdCode& outer, std::vector<Matrix> local_gens) {
    const std::size_t g = outer.params.g;
    const std::size_t r = outer.params.r;
    if (local_gens.size() != g)
        throw std::invalid_argument("one local generator per matrix set required");
    FieldLevel lq = outer.level_q();
    const std::size_t nu = local_gens.front().cols();
    for (const auto& a : local_gens) {
        if (a.rows() != r || a.cols() != nu)
            throw std::invalid_argument("local generators must all be r x nu");
        if (a.level() != lq)
            throw std::invalid_argument("local generators must live over the base field");
        if (!generates_mds(a)) throw std::invalid_argument("local generator is not MDS");
    }

    Matrix gout = outer.generator();
    FieldLevel lqm = outer.level_qm();
    Matrix glob(lqm, gout.rows(), g * nu);
    for (std::size_t b = 0; b < g; ++b) {
        std::vector<std::size_t> cols(r);
        for (std::size_t j = 0; j < r; ++j) cols[j] = b * r + j;
        // lift the F_q entries into the F_{q^m} level (same ambient packing)
        Matrix lifted(lqm, r, nu, local_gens[b].entries());
        Matrix block = gout.select_columns(cols).mul(lifted);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < nu; ++j) glob.set(i, b * nu + j, block.at(i, j));
    }
    return PmdsCode{outer, nu, nu - r + 1, std::move(local_gens), std::move(glob)};
}

PmdsCode construct_pmds(const MsrdCode& outer, std::size_t nu) {
    Matrix local = rs_local_generator(outer.level_q(), outer.params.r, nu);
    std::vector<Matrix> gens(outer.params.g, local);
    return construct_pmds(outer, std::move(gens));
}

bool verify_pmds_bruteforce(const PmdsCode& code) {
    const std::size_t g = code.outer.params.g;
    const std::size_t r = code.outer.params.r;
    const std::size_t k = code.global_gen.rows();
    const std::uint64_t per_block = binomial_u64(code.nu, r);
    u128 patterns = 1;
    for (std::size_t i = 0; i < g; ++i) {
        patterns *= per_block;
        if (patterns > enumeration_cap())
            throw CapError("C(nu, r)^g exceeds the desk-scale enumeration cap");
    }

    // all r-subsets of one local group, shared across groups
    std::vector<std::vector<std::size_t>> subsets;
    {
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        do {
            subsets.push_back(idx);
        } while (next_combination(idx, code.nu));
    }

    std::vector<std::size_t> choice(g, 0);
    std::vector<std::size_t> cols(g * r);
    std::vector<std::size_t> ksub(k);
    while (true) {
        for (std::size_t b = 0; b < g; ++b)
            for (std::size_t j = 0; j < r; ++j) cols[b * r + j] = b * code.nu + subsets[choice[b]][j];
        Matrix restricted = code.global_gen.select_columns(cols);
        for (std::size_t i = 0; i < k; ++i) ksub[i] = i;
        do {
            if (rank(restricted.select_columns(ksub)) != k) return false;
        } while (next_combination(ksub, g * r));
        std::size_t i = 0;
        for (; i < g; ++i) {
            if (++choice[i] < subsets.size()) break;
            choice[i] = 0;
        }
        if (i == g) return true;
    }
}

ErasureResult correct_erasures(const PmdsCode& code,
                               std::span<const std::optional<Elem>> word) {
    const std::size_t n = code.length();
    if (word.size() != n) throw std::invalid_argument("word length mismatch");
    const FieldContext& f = *code.outer.ctx;
    const Matrix& gen = code.global_gen;
    const std::size_t k = gen.rows();

    std::vector<std::size_t> survivors;
    for (std::size_t j = 0; j < n; ++j)
        if (word[j].has_value()) survivors.push_back(j);

    // solve x gen_S = y_S by eliminating the |S| x (k+1) augmented system
    Matrix aug(gen.level(), survivors.size(), k + 1);
    for (std::size_t row = 0; row < survivors.size(); ++row) {
        for (std::size_t i = 0; i < k; ++i) aug.set(row, i, gen.at(i, survivors[row]));
        aug.set(row, k, *word[survivors[row]]);
    }
    RrefResult rr = rref(aug);

    bool inconsistent = false;
    for (std::size_t i = 0; i < rr.rank; ++i)
        if (rr.pivots[i] == k) inconsistent = true;
    const std::size_t rank_coeff = inconsistent ? rr.rank - 1 : rr.rank;
    if (rank_coeff < k) {
        ErasureResult res;
        res.reason = "uncorrectable";  // pattern leaves the codeword underdetermined
        return res;
    }
    if (inconsistent) {
        ErasureResult res;
        res.reason = "inconsistent";  // survivors do not agree with any codeword
        return res;
    }

    std::vector<Elem> x(k, 0);
    for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.mat.at(i, k);
    ErasureResult res;
    res.ok = true;
    res.codeword.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Elem acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(x[i], gen.at(i, j)));
        res.codeword[j] = acc;
    }
    return res;
}

}  // namespace sumrank
