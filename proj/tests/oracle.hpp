// Brute-force oracles used by the unit and acceptance tests. These stay
// independent of the library code paths they check: no elimination, no
// minor enumeration, no conjugacy shortcuts.

#ifndef SUMRANK_TESTS_ORACLE_HPP
#define SUMRANK_TESTS_ORACLE_HPP

#include <random>
#include <vector>

#include "sumrank/matrix.hpp"

namespace oracle {

using sumrank::Elem;
using sumrank::FieldContext;
using sumrank::FieldLevel;
using sumrank::Matrix;

// rows dependent iff some nonzero coefficient combination vanishes; decided
// by enumerating all |F|^k combinations
inline bool rows_dependent(const Matrix& m, const std::vector<std::size_t>& rows) {
    const FieldContext& f = m.ctx();
    std::vector<Elem> elems = m.level().elements();
    const std::size_t k = rows.size();
    std::vector<std::size_t> coef(k, 0);
    while (true) {
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++coef[i] < elems.size()) break;
            coef[i] = 0;
        }
        if (i == k) return false;  // wrapped around: only the zero combination vanished
        bool all_zero = true;
        for (std::size_t col = 0; col < m.cols(); ++col) {
            Elem acc = 0;
            for (std::size_t j = 0; j < k; ++j)
                acc = f.add(acc, f.mul(elems[coef[j]], m.at(rows[j], col)));
            if (acc != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) return true;
    }
}

// rank = size of the largest independent row subset
inline std::size_t matrix_rank(const Matrix& m) {
    std::size_t best = 0;
    const std::size_t n = m.rows();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) rows.push_back(i);
        if (rows.size() <= best || rows.empty()) continue;
        if (!rows_dependent(m, rows)) best = rows.size();
    }
    return best;
}

// a h x N matrix is MDS iff every nonzero combination of its rows has
// Hamming weight >= N - h + 1 (the dual of the code it checks is MDS)
inline bool is_mds(const Matrix& m) {
    const FieldContext& f = m.ctx();
    std::vector<Elem> elems = m.level().elements();
    const std::size_t h = m.rows();
    std::vector<std::size_t> coef(h, 0);
    while (true) {
        std::size_t i = 0;
        for (; i < h; ++i) {
            if (++coef[i] < elems.size()) break;
            coef[i] = 0;
        }
        if (i == h) return true;
        std::size_t weight = 0;
        for (std::size_t col = 0; col < m.cols(); ++col) {
            Elem acc = 0;
            for (std::size_t j = 0; j < h; ++j)
                acc = f.add(acc, f.mul(elems[coef[j]], m.at(j, col)));
            if (acc != 0) ++weight;
        }
        if (weight < m.cols() - h + 1) return false;
    }
}

// exhaustive c-search: a ~ b iff b = c^(q-1) a for some nonzero c in the level
inline bool conjugate(FieldLevel level, Elem a, Elem b, std::uint64_t q) {
    const FieldContext& f = *level.ctx;
    for (Elem c : level.elements()) {
        if (c == 0) continue;
        if (f.mul(f.pow(c, q - 1), a) == b) return true;
    }
    return false;
}

// every selection of at most h entry indices is linearly independent over
// the subfield; unlike the set-based notion this treats repeated entries as
// the distinct columns they become in a Moore matrix, so it is the exact
// companion of the MDS characterization for all h including h = 1
inline bool h_wise_independent_columns(const FieldContext& ctx, const std::vector<Elem>& elems,
                                       FieldLevel q_level, std::size_t h) {
    const std::size_t n = elems.size();
    const std::size_t k = std::min(h, n);
    if (k == 0) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Elem> subset;
        for (std::size_t i : idx) subset.push_back(elems[i]);
        if (sumrank::rank_over_subfield(ctx, subset, q_level) != k) return false;
        std::size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] != n - k + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return true;
    }
}

// N_i(a) as the literal product sigma^(i-1)(a) ... sigma(a) a
inline Elem truncated_norm(const FieldContext& f, Elem a, std::uint64_t q, std::uint64_t i) {
    if (i == 0) return 1;
    Elem prod = 1;
    Elem cur = a;
    for (std::uint64_t k = 0; k < i; ++k) {
        prod = f.mul(prod, cur);
        cur = f.pow(cur, q);
    }
    return prod;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Elem random_element(std::mt19937_64& gen, FieldLevel level) {
    std::vector<Elem> elems = level.elements();
    std::uniform_int_distribution<std::size_t> d(0, elems.size() - 1);
    return elems[d(gen)];
}

}  // namespace oracle

#endif
