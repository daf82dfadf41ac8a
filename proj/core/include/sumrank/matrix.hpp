#ifndef SUMRANK_MATRIX_HPP
#define SUMRANK_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sumrank/field.hpp"

namespace sumrank {

/// Dense row-major matrix over a FieldLevel. Entries must lie in the level;
/// constructors and setters do not re-check this on every write, use
/// validate() where it matters.
class Matrix {
public:
    Matrix() : level_{nullptr, 0}, rows_(0), cols_(0) {}  // empty placeholder state
    Matrix(FieldLevel level, std::size_t rows, std::size_t cols)
        : level_(level), rows_(rows), cols_(cols), e_(rows * cols, 0) {}
    Matrix(FieldLevel level, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(FieldLevel level, std::size_t n);

    FieldLevel level() const { return level_; }
    const FieldContext& ctx() const { return *level_.ctx; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Elem v) { e_[i * cols_ + j] = v; }
    const std::vector<Elem>& entries() const { return e_; }

    std::vector<Elem> row(std::size_t i) const;
    std::vector<Elem> col(std::size_t j) const;

    Matrix transpose() const;
    Matrix mul(const Matrix& rhs) const;
    Matrix select_columns(std::span<const std::size_t> idx) const;
    Matrix vstack(const Matrix& below) const;

    bool operator==(const Matrix& o) const;
    bool validate() const;  // all entries inside the level

private:
    FieldLevel level_;
    std::size_t rows_, cols_;
    std::vector<Elem> e_;
};

struct RrefResult {
    Matrix mat;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over the exact field.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis rows of {y : M y^T = 0}: each returned row is orthogonal to every
/// row of M. Row count = cols(M) - rank(M).
Matrix null_space(const Matrix& m);

/// Every h-subset of columns invertible, h = rows(M). Exhaustive subset
/// enumeration, C(cols, rows) rank checks.
bool is_mds_matrix(const Matrix& m);

/// Columns pairwise distinct and every subset of <= t columns linearly
/// independent over the matrix level.
bool is_t_wise_independent(const Matrix& columns, std::size_t t);

/// Matrix representation map M_alpha: column j holds the coordinates of v[j]
/// over alpha.bottom(); the result is alpha.size() x v.size() over the bottom
/// level and is linear over it.
Matrix matrix_representation(std::span<const Elem> v, const Basis& alpha);

/// |GL_r(F_q)| = prod_{i=0}^{r-1} (q^r - q^i).
std::uint64_t gl_order(std::size_t r, std::uint64_t q);

/// Streams each invertible r x r matrix over the level exactly once.
/// Rejection over all q^(r^2) matrices when that count is <= 2^16, row-by-row
/// extension of independent sets otherwise. Desk cap q^(r^2) <= enumeration_cap().
class GlEnumerator {
public:
    GlEnumerator(FieldLevel level, std::size_t r);
    std::optional<Matrix> next();

private:
    bool advance_dense();
    bool advance_rowwise();

    FieldLevel level_;
    std::size_t r_;
    std::vector<Elem> elems_;
    bool dense_;
    bool done_ = false;
    bool first_ = true;
    std::vector<std::size_t> odo_;           // dense mode: element index per entry
    std::vector<std::vector<Elem>> rows_;    // rowwise mode: chosen rows
    std::vector<std::uint64_t> row_codes_;   // rowwise mode: odometer per row
};

/// Materializes the full group; guarded by |GL| against enumeration_cap().
std::vector<Matrix> enumerate_gl(FieldLevel level, std::size_t r);

}  // namespace sumrank

#endif
