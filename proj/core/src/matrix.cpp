#include "sumrank/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumrank {

namespace {

using u128 = unsigned __int128;

void require_same_level(const Matrix& a, const Matrix& b) {
    if (a.level() != b.level()) throw std::invalid_argument("matrices live on different levels");
}

// next k-subset of {0..n-1} in lexicographic order; false when exhausted
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

}  // namespace

Matrix::Matrix(FieldLevel level, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : level_(level), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw std::invalid_argument("entry count mismatch");
}

Matrix Matrix::identity(FieldLevel level, std::size_t n) {
    Matrix m(level, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
    return std::vector<Elem>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

std::vector<Elem> Matrix::col(std::size_t j) const {
    std::vector<Elem> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(level_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    require_same_level(*this, rhs);
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    const FieldContext& f = ctx();
    Matrix out(level_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.set(i, j, f.add(out.at(i, j), f.mul(a, rhs.at(k, j))));
        }
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
    Matrix out(level_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw std::invalid_argument("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out.set(i, j, at(i, idx[j]));
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    require_same_level(*this, below);
    if (cols_ != below.cols_) throw std::invalid_argument("column count mismatch in vstack");
    Matrix out(level_, rows_ + below.rows_, cols_);
    std::copy(e_.begin(), e_.end(), out.e_.begin());
    std::copy(below.e_.begin(), below.e_.end(), out.e_.begin() + e_.size());
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return level_ == o.level_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::validate() const {
    for (Elem v : e_)
        if (!level_.contains(v)) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    const FieldContext& f = m.ctx();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < r.cols() && prow < r.rows(); ++col) {
        std::size_t piv = prow;
        while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
        if (piv == r.rows()) continue;
        if (piv != prow)
            for (std::size_t j = 0; j < r.cols(); ++j) {
                Elem t = r.at(prow, j);
                r.set(prow, j, r.at(piv, j));
                r.set(piv, j, t);
            }
        const Elem li = f.inv(r.at(prow, col));
        for (std::size_t j = col; j < r.cols(); ++j) r.set(prow, j, f.mul(r.at(prow, j), li));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == prow) continue;
            const Elem c = r.at(i, col);
            if (!c) continue;
            for (std::size_t j = col; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(prow, j))));
        }
        pivots.push_back(col);
        ++prow;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix null_space(const Matrix& m) {
    const FieldContext& f = m.ctx();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix basis(m.level(), m.cols() - r.rank, m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.set(out, free, 1);
        for (std::size_t i = 0; i < r.rank; ++i)
            basis.set(out, r.pivots[i], f.neg(r.mat.at(i, free)));
        ++out;
    }
    return basis;
}

bool is_mds_matrix(const Matrix& m) {
    const std::size_t h = m.rows();
    if (h > m.cols()) throw std::invalid_argument("is_mds_matrix needs rows <= cols");
    if (h == 0) return true;
    std::vector<std::size_t> idx(h);
    for (std::size_t i = 0; i < h; ++i) idx[i] = i;
    do {
        if (rank(m.select_columns(idx)) != h) return false;
    } while (next_combination(idx, m.cols()));
    return true;
}

bool is_t_wise_independent(const Matrix& columns, std::size_t t) {
    if (t == 0) throw std::invalid_argument("t must be positive");
    const std::size_t n = columns.cols();
    if (n == 0) return true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (columns.col(i) == columns.col(j)) return false;
    const std::size_t k = std::min(t, n);
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
        if (rank(columns.select_columns(idx)) != k) return false;
    } while (next_combination(idx, n));
    return true;
}

Matrix matrix_representation(std::span<const Elem> v, const Basis& alpha) {
    Matrix m(alpha.bottom(), alpha.size(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        std::vector<Elem> c = alpha.coords(v[j]);
        for (std::size_t i = 0; i < c.size(); ++i) m.set(i, j, c[i]);
    }
    return m;
}

std::uint64_t gl_order(std::size_t r, std::uint64_t q) {
    u128 qr = 1;
    for (std::size_t i = 0; i < r; ++i) {
        qr *= q;
        if (qr > (u128(1) << 62)) throw std::overflow_error("q^r too large");
    }
    u128 total = 1;
    u128 qi = 1;
    for (std::size_t i = 0; i < r; ++i) {
        total *= qr - qi;
        qi *= q;
        if (total > (u128(1) << 62)) throw std::overflow_error("|GL_r(F_q)| too large");
    }
    return std::uint64_t(total);
}

GlEnumerator::GlEnumerator(FieldLevel level, std::size_t r) : level_(level), r_(r) {
    if (r == 0) throw std::invalid_argument("r must be positive");
    const std::uint64_t q = level.cardinality();
    u128 space = 1;
    for (std::size_t i = 0; i < r * r; ++i) {
        space *= q;
        if (space > enumeration_cap())
            throw CapError("GL enumeration space q^(r^2) exceeds the desk-scale cap");
    }
    elems_ = level.elements();
    dense_ = space <= (u128(1) << 16);
    if (dense_) {
        odo_.assign(r * r, 0);
    } else {
        rows_.clear();
        row_codes_.clear();
    }
}

namespace {

std::vector<Elem> decode_row(std::uint64_t code, std::size_t r, const std::vector<Elem>& elems) {
    std::vector<Elem> row(r);
    const std::uint64_t q = elems.size();
    for (std::size_t j = 0; j < r; ++j) {
        row[j] = elems[code % q];
        code /= q;
    }
    return row;
}

bool rows_independent(FieldLevel level, const std::vector<std::vector<Elem>>& rows) {
    Matrix m(level, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    return rank(m) == rows.size();
}

}  // namespace

bool GlEnumerator::advance_dense() {
    // odometer over all entries; caller filters invertibility
    if (first_) {
        first_ = false;
        return true;
    }
    const std::size_t q = elems_.size();
    for (std::size_t i = 0; i < odo_.size(); ++i) {
        if (++odo_[i] < q) return true;
        odo_[i] = 0;
    }
    return false;
}

bool GlEnumerator::advance_rowwise() {
    const std::uint64_t q = elems_.size();
    u128 qr128 = 1;
    for (std::size_t i = 0; i < r_; ++i) qr128 *= q;
    const std::uint64_t qr = std::uint64_t(qr128);

    std::size_t lvl;
    std::uint64_t start;
    if (first_) {
        first_ = false;
        lvl = 0;
        start = 0;
        rows_.clear();
        row_codes_.clear();
    } else {
        lvl = r_ - 1;
        rows_.pop_back();
        start = row_codes_.back() + 1;
        row_codes_.pop_back();
    }
    while (true) {
        bool placed = false;
        for (std::uint64_t code = start; code < qr; ++code) {
            auto row = decode_row(code, r_, elems_);
            rows_.push_back(row);
            if (rows_independent(level_, rows_)) {
                row_codes_.push_back(code);
                placed = true;
                break;
            }
            rows_.pop_back();
        }
        if (placed) {
            if (lvl + 1 == r_) return true;
            ++lvl;
            start = 0;
        } else {
            if (lvl == 0) return false;
            --lvl;
            rows_.pop_back();
            start = row_codes_.back() + 1;
            row_codes_.pop_back();
        }
    }
}

std::optional<Matrix> GlEnumerator::next() {
    if (done_) return std::nullopt;
    if (dense_) {
        while (advance_dense()) {
            Matrix m(level_, r_, r_);
            for (std::size_t i = 0; i < r_; ++i)
                for (std::size_t j = 0; j < r_; ++j) m.set(i, j, elems_[odo_[i * r_ + j]]);
            if (rank(m) == r_) return m;
        }
        done_ = true;
        return std::nullopt;
    }
    if (!advance_rowwise()) {
        done_ = true;
        return std::nullopt;
    }
    Matrix m(level_, r_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j) m.set(i, j, rows_[i][j]);
    return m;
}

std::vector<Matrix> enumerate_gl(FieldLevel level, std::size_t r) {
    const std::uint64_t order = gl_order(r, level.cardinality());
    if (order > enumeration_cap()) throw CapError("|GL_r(F_q)| exceeds the desk-scale cap");
    std::vector<Matrix> out;
    out.reserve(order);
    GlEnumerator en(level, r);
    while (auto m = en.next()) out.push_back(std::move(*m));
    return out;
}

}  // namespace sumrank
