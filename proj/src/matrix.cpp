#include "gradalg/matrix.hpp"

namespace gradalg {

Mat Mat::identity(FieldDesc fd, std::size_t n) {
    Mat m(fd, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(fd);
    return m;
}

Mat Mat::from_columns(FieldDesc fd, std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
    Mat m(fd, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw alg_error(errc::shape_error, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Scalar> Mat::column(std::size_t j) const {
    std::vector<Scalar> v(rows_, Scalar::zero(fd_));
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Scalar> Mat::row(std::size_t i) const {
    std::vector<Scalar> v(cols_, Scalar::zero(fd_));
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Mat::set_column(std::size_t j, const std::vector<Scalar>& v) {
    if (v.size() != rows_) throw alg_error(errc::shape_error, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::operator*(const Mat& o) const {
    if (fd_ != o.fd_) throw alg_error(errc::field_mismatch, "matrix product");
    if (cols_ != o.rows_) throw alg_error(errc::shape_error, "matrix product shape");
    Mat r(fd_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (fd_ != o.fd_) throw alg_error(errc::field_mismatch, "matrix sum");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw alg_error(errc::shape_error, "matrix sum shape");
    Mat r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (fd_ != o.fd_) throw alg_error(errc::field_mismatch, "matrix difference");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw alg_error(errc::shape_error, "matrix difference shape");
    Mat r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return fd_ == o.fd_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Mat Mat::transpose() const {
    Mat r(fd_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::hcat(const Mat& o) const {
    if (fd_ != o.fd_) throw alg_error(errc::field_mismatch, "hcat");
    if (rows_ != o.rows_) throw alg_error(errc::shape_error, "hcat row mismatch");
    Mat r(fd_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

std::vector<Scalar> mat_vec(const Mat& m, const std::vector<Scalar>& v) {
    if (v.size() != m.cols()) throw alg_error(errc::shape_error, "mat_vec shape");
    std::vector<Scalar> r(m.rows(), Scalar::zero(m.field()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& a = m.at(i, j);
            if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
        }
    return r;
}

namespace {

// In-place reduced row echelon form. Returns pivot columns.
std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t mat_rank(const Mat& m) {
    Mat w = m;
    return rref(w).size();
}

Scalar mat_det(const Mat& m) {
    if (m.rows() != m.cols()) throw alg_error(errc::shape_error, "determinant of non-square matrix");
    Mat w = m;
    const std::size_t n = w.rows();
    Scalar det = Scalar::one(m.field());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && w.at(sel, c).is_zero()) ++sel;
        if (sel == n) return Scalar::zero(m.field());
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(sel, j), w.at(c, j));
            det = -det;
        }
        det *= w.at(c, c);
        Scalar inv = w.at(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            Scalar f = w.at(i, c) * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return det;
}

Mat mat_nullspace(const Mat& m) {
    Mat w = m;
    std::vector<std::size_t> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat ns(m.field(), m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        ns.at(f, k) = Scalar::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            ns.at(pivots[r], k) = -w.at(r, f);
    }
    return ns;
}

std::optional<Mat> mat_solve(const Mat& m, const Mat& b) {
    if (b.rows() != m.rows()) throw alg_error(errc::shape_error, "mat_solve: row count mismatch");
    Mat aug = m.hcat(b);
    std::vector<std::size_t> pivots = rref(aug);
    // Inconsistent iff a pivot lands in the b block.
    for (std::size_t c : pivots)
        if (c >= m.cols()) return std::nullopt;
    Mat x(m.field(), m.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = aug.at(r, m.cols() + j);
    return x;
}

std::optional<std::vector<Scalar>> mat_solve_vec(const Mat& m, const std::vector<Scalar>& b) {
    Mat bb = Mat::from_columns(m.field(), m.rows(), {b});
    auto x = mat_solve(m, bb);
    if (!x) return std::nullopt;
    return x->column(0);
}

Mat col_basis(const Mat& m) {
    Mat w = m;
    std::vector<std::size_t> pivots = rref(w);
    Mat r(m.field(), m.rows(), pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) r.at(i, k) = m.at(i, pivots[k]);
    return r;
}

bool span_contains(const Mat& basis, const std::vector<Scalar>& v) {
    return mat_solve_vec(basis, v).has_value();
}

bool span_subset(const Mat& a, const Mat& b) {
    return mat_solve(b, a).has_value();
}

bool span_equal(const Mat& a, const Mat& b) {
    return span_subset(a, b) && span_subset(b, a);
}

Mat span_sum(const Mat& a, const Mat& b) {
    return col_basis(a.hcat(b));
}

bool IncrementalSpan::insert(const std::vector<Scalar>& v) {
    std::vector<Scalar> r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) ++p;
    if (p == ambient_) return false;
    Scalar inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    // Back-eliminate the new pivot from existing rows.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar f = rows_[k][p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) rows_[k][j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::vector<Scalar> IncrementalSpan::reduce(std::vector<Scalar> v) const {
    if (v.size() != ambient_) throw alg_error(errc::shape_error, "IncrementalSpan::reduce");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar f = v[pivots_[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[k][j];
    }
    return v;
}

bool IncrementalSpan::contains(const std::vector<Scalar>& v) const {
    std::vector<Scalar> r = reduce(v);
    for (auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

Mat IncrementalSpan::basis_columns() const {
    Mat m(fd_, ambient_, rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k)
        for (std::size_t i = 0; i < ambient_; ++i) m.at(i, k) = rows_[k][i];
    return m;
}

Mat span_intersect(const Mat& a, const Mat& b) {
    // Kernel of [a | -b] gives pairs (x, y) with a x = b y.
    if (a.cols() == 0 || b.cols() == 0) return Mat(a.field(), a.rows(), 0);
    Mat neg = b;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) neg.at(i, j) = -b.at(i, j);
    Mat ker = mat_nullspace(a.hcat(neg));
    Mat gens(a.field(), a.rows(), ker.cols());
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
        for (std::size_t j = 0; j < a.cols(); ++j) x[j] = ker.at(j, k);
        gens.set_column(k, mat_vec(a, x));
    }
    return col_basis(gens);
}

}  // namespace gradalg
