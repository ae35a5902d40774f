// matrix.hpp — dense matrices over an exact field, Gaussian elimination,
// and column-span utilities. Subspaces are passed around as matrices whose
// columns form a basis.
#pragma once

#include <optional>
#include <vector>

#include "gradalg/field.hpp"

namespace gradalg {

class Mat {
public:
    Mat() : fd_(FieldDesc::rational()) {}
    Mat(FieldDesc fd, std::size_t rows, std::size_t cols)
        : fd_(fd), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(fd)) {}

    static Mat identity(FieldDesc fd, std::size_t n);
    static Mat from_columns(FieldDesc fd, std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDesc& field() const { return fd_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Scalar> column(std::size_t j) const;
    std::vector<Scalar> row(std::size_t i) const;
    void set_column(std::size_t j, const std::vector<Scalar>& v);

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    bool operator==(const Mat& o) const;
    Mat transpose() const;
    bool is_zero() const;

    // Append columns of o (same row count).
    Mat hcat(const Mat& o) const;

private:
    FieldDesc fd_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

std::vector<Scalar> mat_vec(const Mat& m, const std::vector<Scalar>& v);

std::size_t mat_rank(const Mat& m);
Scalar mat_det(const Mat& m);
// Columns form a basis of the right kernel {x : m x = 0}.
Mat mat_nullspace(const Mat& m);
// Some x with m x = b, or nullopt when inconsistent. b must have m.rows() rows.
std::optional<Mat> mat_solve(const Mat& m, const Mat& b);
std::optional<std::vector<Scalar>> mat_solve_vec(const Mat& m, const std::vector<Scalar>& b);

// Column-span utilities.
Mat col_basis(const Mat& m);  // independent columns spanning the column space
bool span_contains(const Mat& basis, const std::vector<Scalar>& v);
bool span_subset(const Mat& a, const Mat& b);  // col(a) subseteq col(b)
bool span_equal(const Mat& a, const Mat& b);
Mat span_sum(const Mat& a, const Mat& b);
Mat span_intersect(const Mat& a, const Mat& b);

// Sparse vectors as coordinate -> value maps, and an echelon span over them.
// Rows keep their pivot as the smallest coordinate, so reduction sweeps
// coordinates in ascending order and terminates without back-substitution.
using SparseCoords = std::map<std::size_t, Scalar>;

void sparse_axpy(SparseCoords& target, const Scalar& factor, const SparseCoords& source);

class SparseSpan {
public:
    explicit SparseSpan(FieldDesc fd) : fd_(fd) {}

    bool insert(SparseCoords v);
    SparseCoords reduce(SparseCoords v) const;
    bool contains(const SparseCoords& v) const { return reduce(v).empty(); }
    bool is_pivot(std::size_t coord) const { return rows_.count(coord) != 0; }
    std::size_t dim() const { return rows_.size(); }

private:
    FieldDesc fd_;
    std::map<std::size_t, SparseCoords> rows_;  // pivot -> normalized row
};

// Grows a subspace one vector at a time, keeping rows in echelon form.
// reduce() returns the residue of a vector modulo the current span.
class IncrementalSpan {
public:
    IncrementalSpan(FieldDesc fd, std::size_t ambient) : fd_(fd), ambient_(ambient) {}

    // Returns true if v enlarged the span.
    bool insert(const std::vector<Scalar>& v);
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(const std::vector<Scalar>& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Mat basis_columns() const;  // echelon rows as column vectors

private:
    FieldDesc fd_;
    std::size_t ambient_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace gradalg
