// algebra.hpp — finite-dimensional associative algebras as structure-constant
// tables, quiver presentations with relations, Jacobson radical, radical and
// socle series, center.
//
// Conventions (left modules throughout): P_V = A e_V. A path written
// ["a","b"] means "apply a, then b" and equals the algebra product b*a, so an
// arrow s -> t lies in e_t A e_s.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradalg/matrix.hpp"

namespace gradalg {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

struct AlgebraRep {
    FieldDesc field;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    // table[i*dim+j] holds b_i * b_j as a sparse combination of basis elements.
    std::vector<SparseVec> table;
    std::vector<Scalar> unit;
    // Primitive orthogonal idempotents summing to the unit, indexed by simple label.
    std::optional<std::vector<std::pair<std::string, std::vector<Scalar>>>> idempotents;
    // Set by builders that know the radical (arrow ideal, construction-specific).
    std::optional<Mat> known_radical;

    const SparseVec& prod_row(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
    Scalar structure(std::size_t i, std::size_t j, std::size_t k) const;

    std::vector<Scalar> zero_vec() const { return std::vector<Scalar>(dim, Scalar::zero(field)); }
    std::vector<Scalar> basis_vec(std::size_t i) const;
    std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    Mat left_mult(const std::vector<Scalar>& x) const;   // y -> x*y
    Mat right_mult(const std::vector<Scalar>& x) const;  // y -> y*x

    std::size_t simple_count() const;
    const std::vector<Scalar>& idempotent(std::size_t v) const;
    const std::string& simple_label(std::size_t v) const;

    // Build from a dense dim^3 table c with b_i b_j = sum_k c[(i*dim+j)*dim+k] b_k.
    static AlgebraRep from_dense(FieldDesc fd, std::vector<std::string> labels,
                                 const std::vector<Scalar>& dense, std::vector<Scalar> unit);
};

struct Arrow {
    std::string name, source, target;
    long degree = 0;
};

struct Relation {
    // Each term: coefficient and a path as an apply-ordered arrow-name list.
    std::vector<std::pair<Scalar, std::vector<std::string>>> terms;
};

struct QuiverPresentation {
    FieldDesc field;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::size_t path_length_bound = 1;
};

struct PresentedAlgebra {
    AlgebraRep algebra;
    std::vector<long> degrees;            // induced by arrow degrees; basis paths are homogeneous
    std::vector<std::size_t> path_length; // length of each basis path
};

// Basis = reduced path monomials modulo the relation ideal (linear algebra on
// the span of paths up to the bound; relations must be admissible). Throws
// not_finite_dimensional when paths at the bound fail to vanish.
PresentedAlgebra build_from_presentation(const QuiverPresentation& p);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Associativity on all basis triples, two-sided unit, idempotent axioms.
ValidationReport validate_algebra(const AlgebraRep& a);

// Basis of the Jacobson radical (largest nilpotent ideal). Uses the builder's
// seed when present, otherwise the trace form, valid over Q or for p > dim.
Mat radical(const AlgebraRep& a);

struct RadicalSeries {
    std::vector<Mat> powers;  // A = J^0, J^1, ..., 0
    std::vector<std::size_t> dims() const;
};

RadicalSeries radical_series(const AlgebraRep& a);

// soc^i = {x : J^i x = 0} (left annihilator convention); increasing from 0 to A.
std::vector<Mat> socle_series(const AlgebraRep& a);

Mat center(const AlgebraRep& a);

// Columns of m, each split into homogeneous parts, re-spanned.
Mat homogeneous_span(const Mat& m, const std::vector<long>& degrees);

}  // namespace gradalg
