// grading.hpp — integer gradings on algebras: validation, degree profiles,
// degree-zero subalgebras, associated graded of the radical filtration, and
// conjugation by shift vectors.
//
// A grading is stored as one degree per basis element, so every basis element
// must be homogeneous. For a basis element b in the Peirce component
// e_V A e_W, regrading by shifts d sends deg(b) to deg(b) + d(W) - d(V).
#pragma once

#include <map>

#include "gradalg/algebra.hpp"

namespace gradalg {

using Grading = std::vector<long>;

struct ShiftVector {
    std::map<std::string, long> d;  // per simple label, total
};

ValidationReport validate_grading(const AlgebraRep& a, const Grading& g);
void require_valid_grading(const AlgebraRep& a, const Grading& g);

Grading trivial_grading(const AlgebraRep& a);

struct DegreeProfile {
    std::map<long, std::size_t> dims;
    long min_degree = 0, max_degree = 0;
    long n() const { return max_degree - min_degree; }  // n_A = sup - inf
};

DegreeProfile degree_profile(const AlgebraRep& a, const Grading& g);

struct DegreeZeroPart {
    AlgebraRep algebra;
    std::vector<std::size_t> basis_index;  // index into the ambient basis
};

DegreeZeroPart degree_zero_part(const AlgebraRep& a, const Grading& g);

// (+) of J^i/J^{i+1} with the induced multiplication, layer i in degree i.
std::pair<AlgebraRep, Grading> associated_graded(const AlgebraRep& a);

// Peirce type (V, W) of a basis element b with e_V b e_W = b, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> peirce_type(const AlgebraRep& a, std::size_t k);

Grading regrade_by_shifts(const AlgebraRep& a, const Grading& g, const ShiftVector& d);

}  // namespace gradalg
