// constructions.hpp — standard graded algebras: trivial extensions T(B) with
// the canonical symmetric form, recognition of trivial extensions, exterior
// skew-group algebras Lambda(V)xG with Frobenius data, and graded abelian
// p-group algebras kP and kP x| E.
#pragma once

#include "gradalg/homology.hpp"

namespace gradalg {

struct GroupRep {
    FieldDesc field;
    std::size_t n = 0;  // matrix size
    std::vector<Mat> generators;
    std::vector<Mat> elements;  // closed under product and inverse
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> mult;
    std::vector<std::size_t> inverse;

    std::size_t order() const { return elements.size(); }
    bool is_abelian() const;

    static GroupRep generate(FieldDesc fd, std::size_t n, const std::vector<Mat>& gens,
                             std::size_t order_bound = 64);
};

// Group algebra kG on the element basis.
AlgebraRep group_algebra(const GroupRep& g);

// Primitive orthogonal idempotents of a commutative semisimple algebra:
// Berlekamp fixed-space splitting over F_p, rational characters over Q
// (exponent-2 groups). nullopt when the method cannot certify completeness.
std::optional<std::vector<std::vector<Scalar>>> split_commutative_semisimple(const AlgebraRep& c);

struct TrivialExtensionResult {
    AlgebraRep algebra;
    Grading grading;  // B in degree 0, B* in degree 1 (superposed with an internal grading of B)
    SymmetrizingForm form;
};

TrivialExtensionResult trivial_extension(const AlgebraRep& b, const std::optional<Grading>& gb);

struct RecognitionResult {
    bool ok = false;
    Mat phi;             // basis change A -> T(A_0) when ok
    std::string reason;  // set when not a trivial extension
};

// Builds phi = (id, t-hat restricted to A_1) and verifies it is an algebra
// isomorphism. Requires degrees in {0,1} and a symmetrizing form of shift 1.
RecognitionResult recognize_trivial_extension(const AlgebraRep& a, const Grading& g, const SymmetrizingForm& t);

struct ExteriorSkewResult {
    AlgebraRep algebra;
    Grading grading;  // wedge degree; kG in degree 0
    SymmetrizingForm form;
    std::optional<NakayamaData> nakayama;  // present when kG splits into characters
};

ExteriorSkewResult exterior_skew(std::size_t n, const GroupRep& grp);

// rho(G) <= SL(V) and (-1)^{dim V + 1} in rho(G), evaluated exactly.
bool exterior_symmetric_predicate(std::size_t n, const GroupRep& grp);

struct PGroupSpec {
    unsigned long p = 2;
    std::vector<unsigned> invariants;       // cyclic factors Z/p^{r_i}
    std::optional<GroupRep> action;         // E acting on an elementary abelian P
};

// Truncated polynomial model k[x_1..x_r]/(x_i^{p^{r_i}}) with deg x_i = 1;
// asserted against the associated graded of the honest group algebra kP.
std::pair<AlgebraRep, Grading> abelian_pgroup_algebra(FieldDesc fd, const PGroupSpec& spec);

// kP x| E with kE in degree 0 and an E-stable complement V of J^2 in J in
// degree 1 (complement chosen by averaging over E).
std::pair<AlgebraRep, Grading> pgroup_semidirect(FieldDesc fd, const PGroupSpec& spec);

// Shared check: t(ab) = t(ba) on all pairs and the pairing t(ab) nondegenerate.
bool is_symmetrizing(const AlgebraRep& a, const std::vector<Scalar>& t);

}  // namespace gradalg
