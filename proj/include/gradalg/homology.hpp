// homology.hpp — homological data for split basic graded algebras: radical
// layers of projectives, graded Ext^1 quivers, graded Cartan matrices and the
// determinant identity, Nakayama data, symmetrizing forms, minimal graded
// resolutions, and cyclic cotangent tensor powers.
//
// Graded shift convention: (M<i>)_j = M_{i+j}, so S<-d> is concentrated in
// degree d. dim Ext^1(S_V, S_W<-d>) equals the degree-d part of e_W (J/J^2) e_V.
#pragma once

#include <cstdint>
#include <map>

#include "gradalg/grading.hpp"
#include "gradalg/laurent.hpp"

namespace gradalg {

// (simple index, internal degree) -> multiplicity
using GradedMultTable = std::map<std::pair<std::size_t, long>, std::size_t>;

struct ExtQuiver {
    std::vector<std::string> simples;
    // (i, j) -> {d: dim Ext^1(S_i, S_j<-d>)}
    std::map<std::pair<std::size_t, std::size_t>, std::map<long, std::size_t>> ext;

    std::size_t total_multiplicity() const;
    std::size_t mult(std::size_t i, std::size_t j) const;  // ungraded dim Ext^1(S_i, S_j)
};

struct CartanMatrix {
    std::vector<std::string> simples;
    std::vector<std::vector<Laurent>> entries;  // entries[V][W] = C(V,W)

    Laurent det() const { return laurent_det(entries); }
};

struct NakayamaData {
    std::vector<std::size_t> perm;  // perm[V] = nu(V), soc P_V ~ S_{nu(V)}
    long n = 0;                     // n_A = sup - inf of occupied degrees
    int sign() const;               // epsilon(nu)
};

struct SymmetrizingForm {
    std::vector<Scalar> t;           // coefficients of the functional on the basis
    std::optional<long> top_degree;  // set when the form was found graded
};

enum class SymFormStatus { present, absent, inconclusive };

struct SymFormResult {
    SymFormStatus status = SymFormStatus::inconclusive;
    std::optional<SymmetrizingForm> witness;
    std::string note;
};

// Throws not_split unless dim e_V (A/J) e_W = delta_{VW}.
void require_split_basic(const AlgebraRep& a);
bool is_indecomposable(const AlgebraRep& a);

// Homogeneous basis of e_V A e_W as columns.
Mat peirce_component(const AlgebraRep& a, std::size_t v, std::size_t w);

// Per simple V, per radical layer m: decomposition of rad^m P_V / rad^{m+1} P_V
// into graded simples.
std::vector<std::vector<GradedMultTable>> projective_layers(const AlgebraRep& a, const Grading& g);

ExtQuiver ext1_graded(const AlgebraRep& a, const Grading& g);

// C(V,W) = graded dimension series of e_V A e_W. Requires idempotents but not
// splitness (the Peirce series is defined for any complete orthogonal family).
CartanMatrix cartan_graded(const AlgebraRep& a, const Grading& g);

bool check_selfinjective(const AlgebraRep& a);

NakayamaData nakayama(const AlgebraRep& a, const Grading& g);

struct CartanIdentityReport {
    std::vector<std::string> verified;
    std::vector<std::string> failures;
    Laurent det;
    bool ok() const { return failures.empty(); }
};

// Verifies C(V,W) = q^n bar(C(W, nu V)) entrywise and, when A_{<0} = 0, the
// determinant shape c + ... + eps(nu) c q^{n r} with c = det Cartan(A_0).
CartanIdentityReport cartan_identity_check(const AlgebraRep& a, const Grading& g);

SymFormResult find_symmetrizing_form(const AlgebraRep& a, const std::optional<Grading>& g,
                                     std::uint64_t seed = 0);

struct Resolution {
    // tables[m] = projective cover data of Omega^m S_V as (W, d) multiplicities
    std::vector<GradedMultTable> tables;
    bool complete = false;  // the syzygy vanished within the cap
    std::size_t length() const { return tables.empty() ? 0 : tables.size() - 1; }
};

Resolution minimal_graded_resolution(const AlgebraRep& a, const Grading& g, std::size_t v, std::size_t cap);

struct GlobalDim {
    bool finite = false;
    std::size_t value = 0;  // the dimension, or the cap when not finite

    std::string str() const {
        return finite ? std::to_string(value) : ">= " + std::to_string(value);
    }
};

GlobalDim global_dimension(const AlgebraRep& a, std::size_t cap);

struct ExtVanishingReport {
    std::size_t gldim_zero = 0;  // d = gldim(A_0)
    std::vector<std::string> checked;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// For simples concentrated in degree 0: graded Ext^i(V, W<0>) = 0 for
// d+1 <= i <= cap, the a=b=0 instance of the vanishing bound.
ExtVanishingReport ext_vanishing_bound_check(const AlgebraRep& a, const Grading& g, std::size_t cap);

// Per n = 1..nmax: (closed-walk count in the Ext quiver, direct dimension of
// the diagonal part of the n-fold tensor power of J/J^2 over A). Both exact.
std::vector<std::pair<long long, long long>> cyclic_cotangent_dims(const AlgebraRep& a, const Grading& g,
                                                                   std::size_t nmax);

// A bimodule presented by explicit left/right action matrices per algebra
// basis element.
struct Bimodule {
    FieldDesc field;
    std::size_t dim = 0;
    std::vector<Mat> left;   // left[i]: action of b_i on the left
    std::vector<Mat> right;  // right[i]: action of b_i on the right
};

Bimodule radical_quotient_bimodule(const AlgebraRep& a);  // J/J^2
Bimodule tensor_over_algebra(const AlgebraRep& a, const Bimodule& x, const Bimodule& y);

}  // namespace gradalg
