// derivations.hpp — derivation spaces and inner derivations, the Lie-algebra
// proxy for the identity components of Aut/Int/Out. Over F_p the Lie
// dimension can exceed the group dimension (non-reduced automorphism
// schemes); reports must always carry the field.
#pragma once

#include "gradalg/algebra.hpp"

namespace gradalg {

struct DerivationSpace {
    std::vector<Mat> basis;  // dim x dim matrices D with D(ab) = D(a)b + aD(b)
    std::size_t dim() const { return basis.size(); }
};

DerivationSpace derivations(const AlgebraRep& a);
DerivationSpace inner_derivations(const AlgebraRep& a);

// dim derivations - dim inner derivations (infinitesimal proxy for Out^0).
std::size_t out_lie_dim(const AlgebraRep& a);

}  // namespace gradalg
