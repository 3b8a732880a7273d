#pragma once

#include "cobkit/cochains.hpp"

namespace cobkit {

inline constexpr size_t kDefaultTopSimplexBudget = 5000;

// Cup-product pairing on middle-degree cohomology of a closed oriented
// 4k-complex, on an integral (Smith-normal-form derived) basis.
struct IntersectionForm {
    IntMat matrix;                   // symmetric Gram matrix
    std::vector<std::vector<Int>> basis;  // representative integral cocycles
};

IntersectionForm intersection_form(const SimplicialComplex& c);

// Signature of a symmetric matrix by exact rational congruence diagonalization.
long signature_of_symmetric(const IntMat& m);

// Signature of the middle cup pairing; 0 for an empty form. The pairing is
// evaluated on the full cocycle lattice (coboundaries land in the radical and
// only contribute zero diagonal entries). Throws BadDimension unless the
// dimension is divisible by four, NotClosed / NotOriented as appropriate.
long signature(const SimplicialComplex& c);

struct CharacteristicClasses {
    std::vector<CochainMod2> wu;              // v_0 .. v_{floor(n/2)}
    std::vector<CochainMod2> stiefel_whitney; // w_0 .. w_n
    std::vector<bool> sw_trivial;             // w_k = 0 in cohomology?
    bool spin = false;
    bool orientable = false;
};

// Wu classes from <v_k ~ x, [M]> = <Sq^k x, [M]> solved degreewise over GF(2),
// then w = Sq(v). Requires a closed complex within the top-simplex budget.
CharacteristicClasses wu_classes(const SimplicialComplex& c,
                                 size_t budget = kDefaultTopSimplexBudget);

// w_1 = 0 and w_2 = 0. Closed oriented 4-complexes take the even-intersection-
// form fast path (Wu's identity in the middle degree).
bool spin_check(const SimplicialComplex& c, size_t budget = kDefaultTopSimplexBudget);

// Evenness of the mod-2 middle pairing of a closed 4-complex.
bool mod2_intersection_form_even(const SimplicialComplex& c);

}  // namespace cobkit
