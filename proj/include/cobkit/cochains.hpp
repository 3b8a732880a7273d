#pragma once

#include "cobkit/homology.hpp"

namespace cobkit {

// Mod-2 simplicial cochain, indexed by the degree-k simplex list of a fixed
// ChainComplexData.
struct CochainMod2 {
    int degree = 0;
    BitVec values;

    bool is_zero() const { return !values.any(); }
};

CochainMod2 zero_cochain(const ChainComplexData& ccd, int degree);
CochainMod2 unit_cochain(const ChainComplexData& ccd);  // all 0-simplices -> 1

// Coboundary (transpose of the boundary operator, mod 2).
CochainMod2 coboundary(const CochainMod2& a, const ChainComplexData& ccd);

// Alexander-Whitney cup product on the global vertex order.
// Throws DegreeOverflow if deg a + deg b exceeds the complex dimension.
CochainMod2 cup_product(const CochainMod2& a, const CochainMod2& b, const ChainComplexData& ccd);

// Steenrod cup-i product. Negative i or an out-of-range target degree yields
// the zero cochain.
CochainMod2 cup_i_product(const CochainMod2& a, const CochainMod2& b, int i,
                          const ChainComplexData& ccd);

// Cochain-level Steenrod square Sq^k(a) = a cup_{deg a - k} a.
CochainMod2 steenrod_square(int k, const CochainMod2& a, const ChainComplexData& ccd);

// Evaluation against the mod-2 fundamental class (sum over all top simplices);
// the cochain must have top degree.
int evaluate_on_fundamental(const CochainMod2& a, const ChainComplexData& ccd);

// Mod-2 cohomology of a complex: representative cocycles per degree together
// with coboundary-space membership tests.
class Mod2Cohomology {
public:
    explicit Mod2Cohomology(const ChainComplexData& ccd);

    int dimension() const { return dim_; }
    const std::vector<CochainMod2>& basis(int degree) const;
    long betti(int degree) const;

    bool is_cocycle(const CochainMod2& a, const ChainComplexData& ccd) const;
    bool is_coboundary(const CochainMod2& a) const;
    // True when a and b are cohomologous.
    bool same_class(const CochainMod2& a, const CochainMod2& b) const;

private:
    int dim_;
    std::vector<std::vector<CochainMod2>> basis_;
    std::vector<Gf2Eliminator> coboundaries_;
};

}  // namespace cobkit
