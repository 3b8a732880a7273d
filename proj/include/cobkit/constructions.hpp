#pragma once

#include <string>

#include "cobkit/simplicial_complex.hpp"

namespace cobkit {

// Standard corpus, addressed by identifiers such as "sphere(3)", "disk(2)",
// "point", "torus2", "rp2", "rp3", "cp2" and nested "product(a,b)".
// Throws UnknownCorpusName.
SimplicialComplex standard(const std::string& name);

// Staircase (shuffle) triangulation of |a| x |b| on the product vertex order.
SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b);

// The double 2W = boundary of W x [0,1], a closed complex. Oriented when the
// input is orientable. Throws ClosedInput when W has no boundary.
SimplicialComplex double_complex(const SimplicialComplex& w);

// Connected sum of closed oriented complexes of equal dimension: removes the
// lexicographically first facet of each and glues the exposed boundary spheres
// along the lexicographically smallest orientation-reversing vertex matching.
SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b);

// True when every ridge with two cofaces receives cancelling induced signs.
bool orientation_consistent(const SimplicialComplex& c);

}  // namespace cobkit
