#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobkit/errors.hpp"

namespace cobkit {

using Vertex = int;

// A simplex is a strictly increasing list of vertex indices.
using Simplex = std::vector<Vertex>;

Simplex sorted_simplex(Simplex s);

// Finite abstract simplicial complex given by its maximal simplices.
// Complexes are immutable after validation; all operations on them are pure.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<Simplex> facets;  // each sorted, list kept in lexicographic order
    // Optional orientation: sign per facet, aligned with `facets`. Only pure
    // complexes carry orientations.
    std::optional<std::vector<int>> orientation;
    std::string name;

    // Max facet cardinality minus one; -1 for the empty complex.
    int dimension() const;
    bool is_pure() const;
};

struct ManifoldFlags {
    bool is_closed = false;
    bool is_pseudomanifold = false;
    std::optional<bool> is_orientable;
    std::vector<SimplicialComplex> boundary_components;
};

// Normalizes facet order, checks index ranges, facet distinctness and the
// no-facet-contains-another rule. Throws MalformedComplex.
void normalize_and_check(SimplicialComplex& c);

// Full validation: closedness, pseudomanifold property, orientability (when
// the complex is a pseudomanifold) and the boundary decomposition.
ManifoldFlags validate(const SimplicialComplex& c);

// Ridges ((n-1)-simplices) lying in exactly one facet, with vertex labels of c.
std::vector<Simplex> boundary_ridges(const SimplicialComplex& c);

// The boundary subcomplex as a standalone complex, keeping c's vertex labels.
SimplicialComplex boundary_complex(const SimplicialComplex& c);

// Consistent orientation via propagation across interior ridges, or nullopt if
// none exists. Works for pseudomanifolds with or without boundary; throws
// NotPseudomanifold otherwise. Deterministic: each adjacency component is
// rooted at its lexicographically first facet with sign +1.
std::optional<SimplicialComplex> orient(const SimplicialComplex& c);

// Complex with every orientation sign flipped. Throws NotOriented.
SimplicialComplex reverse_orientation(SimplicialComplex c);

// Renumbers vertices to 0..k-1 preserving order, dropping unused ones.
SimplicialComplex compactify_labels(const SimplicialComplex& c);

}  // namespace cobkit
