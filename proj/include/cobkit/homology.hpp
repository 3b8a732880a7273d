#pragma once

#include <vector>

#include "cobkit/matrices.hpp"
#include "cobkit/simplicial_complex.hpp"
#include "cobkit/smith.hpp"

namespace cobkit {

// Graded boundary data of a complex: all faces per degree (lexicographically
// ordered) and the boundary operators with the alternating-sign convention on
// the global vertex order.
struct ChainComplexData {
    int dimension = -1;
    std::vector<std::vector<Simplex>> simplices;  // simplices[k] = all k-faces
    std::vector<SparseIntMat> boundary;           // boundary[k] : C_k -> C_{k-1}, k >= 1
    std::vector<size_t> f;                        // face counts per degree

    // Index of a k-simplex in simplices[k]; -1 when absent.
    int index_of(int k, const Simplex& s) const;
};

ChainComplexData chain_complex(const SimplicialComplex& c);

enum class Field { rational, mod2 };

struct HomologySummary {
    std::vector<long> betti_rational;
    std::vector<long> betti_mod2;
    std::vector<std::vector<Int>> torsion;  // per degree, elementary divisors > 1
    long euler_characteristic = 0;
    BitVec fundamental_class_mod2;  // all top simplices
};

HomologySummary homology(const ChainComplexData& ccd);
HomologySummary homology(const SimplicialComplex& c);

// Euler characteristic from the f-vector, asserted against the alternating sum
// of rational Betti numbers.
long euler_characteristic(const SimplicialComplex& c);

// Kervaire semi-characteristic of a closed odd-dimensional complex: the sum of
// the Betti numbers of the lower half, mod 2. Throws EvenDimension.
int kervaire_semichar(const SimplicialComplex& c, Field field);
int kervaire_semichar_from_betti(const std::vector<long>& betti, int dimension);

}  // namespace cobkit
