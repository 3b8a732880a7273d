#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cobkit {

using Int = mpz_class;

// Dense matrix of arbitrary-precision integers, row-major.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMat multiply(const IntMat& x, const IntMat& y);
IntMat transpose(const IntMat& x);
Int determinant(const IntMat& x);  // Bareiss fraction-free elimination

// Column-sparse integer matrix; boundary operators store only their +-1 entries.
struct SparseIntMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> col_entries;  // (row, value), rows ascending

    SparseIntMat() = default;
    SparseIntMat(int r, int c) : rows(r), cols(c), col_entries(c) {}

    IntMat to_dense() const;
    SparseIntMat transposed() const;
    size_t nonzeros() const;
};

// Vector over GF(2), packed 64 bits per word.
struct BitVec {
    size_t n = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(size_t size) : n(size), w((size + 63) / 64, 0) {}

    bool get(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            w[i >> 6] |= mask;
        else
            w[i >> 6] &= ~mask;
    }
    void flip(size_t i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }
    void operator^=(const BitVec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    size_t lowest_set() const;  // n when empty
    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
};

// Matrix over GF(2) as a list of row bit-vectors.
struct BitMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<BitVec> row;

    BitMatrix() = default;
    BitMatrix(size_t r, size_t c) : rows(r), cols(c), row(r, BitVec(c)) {}
};

BitMatrix mod2_from_sparse(const SparseIntMat& m);

size_t rank_mod2(BitMatrix m);

// Basis of the null space {x : m x = 0} over GF(2); x indexed by columns of m.
std::vector<BitVec> kernel_mod2(const BitMatrix& m);

// Incremental GF(2) eliminator for span membership and basis extension.
class Gf2Eliminator {
public:
    // Returns true if v was independent of the current span (and adds it).
    bool add(BitVec v);
    // True iff v lies in the current span.
    bool contains(BitVec v) const;
    // Reduces v against the current span (in place) and returns it.
    BitVec reduce(BitVec v) const;
    size_t rank() const { return rows_.size(); }

private:
    std::vector<BitVec> rows_;          // echelon rows, distinct pivots
    std::map<size_t, size_t> by_pivot_;  // pivot column -> row index
};

// Solves A x = b over GF(2); columns of A given as bit-vectors. Returns the
// coefficient vector on success.
std::optional<std::vector<uint8_t>> solve_mod2(const std::vector<BitVec>& columns, const BitVec& b);

}  // namespace cobkit
