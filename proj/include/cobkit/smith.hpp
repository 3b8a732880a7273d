#pragma once

#include "cobkit/matrices.hpp"

namespace cobkit {

// Smith normal form u * m * v = d with u, v unimodular and the diagonal of d
// a divisibility chain d1 | d2 | ... of non-negative integers.
struct SmithResult {
    IntMat u, d, v;
    // Accumulated inverses (u_inv * u = I, v_inv * v = I), kept because the
    // cohomology code changes bases with them.
    IntMat u_inv, v_inv;

    std::vector<Int> divisors() const;  // nonzero diagonal entries
    size_t rank() const;
};

struct SmithOptions {
    bool want_u = true;
    bool want_v = true;
    bool want_u_inv = false;
    bool want_v_inv = false;
};

SmithResult smith_normal_form(const IntMat& m, const SmithOptions& opts = {});

// Diagonal divisors of the Smith form only, computed by sparse elimination
// with a greedy minimum-fill pivot rule. Runs in 64-bit arithmetic with
// overflow detection and falls back to arbitrary precision when needed.
std::vector<Int> snf_divisors(const SparseIntMat& m);

size_t rank_over_q(const SparseIntMat& m);

}  // namespace cobkit
