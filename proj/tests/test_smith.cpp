#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cobkit/smith.hpp"

using namespace cobkit;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    IntMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

SparseIntMat sparse_from_dense(const IntMat& m) {
    SparseIntMat s(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i)
            if (m.at(i, j) != 0) s.col_entries[j].push_back({i, static_cast<int>(m.at(i, j).get_si())});
    return s;
}

void check_certificate(const IntMat& m) {
    SmithResult snf = smith_normal_form(m);
    // u * m * v = d
    CHECK(multiply(multiply(snf.u, m), snf.v) == snf.d);
    // unimodular transforms
    CHECK(abs(determinant(snf.u)) == 1);
    CHECK(abs(determinant(snf.v)) == 1);
    // diagonal with a divisibility chain
    for (int i = 0; i < snf.d.rows; ++i)
        for (int j = 0; j < snf.d.cols; ++j)
            if (i != j) CHECK(snf.d.at(i, j) == 0);
    auto divisors = snf.divisors();
    for (size_t i = 0; i + 1 < divisors.size(); ++i) {
        CHECK(divisors[i] > 0);
        CHECK(divisors[i + 1] % divisors[i] == 0);
    }
}

}  // namespace

TEST_CASE("identity, zero and the worked 2x2 example") {
    IntMat id = IntMat::identity(3);
    SmithResult snf = smith_normal_form(id);
    CHECK(snf.d == id);

    IntMat zero(2, 3);
    CHECK(smith_normal_form(zero).d == zero);

    // d1 = gcd of entries = 2, d1*d2 = |det| = 8
    IntMat m = from_rows({{2, 4}, {6, 8}});
    SmithResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);
    check_certificate(m);
}

TEST_CASE("random matrices: certificate, chain, mod-2 agreement, sparse parity") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim_dist(1, 8);
    std::uniform_int_distribution<int> val_dist(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = dim_dist(rng), c = dim_dist(rng);
        IntMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = val_dist(rng);
        check_certificate(m);

        SmithResult snf = smith_normal_form(m);
        auto divisors = snf.divisors();

        // mod-2 rank from a dedicated elimination equals the count of odd divisors
        size_t odd = 0;
        for (const Int& d : divisors)
            if (d % 2 != 0) ++odd;
        CHECK(rank_mod2(mod2_from_sparse(sparse_from_dense(m))) == odd);

        // the sparse divisor engine agrees with the dense certificate
        CHECK(snf_divisors(sparse_from_dense(m)) == divisors);
    }
}

TEST_CASE("transform inverses multiply back to the identity") {
    SmithOptions opts;
    opts.want_u_inv = true;
    opts.want_v_inv = true;
    IntMat m = from_rows({{6, 4, 2}, {4, 10, 2}, {0, 8, 6}});
    SmithResult snf = smith_normal_form(m, opts);
    CHECK(multiply(snf.u, snf.u_inv) == IntMat::identity(3));
    CHECK(multiply(snf.v_inv, snf.v) == IntMat::identity(3));
}

TEST_CASE("overflow fallback: large entries still produce exact divisors") {
    // entries near 2^31 force products beyond 64 bits during elimination
    IntMat m(2, 2);
    m.at(0, 0) = Int("2147483647");
    m.at(0, 1) = Int("2147483629");
    m.at(1, 0) = Int("2147483587");
    m.at(1, 1) = Int("2147483563");
    SmithResult snf = smith_normal_form(m);
    SparseIntMat s(2, 2);
    // the sparse engine takes int entries; feed it a scaled-down companion
    s.col_entries[0] = {{0, 1000000007}, {1, 998244353}};
    s.col_entries[1] = {{0, 1000000033}, {1, 998244389}};
    IntMat dense = s.to_dense();
    CHECK(snf_divisors(s) == smith_normal_form(dense).divisors());
    CHECK(multiply(multiply(snf.u, m), snf.v) == snf.d);
}
