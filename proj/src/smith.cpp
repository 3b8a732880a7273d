#include "cobkit/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cobkit/errors.hpp"

namespace cobkit {

std::vector<Int> SmithResult::divisors() const {
    std::vector<Int> out;
    for (int i = 0; i < std::min(d.rows, d.cols); ++i)
        if (d.at(i, i) != 0) out.push_back(d.at(i, i));
    return out;
}

size_t SmithResult::rank() const { return divisors().size(); }

namespace {

// Elementary operations applied simultaneously to the work matrix and the
// transform accumulators. Row op E on m accumulates u' = E u and
// u_inv' = u_inv E^{-1}; column ops mirror this for v.
struct Worker {
    IntMat m;
    IntMat u, v, u_inv, v_inv;
    SmithOptions opts;

    void row_swap(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        if (opts.want_u)
            for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
        if (opts.want_u_inv)
            for (int i = 0; i < u_inv.rows; ++i) std::swap(u_inv.at(i, a), u_inv.at(i, b));
    }

    void col_swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        if (opts.want_v)
            for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
        if (opts.want_v_inv)
            for (int j = 0; j < v_inv.cols; ++j) std::swap(v_inv.at(a, j), v_inv.at(b, j));
    }

    // row a -= q * row b
    void row_sub(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(b, j) != 0) m.at(a, j) -= q * m.at(b, j);
        if (opts.want_u)
            for (int j = 0; j < u.cols; ++j)
                if (u.at(b, j) != 0) u.at(a, j) -= q * u.at(b, j);
        if (opts.want_u_inv)
            for (int i = 0; i < u_inv.rows; ++i)
                if (u_inv.at(i, a) != 0) u_inv.at(i, b) += q * u_inv.at(i, a);
    }

    // col a -= q * col b
    void col_sub(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < m.rows; ++i)
            if (m.at(i, b) != 0) m.at(i, a) -= q * m.at(i, b);
        if (opts.want_v)
            for (int i = 0; i < v.rows; ++i)
                if (v.at(i, b) != 0) v.at(i, a) -= q * v.at(i, b);
        if (opts.want_v_inv)
            for (int j = 0; j < v_inv.cols; ++j)
                if (v_inv.at(a, j) != 0) v_inv.at(b, j) += q * v_inv.at(a, j);
    }

    void row_negate(int a) {
        for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
        if (opts.want_u)
            for (int j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
        if (opts.want_u_inv)
            for (int i = 0; i < u_inv.rows; ++i) u_inv.at(i, a) = -u_inv.at(i, a);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& input, const SmithOptions& opts) {
    Worker w;
    w.m = input;
    w.opts = opts;
    if (opts.want_u) w.u = IntMat::identity(input.rows);
    if (opts.want_u_inv) w.u_inv = IntMat::identity(input.rows);
    if (opts.want_v) w.v = IntMat::identity(input.cols);
    if (opts.want_v_inv) w.v_inv = IntMat::identity(input.cols);

    const int steps = std::min(input.rows, input.cols);
    for (int t = 0; t < steps; ++t) {
        // pivot: entry of least absolute value in the trailing submatrix;
        // a unit entry is already optimal
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < w.m.rows && best != 1; ++i)
            for (int j = t; j < w.m.cols; ++j) {
                const Int& x = w.m.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (pi == -1 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        if (pi == -1) break;  // trailing submatrix is zero
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < w.m.rows; ++i) {
                if (w.m.at(i, t) == 0) continue;
                Int q = w.m.at(i, t) / w.m.at(t, t);  // truncated division
                w.row_sub(i, t, q);
                if (w.m.at(i, t) != 0) {
                    // remainder is smaller than the pivot: promote it
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = t + 1; j < w.m.cols; ++j) {
                if (w.m.at(t, j) == 0) continue;
                Int q = w.m.at(t, j) / w.m.at(t, t);
                w.col_sub(j, t, q);
                if (w.m.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                    break;  // the column step may have dirtied column t
                }
            }
            if (!clean) continue;
            // pivot must divide the whole trailing submatrix
            for (int i = t + 1; i < w.m.rows && clean; ++i)
                for (int j = t + 1; j < w.m.cols && clean; ++j)
                    if (w.m.at(i, j) % w.m.at(t, t) != 0) {
                        w.row_sub(t, i, Int(-1));  // row t += row i
                        clean = false;
                    }
        }
        if (w.m.at(t, t) < 0) w.row_negate(t);
    }

    SmithResult out;
    out.d = std::move(w.m);
    out.u = std::move(w.u);
    out.v = std::move(w.v);
    out.u_inv = std::move(w.u_inv);
    out.v_inv = std::move(w.v_inv);
    return out;
}

namespace {

// 64-bit integer with overflow detection; snf_divisors falls back to mpz when
// any operation overflows.
struct ArithmeticOverflow : std::exception {};

struct I64 {
    int64_t x = 0;
    I64() = default;
    I64(int64_t v) : x(v) {}

    friend I64 operator+(I64 a, I64 b) {
        I64 r;
        if (__builtin_add_overflow(a.x, b.x, &r.x)) throw ArithmeticOverflow{};
        return r;
    }
    friend I64 operator-(I64 a, I64 b) {
        I64 r;
        if (__builtin_sub_overflow(a.x, b.x, &r.x)) throw ArithmeticOverflow{};
        return r;
    }
    friend I64 operator*(I64 a, I64 b) {
        I64 r;
        if (__builtin_mul_overflow(a.x, b.x, &r.x)) throw ArithmeticOverflow{};
        return r;
    }
    friend I64 operator/(I64 a, I64 b) { return I64(a.x / b.x); }
    friend I64 operator%(I64 a, I64 b) { return I64(a.x % b.x); }
    friend bool operator==(I64 a, I64 b) { return a.x == b.x; }
    friend bool operator!=(I64 a, I64 b) { return a.x != b.x; }
    friend bool operator<(I64 a, I64 b) { return a.x < b.x; }
    I64 abs_value() const {
        if (x == INT64_MIN) throw ArithmeticOverflow{};
        return I64(x < 0 ? -x : x);
    }
    bool is_zero() const { return x == 0; }
    Int to_int() const { return Int(static_cast<long>(x)); }
};

struct MpzCell {
    Int x;
    MpzCell() = default;
    MpzCell(int64_t v) : x(static_cast<long>(v)) {}
    MpzCell(Int v) : x(std::move(v)) {}

    friend MpzCell operator+(const MpzCell& a, const MpzCell& b) { return MpzCell(a.x + b.x); }
    friend MpzCell operator-(const MpzCell& a, const MpzCell& b) { return MpzCell(a.x - b.x); }
    friend MpzCell operator*(const MpzCell& a, const MpzCell& b) { return MpzCell(a.x * b.x); }
    friend MpzCell operator/(const MpzCell& a, const MpzCell& b) {
        MpzCell r;
        mpz_tdiv_q(r.x.get_mpz_t(), a.x.get_mpz_t(), b.x.get_mpz_t());
        return r;
    }
    friend MpzCell operator%(const MpzCell& a, const MpzCell& b) {
        MpzCell r;
        mpz_tdiv_r(r.x.get_mpz_t(), a.x.get_mpz_t(), b.x.get_mpz_t());
        return r;
    }
    friend bool operator==(const MpzCell& a, const MpzCell& b) { return a.x == b.x; }
    friend bool operator!=(const MpzCell& a, const MpzCell& b) { return a.x != b.x; }
    friend bool operator<(const MpzCell& a, const MpzCell& b) { return a.x < b.x; }
    MpzCell abs_value() const { return MpzCell(abs(x)); }
    bool is_zero() const { return x == 0; }
    Int to_int() const { return x; }
};

// Sparse diagonalization collecting the diagonal entries; the divisor chain is
// fixed afterwards by pairwise gcd/lcm exchanges.
template <typename Cell>
std::vector<Int> snf_divisors_impl(const SparseIntMat& input) {
    const int R = input.rows, C = input.cols;
    std::vector<std::map<int, Cell>> rows(R);  // row -> {col -> value}
    std::vector<std::set<int>> col_rows(C);    // col -> rows with a nonzero
    for (int j = 0; j < C; ++j)
        for (const auto& [i, val] : input.col_entries[j]) {
            if (val == 0) continue;
            rows[i][j] = Cell(static_cast<int64_t>(val));
            col_rows[j].insert(i);
        }

    auto set_entry = [&](int i, int j, const Cell& val) {
        if (val.is_zero()) {
            rows[i].erase(j);
            col_rows[j].erase(i);
        } else {
            rows[i][j] = val;
            col_rows[j].insert(i);
        }
    };

    // row_i -= q * row_p
    auto row_sub = [&](int i, int p, const Cell& q) {
        if (q.is_zero()) return;
        std::vector<std::pair<int, Cell>> updates(rows[p].begin(), rows[p].end());
        for (const auto& [j, val] : updates) {
            auto it = rows[i].find(j);
            Cell cur = (it == rows[i].end()) ? Cell(0) : it->second;
            set_entry(i, j, cur - q * val);
        }
    };

    // col_j -= q * col_p
    auto col_sub = [&](int j, int p, const Cell& q) {
        if (q.is_zero()) return;
        std::vector<int> touched(col_rows[p].begin(), col_rows[p].end());
        for (int i : touched) {
            Cell pv = rows[i].at(p);
            auto it = rows[i].find(j);
            Cell cur = (it == rows[i].end()) ? Cell(0) : it->second;
            set_entry(i, j, cur - q * pv);
        }
    };

    std::vector<Int> diagonal;
    while (true) {
        // pivot: least |value|, ties broken by least fill (Markowitz)
        int pi = -1, pj = -1;
        Cell pbest(0);
        size_t fill_best = 0;
        for (int i = 0; i < R; ++i) {
            for (const auto& [j, val] : rows[i]) {
                Cell a = val.abs_value();
                size_t fill = (rows[i].size() - 1) * (col_rows[j].size() - 1);
                if (pi == -1 || a < pbest || (a == pbest && fill < fill_best)) {
                    pbest = a;
                    fill_best = fill;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == -1) break;

        while (true) {
            // clear column pj
            bool col_clean = true;
            std::vector<int> in_col(col_rows[pj].begin(), col_rows[pj].end());
            for (int i : in_col) {
                if (i == pi) continue;
                Cell q = rows[i].at(pj) / rows[pi].at(pj);
                row_sub(i, pi, q);
                auto it = rows[i].find(pj);
                if (it != rows[i].end() && !it->second.is_zero()) {
                    pi = i;  // smaller remainder becomes the pivot
                    col_clean = false;
                    break;
                }
            }
            if (!col_clean) continue;
            // clear row pi
            bool row_clean = true;
            std::vector<std::pair<int, Cell>> in_row(rows[pi].begin(), rows[pi].end());
            for (const auto& [j, val] : in_row) {
                if (j == pj) continue;
                Cell q = val / rows[pi].at(pj);
                col_sub(j, pj, q);
                auto it = rows[pi].find(j);
                if (it != rows[pi].end() && !it->second.is_zero()) {
                    pj = j;
                    row_clean = false;
                    break;
                }
            }
            if (row_clean && col_clean) break;
        }
        Int dv = rows[pi].at(pj).to_int();
        diagonal.push_back(abs(dv));
        set_entry(pi, pj, Cell(0));
    }

    // enforce the divisibility chain
    std::sort(diagonal.begin(), diagonal.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < diagonal.size(); ++i) {
            if (diagonal[i + 1] % diagonal[i] == 0) continue;
            Int g = gcd(diagonal[i], diagonal[i + 1]);
            Int l = diagonal[i] / g * diagonal[i + 1];
            diagonal[i] = g;
            diagonal[i + 1] = l;
            changed = true;
        }
        if (changed) std::sort(diagonal.begin(), diagonal.end());
    }
    return diagonal;
}

}  // namespace

std::vector<Int> snf_divisors(const SparseIntMat& m) {
    try {
        return snf_divisors_impl<I64>(m);
    } catch (const ArithmeticOverflow&) {
        return snf_divisors_impl<MpzCell>(m);
    }
}

size_t rank_over_q(const SparseIntMat& m) { return snf_divisors(m).size(); }

}  // namespace cobkit
