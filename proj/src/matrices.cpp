#include "cobkit/matrices.hpp"

#include <bit>

namespace cobkit {

IntMat multiply(const IntMat& x, const IntMat& y) {
    IntMat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Int& w = y.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

IntMat transpose(const IntMat& x) {
    IntMat out(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

Int determinant(const IntMat& x) {
    if (x.rows != x.cols) return 0;
    const int n = x.rows;
    if (n == 0) return 1;
    IntMat m = x;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == -1) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // Bareiss: exact division
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMat SparseIntMat::to_dense() const {
    IntMat out(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col_entries[j]) out.at(i, j) = v;
    return out;
}

SparseIntMat SparseIntMat::transposed() const {
    SparseIntMat out(cols, rows);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, v] : col_entries[j]) out.col_entries[i].push_back({j, v});
    return out;
}

size_t SparseIntMat::nonzeros() const {
    size_t total = 0;
    for (const auto& col : col_entries) total += col.size();
    return total;
}

size_t BitVec::lowest_set() const {
    for (size_t k = 0; k < w.size(); ++k)
        if (w[k]) return (k << 6) + static_cast<size_t>(std::countr_zero(w[k]));
    return n;
}

BitMatrix mod2_from_sparse(const SparseIntMat& m) {
    BitMatrix out(m.rows, m.cols);
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.col_entries[j])
            if (v % 2 != 0) out.row[i].flip(j);
    return out;
}

size_t rank_mod2(BitMatrix m) {
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t pivot = m.rows;
        for (size_t i = rank; i < m.rows; ++i)
            if (m.row[i].get(col)) {
                pivot = i;
                break;
            }
        if (pivot == m.rows) continue;
        std::swap(m.row[rank], m.row[pivot]);
        for (size_t i = 0; i < m.rows; ++i)
            if (i != rank && m.row[i].get(col)) m.row[i] ^= m.row[rank];
        ++rank;
    }
    return rank;
}

std::vector<BitVec> kernel_mod2(const BitMatrix& m) {
    // columns of m play the role of variables
    const size_t nvars = m.cols;
    // gather columns as bit-vectors over the row index
    std::vector<BitVec> col(nvars, BitVec(m.rows));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            if (m.row[i].get(j)) col[j].set(i, true);

    // eliminate columns left to right, tracking the combination that produced
    // each reduced column
    std::vector<BitVec> reduced;    // echelon columns with distinct pivots
    std::vector<BitVec> combo_for;  // combination for each echelon column
    std::map<size_t, size_t> by_pivot;
    std::vector<BitVec> kernel;
    for (size_t j = 0; j < nvars; ++j) {
        BitVec v = col[j];
        BitVec combo(nvars);
        combo.set(j, true);
        while (v.any()) {
            auto it = by_pivot.find(v.lowest_set());
            if (it == by_pivot.end()) break;
            v ^= reduced[it->second];
            combo ^= combo_for[it->second];
        }
        if (v.any()) {
            by_pivot[v.lowest_set()] = reduced.size();
            reduced.push_back(std::move(v));
            combo_for.push_back(std::move(combo));
        } else {
            kernel.push_back(std::move(combo));
        }
    }
    return kernel;
}

bool Gf2Eliminator::add(BitVec v) {
    v = reduce(std::move(v));
    if (!v.any()) return false;
    size_t p = v.lowest_set();
    by_pivot_[p] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
}

BitVec Gf2Eliminator::reduce(BitVec v) const {
    while (v.any()) {
        size_t p = v.lowest_set();
        auto it = by_pivot_.find(p);
        if (it == by_pivot_.end()) break;
        v ^= rows_[it->second];
    }
    return v;
}

bool Gf2Eliminator::contains(BitVec v) const { return !reduce(std::move(v)).any(); }

std::optional<std::vector<uint8_t>> solve_mod2(const std::vector<BitVec>& columns,
                                               const BitVec& b) {
    if (columns.empty()) {
        if (b.any()) return std::nullopt;
        return std::vector<uint8_t>{};
    }
    const size_t nc = columns.size();
    // augmented elimination over (column, coefficient) pairs
    std::vector<BitVec> cols = columns;
    std::vector<BitVec> coeff(nc, BitVec(nc));
    for (size_t j = 0; j < nc; ++j) coeff[j].set(j, true);

    std::vector<BitVec> ech, ech_coeff;
    std::map<size_t, size_t> by_pivot;
    for (size_t j = 0; j < nc; ++j) {
        BitVec v = cols[j];
        BitVec c = coeff[j];
        while (v.any()) {
            auto it = by_pivot.find(v.lowest_set());
            if (it == by_pivot.end()) break;
            v ^= ech[it->second];
            c ^= ech_coeff[it->second];
        }
        if (v.any()) {
            by_pivot[v.lowest_set()] = ech.size();
            ech.push_back(std::move(v));
            ech_coeff.push_back(std::move(c));
        }
    }
    BitVec r = b;
    BitVec combo(nc);
    while (r.any()) {
        auto it = by_pivot.find(r.lowest_set());
        if (it == by_pivot.end()) break;
        r ^= ech[it->second];
        combo ^= ech_coeff[it->second];
    }
    if (r.any()) return std::nullopt;
    std::vector<uint8_t> out(nc, 0);
    for (size_t j = 0; j < nc; ++j) out[j] = combo.get(j) ? 1 : 0;
    return out;
}

}  // namespace cobkit
