#include "cobkit/forms.hpp"

#include <algorithm>
#include <array>

namespace cobkit {

namespace {

struct OrientedComplex {
    SimplicialComplex complex;
    ChainComplexData ccd;
    std::vector<int> facet_sign;  // aligned with ccd.simplices[n]
};

OrientedComplex prepare_oriented_closed(const SimplicialComplex& input) {
    SimplicialComplex c = input;
    normalize_and_check(c);
    ManifoldFlags flags = validate(c);
    if (!flags.is_closed) throw NotClosed("operation requires a closed complex");
    if (!c.orientation) {
        auto oriented = orient(c);
        if (!oriented) throw NotOriented("operation requires an orientable complex");
        c = *oriented;
    }
    OrientedComplex out;
    out.ccd = chain_complex(c);
    const int n = out.ccd.dimension;
    out.facet_sign.assign(out.ccd.f[n], 0);
    for (size_t i = 0; i < c.facets.size(); ++i) {
        int idx = out.ccd.index_of(n, c.facets[i]);
        out.facet_sign[idx] = (*c.orientation)[i];
    }
    out.complex = std::move(c);
    return out;
}

// (front index, back index, orientation sign) of each top simplex for the
// middle-degree cup pairing.
struct PairingTable {
    std::vector<std::array<int, 3>> entries;
};

PairingTable middle_pairing_table(const OrientedComplex& oc) {
    const int n = oc.ccd.dimension;
    const int m = n / 2;
    PairingTable table;
    table.entries.reserve(oc.ccd.f[n]);
    Simplex front, back;
    for (size_t idx = 0; idx < oc.ccd.f[n]; ++idx) {
        const Simplex& s = oc.ccd.simplices[n][idx];
        front.assign(s.begin(), s.begin() + m + 1);
        back.assign(s.begin() + m, s.end());
        table.entries.push_back({oc.ccd.index_of(m, front), oc.ccd.index_of(m, back),
                                 oc.facet_sign[idx]});
    }
    return table;
}

Int pair_cocycles(const PairingTable& table, const std::vector<Int>& x,
                  const std::vector<Int>& y) {
    Int total = 0;
    for (const auto& [fi, bi, sign] : table.entries) {
        if (x[fi] == 0 || y[bi] == 0) continue;
        if (sign > 0)
            total += x[fi] * y[bi];
        else
            total -= x[fi] * y[bi];
    }
    return total;
}

IntMat dense_delta(const ChainComplexData& ccd, int k) {
    // delta_k : C^k -> C^{k+1} is the transpose of boundary_{k+1}
    if (k + 1 > ccd.dimension) return IntMat(0, static_cast<int>(ccd.f[k]));
    const SparseIntMat& b = ccd.boundary[k + 1];
    IntMat out(b.cols, b.rows);
    for (int j = 0; j < b.cols; ++j)
        for (const auto& [row, val] : b.col_entries[j]) out.at(j, row) = val;
    return out;
}

// --- sparse exact column echelon over Q -----------------------------------

using SparseVec = std::map<int, Int>;

void normalize_content(SparseVec& v) {
    Int g = 0;
    for (const auto& [i, x] : v) g = gcd(g, x);
    if (g > 1)
        for (auto& [i, x] : v) x /= g;
}

SparseVec combine(const Int& ca, const SparseVec& col, const Int& cb, const SparseVec& piv) {
    // ca * col - cb * piv, dropping zeros
    SparseVec out;
    auto a = col.begin();
    auto b = piv.begin();
    while (a != col.end() || b != piv.end()) {
        if (b == piv.end() || (a != col.end() && a->first < b->first)) {
            Int v = ca * a->second;
            if (v != 0) out.emplace_hint(out.end(), a->first, std::move(v));
            ++a;
        } else if (a == col.end() || b->first < a->first) {
            Int v = -cb * b->second;
            if (v != 0) out.emplace_hint(out.end(), b->first, std::move(v));
            ++b;
        } else {
            Int v = ca * a->second - cb * b->second;
            if (v != 0) out.emplace_hint(out.end(), a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

// Column echelon keyed on the least nonzero row; columns are content-
// normalized integers, so spans are over Q.
struct SparseEchelon {
    std::map<int, SparseVec> by_pivot;

    // true iff the column was independent of the current span
    bool insert(SparseVec col) {
        normalize_content(col);
        while (!col.empty()) {
            const int p = col.begin()->first;
            auto it = by_pivot.find(p);
            if (it == by_pivot.end()) {
                if (col.begin()->second < 0)
                    for (auto& [i, x] : col) x = -x;
                by_pivot.emplace(p, std::move(col));
                return true;
            }
            const Int a = it->second.at(p);
            const Int b = col.at(p);
            const Int g = gcd(a, b);
            col = combine(a / g, col, b / g, it->second);
            normalize_content(col);
        }
        return false;
    }
};

// delta_k as sparse columns over the (k+1)-simplex row index.
std::vector<SparseVec> delta_columns(const ChainComplexData& ccd, int k) {
    std::vector<SparseVec> cols(ccd.f[k]);
    if (k + 1 > ccd.dimension) return cols;
    const SparseIntMat& b = ccd.boundary[k + 1];
    for (int t = 0; t < b.cols; ++t)
        for (const auto& [face, sign] : b.col_entries[t]) cols[face][t] = sign;
    return cols;
}

// Kernel of delta_m over Q via column reduction of [delta; I].
std::vector<SparseVec> sparse_kernel(const ChainComplexData& ccd, int m) {
    const int nrows = (m + 1 <= ccd.dimension) ? static_cast<int>(ccd.f[m + 1]) : 0;
    std::vector<SparseVec> cols = delta_columns(ccd, m);
    SparseEchelon ech;
    std::vector<SparseVec> kernel;
    for (size_t j = 0; j < cols.size(); ++j) {
        SparseVec stacked = cols[j];
        stacked[nrows + static_cast<int>(j)] = 1;
        // reduce only through the delta-part pivots; a column whose delta part
        // dies is a kernel combination
        normalize_content(stacked);
        while (!stacked.empty() && stacked.begin()->first < nrows) {
            const int p = stacked.begin()->first;
            auto it = ech.by_pivot.find(p);
            if (it == ech.by_pivot.end()) break;
            const Int a = it->second.at(p);
            const Int b = stacked.at(p);
            const Int g = gcd(a, b);
            stacked = combine(a / g, stacked, b / g, it->second);
            normalize_content(stacked);
        }
        if (!stacked.empty() && stacked.begin()->first < nrows) {
            if (stacked.begin()->second < 0)
                for (auto& [i, x] : stacked) x = -x;
            ech.by_pivot.emplace(stacked.begin()->first, std::move(stacked));
        } else {
            SparseVec combo;
            for (const auto& [i, x] : stacked) combo[i - nrows] = x;
            kernel.push_back(std::move(combo));
        }
    }
    return kernel;
}

Int pair_sparse(const PairingTable& table, const SparseVec& x, const SparseVec& y) {
    Int total = 0;
    for (const auto& [fi, bi, sign] : table.entries) {
        auto xi = x.find(fi);
        if (xi == x.end()) continue;
        auto yi = y.find(bi);
        if (yi == y.end()) continue;
        if (sign > 0)
            total += xi->second * yi->second;
        else
            total -= xi->second * yi->second;
    }
    return total;
}

}  // namespace

long signature_of_symmetric(const IntMat& m) {
    if (m.rows != m.cols) throw BadDimension("signature needs a square matrix");
    const int z = m.rows;
    std::vector<std::vector<mpq_class>> a(z, std::vector<mpq_class>(z));
    for (int i = 0; i < z; ++i)
        for (int j = 0; j < z; ++j) a[i][j] = mpq_class(m.at(i, j));

    long pos = 0, neg = 0;
    for (int t = 0; t < z; ++t) {
        if (a[t][t] == 0) {
            // try a diagonal swap first, then the off-diagonal trick
            int swap_with = -1;
            for (int i = t + 1; i < z; ++i)
                if (a[i][i] != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with != -1) {
                std::swap(a[t], a[swap_with]);
                for (int i = 0; i < z; ++i) std::swap(a[i][t], a[i][swap_with]);
            } else {
                int j = -1;
                for (int i = t + 1; i < z; ++i)
                    if (a[t][i] != 0) {
                        j = i;
                        break;
                    }
                if (j == -1) continue;  // row t lies in the radical
                for (int i = 0; i < z; ++i) a[t][i] += a[j][i];
                for (int i = 0; i < z; ++i) a[i][t] += a[i][j];
            }
        }
        const mpq_class pivot = a[t][t];
        if (pivot > 0)
            ++pos;
        else
            ++neg;
        for (int i = t + 1; i < z; ++i) {
            if (a[i][t] == 0) continue;
            mpq_class coeff = a[i][t] / pivot;
            for (int j = t; j < z; ++j) a[i][j] -= coeff * a[t][j];
        }
        for (int i = t + 1; i < z; ++i) a[t][i] = 0;
    }
    return pos - neg;
}

IntersectionForm intersection_form(const SimplicialComplex& input) {
    OrientedComplex oc = prepare_oriented_closed(input);
    const int n = oc.ccd.dimension;
    if (n < 0 || n % 4 != 0) throw BadDimension("intersection form needs dimension 0 mod 4");
    const int m = n / 2;

    // integral basis of middle cohomology mod torsion
    IntMat delta_m = dense_delta(oc.ccd, m);
    SmithOptions opts;
    opts.want_u = false;
    opts.want_v = true;
    opts.want_v_inv = true;
    SmithResult snf = smith_normal_form(delta_m, opts);
    const int z_rank = static_cast<int>(snf.rank());
    const int fm = static_cast<int>(oc.ccd.f[m]);
    const int z_dim = fm - z_rank;  // cocycle lattice dimension

    // coboundary generators in kernel-basis coordinates
    std::vector<std::vector<Int>> y_cols;
    if (m >= 1) {
        IntMat delta_prev = dense_delta(oc.ccd, m - 1);  // f_m x f_{m-1}
        IntMat coords = multiply(snf.v_inv, delta_prev);
        for (int j = 0; j < coords.cols; ++j) {
            std::vector<Int> col(z_dim);
            bool nonzero = false;
            for (int i = 0; i < z_dim; ++i) {
                col[i] = coords.at(z_rank + i, j);
                if (col[i] != 0) nonzero = true;
            }
            // cocycle coordinates on the non-kernel block must vanish
            for (int i = 0; i < z_rank; ++i)
                if (coords.at(i, j) != 0)
                    throw Error("InternalCheck", "coboundary outside the cocycle lattice");
            if (nonzero) y_cols.push_back(std::move(col));
        }
    }
    IntMat y(z_dim, static_cast<int>(y_cols.size()));
    for (int j = 0; j < y.cols; ++j)
        for (int i = 0; i < z_dim; ++i) y.at(i, j) = y_cols[j][i];

    SmithOptions yopts;
    yopts.want_u = false;
    yopts.want_v = false;
    yopts.want_u_inv = true;
    SmithResult ysnf = smith_normal_form(y, yopts);
    const int y_rank = static_cast<int>(ysnf.rank());

    // free-part basis: kernel-basis combinations from the trailing columns of
    // the inverse row transform
    IntersectionForm out;
    for (int j = y_rank; j < z_dim; ++j) {
        std::vector<Int> vec(fm, 0);
        for (int i = 0; i < z_dim; ++i) {
            const Int& coeff = ysnf.u_inv.at(i, j);
            if (coeff == 0) continue;
            for (int r = 0; r < fm; ++r) vec[r] += coeff * snf.v.at(r, z_rank + i);
        }
        out.basis.push_back(std::move(vec));
    }

    PairingTable table = middle_pairing_table(oc);
    const int b = static_cast<int>(out.basis.size());
    out.matrix = IntMat(b, b);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) out.matrix.at(i, j) = pair_cocycles(table, out.basis[i], out.basis[j]);
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            if (out.matrix.at(i, j) != out.matrix.at(j, i))
                throw Error("InternalCheck", "intersection pairing is not symmetric");
    return out;
}

long signature(const SimplicialComplex& input) {
    OrientedComplex oc = prepare_oriented_closed(input);
    const int n = oc.ccd.dimension;
    if (n < 0 || n % 4 != 0) throw BadDimension("signature needs dimension 0 mod 4");
    const int m = n / 2;

    // rational basis of middle cohomology: kernel vectors of delta_m that are
    // independent modulo the coboundary columns
    std::vector<SparseVec> kernel = sparse_kernel(oc.ccd, m);
    SparseEchelon quotient;
    if (m >= 1)
        for (SparseVec& col : delta_columns(oc.ccd, m - 1)) quotient.insert(std::move(col));
    std::vector<SparseVec> reps;
    for (const SparseVec& k : kernel)
        if (quotient.insert(k)) reps.push_back(k);

    PairingTable table = middle_pairing_table(oc);
    const int b = static_cast<int>(reps.size());
    IntMat gram(b, b);
    for (int i = 0; i < b; ++i)
        for (int j = i; j < b; ++j) {
            Int v = pair_sparse(table, reps[i], reps[j]);
            gram.at(i, j) = v;
            gram.at(j, i) = v;
        }
    return signature_of_symmetric(gram);
}

CharacteristicClasses wu_classes(const SimplicialComplex& input, size_t budget) {
    SimplicialComplex c = input;
    normalize_and_check(c);
    ManifoldFlags flags = validate(c);
    if (!flags.is_closed) throw NotClosed("Wu classes need a closed complex");
    ChainComplexData ccd = chain_complex(c);
    const int n = ccd.dimension;
    if (n >= 0 && ccd.f[n] > budget)
        throw BudgetExceeded("complex exceeds the top-simplex budget for Wu computations");

    Mod2Cohomology coh(ccd);
    const int half = n / 2;

    CharacteristicClasses out;
    out.wu.push_back(unit_cochain(ccd));
    for (int k = 1; k <= half; ++k) {
        const auto& xs = coh.basis(n - k);
        const auto& ys = coh.basis(k);
        if (xs.size() != ys.size())
            throw Error("InternalCheck", "Poincare duality rank mismatch in Wu system");
        BitVec rhs(xs.size());
        std::vector<BitVec> columns(ys.size(), BitVec(xs.size()));
        for (size_t mi = 0; mi < xs.size(); ++mi) {
            CochainMod2 sq = steenrod_square(k, xs[mi], ccd);
            if (evaluate_on_fundamental(sq, ccd)) rhs.set(mi, true);
            for (size_t j = 0; j < ys.size(); ++j) {
                CochainMod2 prod = cup_product(ys[j], xs[mi], ccd);
                if (evaluate_on_fundamental(prod, ccd)) columns[j].set(mi, true);
            }
        }
        auto lambda = solve_mod2(columns, rhs);
        if (!lambda) throw Error("InternalCheck", "Wu system is unsolvable");
        CochainMod2 v = zero_cochain(ccd, k);
        for (size_t j = 0; j < ys.size(); ++j)
            if ((*lambda)[j]) v.values ^= ys[j].values;
        out.wu.push_back(std::move(v));
    }

    // w = Sq(v)
    for (int k = 0; k <= n; ++k) {
        CochainMod2 w = zero_cochain(ccd, k);
        for (int i = 0; i <= k; ++i) {
            const int j = k - i;
            if (j > half || i > j) continue;  // Sq^i vanishes above the degree
            CochainMod2 term = steenrod_square(i, out.wu[j], ccd);
            if (term.degree == k && term.values.n == w.values.n) w.values ^= term.values;
        }
        out.sw_trivial.push_back(coh.is_coboundary(w));
        out.stiefel_whitney.push_back(std::move(w));
    }
    out.orientable = out.sw_trivial.size() > 1 ? out.sw_trivial[1] : true;
    const bool w2_zero = out.sw_trivial.size() > 2 ? out.sw_trivial[2] : true;
    out.spin = out.orientable && w2_zero;
    return out;
}

bool mod2_intersection_form_even(const SimplicialComplex& input) {
    SimplicialComplex c = input;
    normalize_and_check(c);
    ChainComplexData ccd = chain_complex(c);
    if (ccd.dimension != 4) throw BadDimension("even-form test is for 4-complexes");
    Mod2Cohomology coh(ccd);
    for (const CochainMod2& x : coh.basis(2)) {
        CochainMod2 sq = cup_product(x, x, ccd);
        if (evaluate_on_fundamental(sq, ccd)) return false;
    }
    return true;
}

bool spin_check(const SimplicialComplex& input, size_t budget) {
    SimplicialComplex c = input;
    normalize_and_check(c);
    ManifoldFlags flags = validate(c);
    if (!flags.is_closed) throw NotClosed("spin check needs a closed complex");
    if (c.dimension() == 4) {
        if (!flags.is_orientable.value_or(false)) return false;
        // Wu's identity: for closed oriented 4-manifolds, spin iff the mod-2
        // intersection form is even
        return mod2_intersection_form_even(c);
    }
    return wu_classes(c, budget).spin;
}

}  // namespace cobkit
