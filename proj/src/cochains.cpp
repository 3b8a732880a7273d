#include "cobkit/cochains.hpp"

#include <algorithm>

namespace cobkit {

CochainMod2 zero_cochain(const ChainComplexData& ccd, int degree) {
    CochainMod2 out;
    out.degree = degree;
    const size_t count =
        (degree >= 0 && degree <= ccd.dimension) ? ccd.f[degree] : 0;
    out.values = BitVec(count);
    return out;
}

CochainMod2 unit_cochain(const ChainComplexData& ccd) {
    CochainMod2 out = zero_cochain(ccd, 0);
    for (size_t i = 0; i < out.values.n; ++i) out.values.set(i, true);
    return out;
}

CochainMod2 coboundary(const CochainMod2& a, const ChainComplexData& ccd) {
    CochainMod2 out = zero_cochain(ccd, a.degree + 1);
    if (a.degree + 1 > ccd.dimension) return out;
    const SparseIntMat& b = ccd.boundary[a.degree + 1];
    for (int j = 0; j < b.cols; ++j) {
        int parity = 0;
        for (const auto& [row, val] : b.col_entries[j]) {
            (void)val;
            if (a.values.get(row)) parity ^= 1;
        }
        if (parity) out.values.set(j, true);
    }
    return out;
}

CochainMod2 cup_product(const CochainMod2& a, const CochainMod2& b, const ChainComplexData& ccd) {
    const int p = a.degree, q = b.degree;
    if (p + q > ccd.dimension)
        throw DegreeOverflow("cup product degree exceeds complex dimension");
    CochainMod2 out = zero_cochain(ccd, p + q);
    const auto& simplices = ccd.simplices[p + q];
    Simplex front, back;
    for (size_t idx = 0; idx < simplices.size(); ++idx) {
        const Simplex& s = simplices[idx];
        front.assign(s.begin(), s.begin() + p + 1);
        back.assign(s.begin() + p, s.end());
        const int fi = ccd.index_of(p, front);
        const int bi = ccd.index_of(q, back);
        if (a.values.get(fi) && b.values.get(bi)) out.values.flip(idx);
    }
    return out;
}

CochainMod2 cup_i_product(const CochainMod2& a, const CochainMod2& b, int i,
                          const ChainComplexData& ccd) {
    const int p = a.degree, q = b.degree;
    const int target = p + q - i;
    if (i < 0 || target < 0 || target > ccd.dimension) return zero_cochain(ccd, std::max(target, 0));
    if (i == 0) return cup_product(a, b, ccd);

    CochainMod2 out = zero_cochain(ccd, target);
    const auto& simplices = ccd.simplices[target];
    const int m = target + 1;  // vertices per simplex

    // cut positions 0 <= j_0 < ... < j_i <= target split the vertex list into
    // i+2 overlapping blocks; a eats the even blocks, b the odd ones.
    std::vector<int> cuts(i + 1);
    Simplex even_face, odd_face;
    for (size_t idx = 0; idx < simplices.size(); ++idx) {
        const Simplex& s = simplices[idx];
        int parity = 0;
        // enumerate (i+1)-subsets of {0..m-1}
        for (int t = 0; t <= i; ++t) cuts[t] = t;
        while (true) {
            even_face.clear();
            odd_face.clear();
            int lo = 0;
            for (int blk = 0; blk <= i + 1; ++blk) {
                const int hi = (blk <= i) ? cuts[blk] : m - 1;
                auto& face = (blk % 2 == 0) ? even_face : odd_face;
                for (int t = lo; t <= hi; ++t) face.push_back(s[t]);
                lo = hi;  // blocks share their endpoint
            }
            if (static_cast<int>(even_face.size()) == p + 1 &&
                static_cast<int>(odd_face.size()) == q + 1) {
                const int ei = ccd.index_of(p, even_face);
                const int oi = ccd.index_of(q, odd_face);
                if (a.values.get(ei) && b.values.get(oi)) parity ^= 1;
            }
            // next combination
            int t = i;
            while (t >= 0 && cuts[t] == m - 1 - (i - t)) --t;
            if (t < 0) break;
            ++cuts[t];
            for (int r = t + 1; r <= i; ++r) cuts[r] = cuts[r - 1] + 1;
        }
        if (parity) out.values.flip(idx);
    }
    return out;
}

CochainMod2 steenrod_square(int k, const CochainMod2& a, const ChainComplexData& ccd) {
    if (k < 0) throw DegreeOverflow("negative Steenrod square");
    const int p = a.degree;
    if (k > p) return zero_cochain(ccd, p + k);
    if (k == p && 2 * p <= ccd.dimension) return cup_product(a, a, ccd);
    if (k == p) return zero_cochain(ccd, 2 * p);
    return cup_i_product(a, a, p - k, ccd);
}

int evaluate_on_fundamental(const CochainMod2& a, const ChainComplexData& ccd) {
    if (a.degree != ccd.dimension) return 0;
    int parity = 0;
    for (size_t i = 0; i < a.values.n; ++i)
        if (a.values.get(i)) parity ^= 1;
    return parity;
}

Mod2Cohomology::Mod2Cohomology(const ChainComplexData& ccd) : dim_(ccd.dimension) {
    basis_.resize(dim_ + 1);
    coboundaries_.resize(dim_ + 1);
    for (int k = 0; k <= dim_; ++k) {
        // coboundary space: delta of the elementary (k-1)-cochains
        if (k >= 1) {
            const SparseIntMat& b = ccd.boundary[k];
            const BitMatrix bm = mod2_from_sparse(b);
            // columns of delta_{k-1} = rows of boundary_k viewed over simplices
            for (int r = 0; r < b.rows; ++r) {
                BitVec gen(ccd.f[k]);
                for (int j = 0; j < b.cols; ++j)
                    if (bm.row[r].get(j)) gen.set(j, true);
                coboundaries_[k].add(std::move(gen));
            }
        }
        // cocycles: kernel of delta_k = transpose of boundary_{k+1}
        std::vector<BitVec> cocycles;
        if (k + 1 <= dim_) {
            const BitMatrix delta = mod2_from_sparse(ccd.boundary[k + 1].transposed());
            cocycles = kernel_mod2(delta);
        } else {
            cocycles.reserve(ccd.f[k]);
            for (size_t i = 0; i < ccd.f[k]; ++i) {
                BitVec e(ccd.f[k]);
                e.set(i, true);
                cocycles.push_back(std::move(e));
            }
        }
        Gf2Eliminator span = coboundaries_[k];
        for (BitVec& z : cocycles) {
            BitVec candidate = z;
            if (span.add(std::move(z))) {
                CochainMod2 rep;
                rep.degree = k;
                rep.values = std::move(candidate);
                basis_[k].push_back(std::move(rep));
            }
        }
    }
}

const std::vector<CochainMod2>& Mod2Cohomology::basis(int degree) const {
    static const std::vector<CochainMod2> empty;
    if (degree < 0 || degree > dim_) return empty;
    return basis_[degree];
}

long Mod2Cohomology::betti(int degree) const {
    return static_cast<long>(basis(degree).size());
}

bool Mod2Cohomology::is_cocycle(const CochainMod2& a, const ChainComplexData& ccd) const {
    return coboundary(a, ccd).is_zero();
}

bool Mod2Cohomology::is_coboundary(const CochainMod2& a) const {
    if (a.degree < 0 || a.degree > dim_) return true;
    return coboundaries_[a.degree].contains(a.values);
}

bool Mod2Cohomology::same_class(const CochainMod2& a, const CochainMod2& b) const {
    if (a.degree != b.degree) return false;
    CochainMod2 diff = a;
    diff.values ^= b.values;
    return is_coboundary(diff);
}

}  // namespace cobkit
