#include "cobkit/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cobkit {

int ChainComplexData::index_of(int k, const Simplex& s) const {
    if (k < 0 || k > dimension) return -1;
    const auto& list = simplices[k];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return -1;
    return static_cast<int>(it - list.begin());
}

ChainComplexData chain_complex(const SimplicialComplex& input) {
    SimplicialComplex c = input;
    normalize_and_check(c);
    ChainComplexData out;
    out.dimension = c.dimension();
    if (out.dimension < 0) return out;

    std::vector<std::set<Simplex>> faces(out.dimension + 1);
    for (const Simplex& f : c.facets) {
        // all subsets of f, grouped by cardinality
        const size_t m = f.size();
        for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
            Simplex s;
            for (size_t b = 0; b < m; ++b)
                if (mask & (size_t(1) << b)) s.push_back(f[b]);
            faces[s.size() - 1].insert(std::move(s));
        }
    }
    out.simplices.resize(out.dimension + 1);
    out.f.resize(out.dimension + 1);
    for (int k = 0; k <= out.dimension; ++k) {
        out.simplices[k].assign(faces[k].begin(), faces[k].end());
        out.f[k] = out.simplices[k].size();
    }

    out.boundary.resize(out.dimension + 1);
    for (int k = 1; k <= out.dimension; ++k) {
        SparseIntMat b(static_cast<int>(out.f[k - 1]), static_cast<int>(out.f[k]));
        for (size_t j = 0; j < out.simplices[k].size(); ++j) {
            const Simplex& s = out.simplices[k][j];
            int sign = 1;
            for (size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != i) face.push_back(s[t]);
                int row = out.index_of(k - 1, face);
                b.col_entries[j].push_back({row, sign});
                sign = -sign;
            }
            std::sort(b.col_entries[j].begin(), b.col_entries[j].end());
        }
        out.boundary[k] = std::move(b);
    }
    return out;
}

HomologySummary homology(const ChainComplexData& ccd) {
    HomologySummary out;
    const int n = ccd.dimension;
    if (n < 0) return out;

    std::vector<size_t> rank_q(n + 2, 0);
    std::vector<size_t> rank_2(n + 2, 0);
    std::vector<std::vector<Int>> divisors(n + 2);
    for (int k = 1; k <= n; ++k) {
        divisors[k] = snf_divisors(ccd.boundary[k]);
        rank_q[k] = divisors[k].size();
        rank_2[k] = rank_mod2(mod2_from_sparse(ccd.boundary[k]));
    }

    out.betti_rational.resize(n + 1);
    out.betti_mod2.resize(n + 1);
    out.torsion.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        out.betti_rational[k] =
            static_cast<long>(ccd.f[k]) - static_cast<long>(rank_q[k]) - static_cast<long>(rank_q[k + 1]);
        out.betti_mod2[k] =
            static_cast<long>(ccd.f[k]) - static_cast<long>(rank_2[k]) - static_cast<long>(rank_2[k + 1]);
        // torsion of H_k comes from the divisors of boundary_{k+1}
        if (k + 1 <= n)
            for (const Int& d : divisors[k + 1])
                if (d > 1) out.torsion[k].push_back(d);
    }

    long chi_f = 0, chi_b = 0;
    for (int k = 0; k <= n; ++k) {
        const long sgn = (k % 2 == 0) ? 1 : -1;
        chi_f += sgn * static_cast<long>(ccd.f[k]);
        chi_b += sgn * out.betti_rational[k];
    }
    if (chi_f != chi_b) throw Error("InternalCheck", "Euler-Poincare mismatch");
    out.euler_characteristic = chi_f;

    out.fundamental_class_mod2 = BitVec(ccd.f[n]);
    for (size_t i = 0; i < ccd.f[n]; ++i) out.fundamental_class_mod2.set(i, true);
    return out;
}

HomologySummary homology(const SimplicialComplex& c) { return homology(chain_complex(c)); }

long euler_characteristic(const SimplicialComplex& c) {
    return homology(c).euler_characteristic;
}

int kervaire_semichar_from_betti(const std::vector<long>& betti, int dimension) {
    if (dimension % 2 == 0) throw EvenDimension("semi-characteristic needs odd dimension");
    const int k = (dimension - 1) / 2;
    long total = 0;
    for (int i = 0; i <= k && i < static_cast<int>(betti.size()); ++i) total += betti[i];
    return static_cast<int>(((total % 2) + 2) % 2);
}

int kervaire_semichar(const SimplicialComplex& c, Field field) {
    const int n = c.dimension();
    if (n % 2 == 0) throw EvenDimension("semi-characteristic needs odd dimension");
    ManifoldFlags flags = validate(c);
    if (!flags.is_closed) throw NotClosed("semi-characteristic needs a closed complex");
    HomologySummary h = homology(c);
    return kervaire_semichar_from_betti(
        field == Field::rational ? h.betti_rational : h.betti_mod2, n);
}

}  // namespace cobkit
