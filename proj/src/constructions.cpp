#include "cobkit/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace cobkit {

namespace {

SimplicialComplex sphere(int n) {
    if (n < 0) throw UnknownCorpusName("sphere dimension must be >= 0");
    SimplicialComplex c;
    c.vertex_count = n + 2;
    Simplex all(n + 2);
    std::iota(all.begin(), all.end(), 0);
    for (int skip = 0; skip < n + 2; ++skip) {
        Simplex f;
        for (int v = 0; v < n + 2; ++v)
            if (v != skip) f.push_back(v);
        c.facets.push_back(f);
    }
    c.name = "sphere(" + std::to_string(n) + ")";
    normalize_and_check(c);
    return c;
}

SimplicialComplex disk(int n) {
    if (n < 0) throw UnknownCorpusName("disk dimension must be >= 0");
    SimplicialComplex c;
    c.vertex_count = n + 1;
    Simplex f(n + 1);
    std::iota(f.begin(), f.end(), 0);
    c.facets.push_back(f);
    c.name = "disk(" + std::to_string(n) + ")";
    return c;
}

// 7-vertex torus: both cyclic orbits {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex torus2() {
    SimplicialComplex c;
    c.vertex_count = 7;
    for (int i = 0; i < 7; ++i) {
        c.facets.push_back(sorted_simplex({i, (i + 1) % 7, (i + 3) % 7}));
        c.facets.push_back(sorted_simplex({i, (i + 2) % 7, (i + 3) % 7}));
    }
    c.name = "torus2";
    normalize_and_check(c);
    return c;
}

// 6-vertex real projective plane (antipodal quotient of the icosahedron).
SimplicialComplex rp2() {
    SimplicialComplex c;
    c.vertex_count = 6;
    c.facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
    c.name = "rp2";
    normalize_and_check(c);
    return c;
}

// 9-vertex complex projective plane: the four orbit seeds below under the
// translation action of Z3 x Z3 on vertices v = 3x + y.
SimplicialComplex cp2_unoriented() {
    static const int seeds[4][5] = {
        {0, 1, 2, 3, 4}, {0, 1, 3, 4, 6}, {0, 1, 3, 5, 7}, {0, 1, 4, 5, 6}};
    auto translate = [](int v, int a, int b) {
        int x = v / 3, y = v % 3;
        return 3 * ((x + a) % 3) + ((y + b) % 3);
    };
    std::set<Simplex> facets;
    for (const auto& seed : seeds)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Simplex f;
                for (int v : seed) f.push_back(translate(v, a, b));
                facets.insert(sorted_simplex(f));
            }
    SimplicialComplex c;
    c.vertex_count = 9;
    c.facets.assign(facets.begin(), facets.end());
    c.name = "cp2";
    normalize_and_check(c);
    return c;
}

SimplicialComplex cp2() {
    auto oriented = orient(cp2_unoriented());
    // complex orientation: the one whose cup-product form has signature +1
    constexpr bool flip_to_complex_orientation = true;  // calibrated by tests
    if (flip_to_complex_orientation) {
        auto c = reverse_orientation(*oriented);
        c.name = "cp2";
        return c;
    }
    return *oriented;
}

// RP^3 as the antipodal quotient of the barycentric subdivision of the
// boundary of the 4-dimensional cross-polytope: 40 vertices, 192 facets.
SimplicialComplex rp3() {
    // cross-polytope vertices 0..7, antipode v <-> v+4 (mod 8)
    auto antipode = [](int v) { return (v + 4) % 8; };
    // proper faces: subsets with no antipodal pair, sizes 1..4
    std::vector<std::vector<int>> faces;
    for (int mask = 1; mask < 256; ++mask) {
        std::vector<int> s;
        for (int v = 0; v < 8; ++v)
            if (mask & (1 << v)) s.push_back(v);
        if (s.size() > 4) continue;
        bool ok = true;
        for (int v : s)
            if (std::count(s.begin(), s.end(), antipode(v))) ok = false;
        if (ok) faces.push_back(s);
    }
    auto face_antipode = [&](const std::vector<int>& s) {
        std::vector<int> t;
        for (int v : s) t.push_back(antipode(v));
        std::sort(t.begin(), t.end());
        return t;
    };
    // orbit representatives in deterministic order
    std::set<std::vector<int>> reps;
    for (const auto& s : faces) reps.insert(std::min(s, face_antipode(s)));
    std::map<std::vector<int>, int> rep_index;
    int next = 0;
    for (const auto& r : reps) rep_index[r] = next++;
    auto orbit_of = [&](const std::vector<int>& s) {
        return rep_index.at(std::min(s, face_antipode(s)));
    };

    std::map<int, std::vector<std::vector<int>>> by_size;
    for (const auto& s : faces) by_size[static_cast<int>(s.size())].push_back(s);

    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };

    std::set<Simplex> facets;
    for (const auto& f4 : by_size[4])
        for (const auto& f3 : by_size[3]) {
            if (!contains(f4, f3)) continue;
            for (const auto& f2 : by_size[2]) {
                if (!contains(f3, f2)) continue;
                for (const auto& f1 : by_size[1]) {
                    if (!contains(f2, f1)) continue;
                    facets.insert(sorted_simplex(
                        {orbit_of(f1), orbit_of(f2), orbit_of(f3), orbit_of(f4)}));
                }
            }
        }
    SimplicialComplex c;
    c.vertex_count = next;
    c.facets.assign(facets.begin(), facets.end());
    c.name = "rp3";
    normalize_and_check(c);
    return c;
}

// corpus identifier grammar: name | name(arg) | product(expr,expr)
struct NameParser {
    const std::string& s;
    size_t pos = 0;

    explicit NameParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    SimplicialComplex parse() {
        SimplicialComplex c = parse_expr();
        skip_ws();
        if (pos != s.size()) throw UnknownCorpusName("trailing input in '" + s + "'");
        return c;
    }

    SimplicialComplex parse_expr() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string head = s.substr(start, pos - start);
        skip_ws();
        if (head.empty()) throw UnknownCorpusName("expected a corpus name in '" + s + "'");

        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            if (head == "product") {
                SimplicialComplex a = parse_expr();
                expect(',');
                SimplicialComplex b = parse_expr();
                expect(')');
                return product(a, b);
            }
            int n = parse_int();
            expect(')');
            if (head == "sphere") return sphere(n);
            if (head == "disk") return disk(n);
            throw UnknownCorpusName("unknown parametrized corpus name '" + head + "'");
        }
        if (head == "point") return disk(0);
        if (head == "torus2") return torus2();
        if (head == "rp2") return rp2();
        if (head == "rp3") return rp3();
        if (head == "cp2") return cp2();
        throw UnknownCorpusName("unknown corpus name '" + head + "'");
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw UnknownCorpusName("expected an integer in '" + s + "'");
        return std::stoi(s.substr(start, pos - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw UnknownCorpusName(std::string("expected '") + c + "' in '" + s + "'");
        ++pos;
    }
};

int permutation_parity(const std::vector<int>& values) {
    // +1 for an even number of inversions, -1 otherwise
    int inv = 0;
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j)
            if (values[i] > values[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

SimplicialComplex standard(const std::string& name) {
    NameParser parser(name);
    return parser.parse();
}

SimplicialComplex product(const SimplicialComplex& a_in, const SimplicialComplex& b_in) {
    SimplicialComplex a = a_in, b = b_in;
    normalize_and_check(a);
    normalize_and_check(b);
    SimplicialComplex out;
    out.vertex_count = a.vertex_count * b.vertex_count;
    const int bw = b.vertex_count;

    std::set<Simplex> facets;
    for (const Simplex& sa : a.facets) {
        for (const Simplex& sb : b.facets) {
            const int p = static_cast<int>(sa.size()) - 1;
            const int q = static_cast<int>(sb.size()) - 1;
            // monotone staircase paths from (0,0) to (p,q)
            std::vector<std::pair<int, int>> path{{0, 0}};
            std::vector<int> moves;  // 0: advance in a, 1: advance in b
            std::function<void()> rec = [&]() {
                auto [i, j] = path.back();
                if (i == p && j == q) {
                    Simplex f;
                    f.reserve(path.size());
                    for (auto [x, y] : path) f.push_back(sa[x] * bw + sb[y]);
                    facets.insert(f);
                    return;
                }
                if (i < p) {
                    path.push_back({i + 1, j});
                    rec();
                    path.pop_back();
                }
                if (j < q) {
                    path.push_back({i, j + 1});
                    rec();
                    path.pop_back();
                }
            };
            rec();
        }
    }
    out.facets.assign(facets.begin(), facets.end());
    std::string an = a.name.empty() ? "?" : a.name;
    std::string bn = b.name.empty() ? "?" : b.name;
    out.name = "product(" + an + "," + bn + ")";
    normalize_and_check(out);
    return out;
}

bool orientation_consistent(const SimplicialComplex& c) {
    if (!c.orientation) return false;
    std::map<Simplex, int> ridge_sum;
    std::map<Simplex, int> ridge_count;
    for (size_t fi = 0; fi < c.facets.size(); ++fi) {
        const Simplex& f = c.facets[fi];
        for (size_t i = 0; i < f.size(); ++i) {
            Simplex r;
            for (size_t j = 0; j < f.size(); ++j)
                if (j != i) r.push_back(f[j]);
            int induced = (i % 2 == 0) ? 1 : -1;
            ridge_sum[r] += (*c.orientation)[fi] * induced;
            ridge_count[r] += 1;
        }
    }
    for (const auto& [r, cnt] : ridge_count)
        if (cnt == 2 && ridge_sum[r] != 0) return false;
    return true;
}

SimplicialComplex double_complex(const SimplicialComplex& w_in) {
    SimplicialComplex w = w_in;
    normalize_and_check(w);
    if (boundary_ridges(w).empty()) throw ClosedInput("double requires a complex with boundary");
    SimplicialComplex cylinder = product(w, disk(1));
    SimplicialComplex out = compactify_labels(boundary_complex(cylinder));
    out.name = "double(" + (w.name.empty() ? std::string("?") : w.name) + ")";
    if (auto oriented = orient(out)) {
        oriented->name = out.name;
        return *oriented;
    }
    return out;
}

SimplicialComplex connected_sum(const SimplicialComplex& a_in, const SimplicialComplex& b_in) {
    SimplicialComplex a = a_in, b = b_in;
    normalize_and_check(a);
    normalize_and_check(b);
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("connected sum needs equal dimensions");
    const int n = a.dimension();
    if (n < 1) throw BadDimension("connected sum needs dimension >= 1");

    auto prepare = [](SimplicialComplex& c) {
        ManifoldFlags flags = validate(c);
        if (!flags.is_closed) throw NotClosed("connected sum requires closed complexes");
        if (!c.orientation) {
            auto oriented = orient(c);
            if (!oriented) throw NotOriented("connected sum requires orientable complexes");
            c = *oriented;
        }
    };
    prepare(a);
    prepare(b);

    const Simplex fa = a.facets.front();
    const Simplex fb = b.facets.front();

    // fresh labels for the b-vertices away from the removed facet
    std::vector<Vertex> b_rest;
    for (Vertex v = 0; v < b.vertex_count; ++v)
        if (!std::binary_search(fb.begin(), fb.end(), v)) b_rest.push_back(v);

    std::vector<int> perm(fa.begin(), fa.end());
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<Vertex> relabel(b.vertex_count, -1);
        for (size_t i = 0; i < fb.size(); ++i) relabel[fb[i]] = perm[i];
        for (size_t i = 0; i < b_rest.size(); ++i)
            relabel[b_rest[i]] = a.vertex_count + static_cast<Vertex>(i);

        SimplicialComplex out;
        out.vertex_count = a.vertex_count + static_cast<int>(b_rest.size());
        std::vector<int> signs;
        for (size_t i = 1; i < a.facets.size(); ++i) {
            out.facets.push_back(a.facets[i]);
            signs.push_back((*a.orientation)[i]);
        }
        bool degenerate = false;
        for (size_t i = 1; i < b.facets.size(); ++i) {
            std::vector<int> image;
            image.reserve(b.facets[i].size());
            for (Vertex v : b.facets[i]) image.push_back(relabel[v]);
            int parity = permutation_parity(image);
            Simplex f = sorted_simplex(Simplex(image.begin(), image.end()));
            if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
                degenerate = true;
                break;
            }
            out.facets.push_back(std::move(f));
            signs.push_back((*b.orientation)[i] * parity);
        }
        if (degenerate) continue;
        out.orientation = std::move(signs);
        try {
            normalize_and_check(out);
        } catch (const MalformedComplex&) {
            continue;
        }
        if (orientation_consistent(out)) {
            std::string an = a.name.empty() ? "?" : a.name;
            std::string bn = b.name.empty() ? "?" : b.name;
            out.name = "consum(" + an + "," + bn + ")";
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw MalformedComplex("no orientation-reversing gluing found");
}

}  // namespace cobkit
