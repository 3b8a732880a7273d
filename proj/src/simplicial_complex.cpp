#include "cobkit/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace cobkit {

Simplex sorted_simplex(Simplex s) {
    std::sort(s.begin(), s.end());
    return s;
}

int SimplicialComplex::dimension() const {
    size_t top = 0;
    for (const auto& f : facets) top = std::max(top, f.size());
    return static_cast<int>(top) - 1;
}

bool SimplicialComplex::is_pure() const {
    const int n = dimension();
    return std::all_of(facets.begin(), facets.end(),
                       [n](const Simplex& f) { return static_cast<int>(f.size()) == n + 1; });
}

void normalize_and_check(SimplicialComplex& c) {
    for (auto& f : c.facets) {
        if (f.empty()) throw MalformedComplex("empty facet");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw MalformedComplex("repeated vertex in facet");
        if (f.front() < 0 || f.back() >= c.vertex_count)
            throw MalformedComplex("facet vertex out of range");
    }
    // keep orientation aligned while sorting the facet list
    std::vector<size_t> order(c.facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return c.facets[a] < c.facets[b]; });
    std::vector<Simplex> sorted_facets;
    sorted_facets.reserve(c.facets.size());
    std::optional<std::vector<int>> sorted_orient;
    if (c.orientation) {
        if (c.orientation->size() != c.facets.size())
            throw MalformedComplex("orientation length does not match facet count");
        sorted_orient.emplace();
        sorted_orient->reserve(c.facets.size());
    }
    for (size_t i : order) {
        sorted_facets.push_back(c.facets[i]);
        if (sorted_orient) {
            int s = (*c.orientation)[i];
            if (s != 1 && s != -1) throw MalformedComplex("orientation signs must be +1 or -1");
            sorted_orient->push_back(s);
        }
    }
    c.facets = std::move(sorted_facets);
    c.orientation = std::move(sorted_orient);

    for (size_t i = 0; i + 1 < c.facets.size(); ++i)
        if (c.facets[i] == c.facets[i + 1]) throw MalformedComplex("duplicate facet");

    // no facet may be contained in another
    for (size_t i = 0; i < c.facets.size(); ++i) {
        for (size_t j = 0; j < c.facets.size(); ++j) {
            if (i == j || c.facets[i].size() >= c.facets[j].size()) continue;
            if (std::includes(c.facets[j].begin(), c.facets[j].end(), c.facets[i].begin(),
                              c.facets[i].end()))
                throw MalformedComplex("facet contained in another facet");
        }
    }
    if (c.orientation && !c.is_pure())
        throw MalformedComplex("orientation requires all facets of top dimension");
}

namespace {

// ridge -> indices of facets containing it (only for pure complexes of dim n)
std::map<Simplex, std::vector<size_t>> ridge_cofaces(const SimplicialComplex& c) {
    std::map<Simplex, std::vector<size_t>> out;
    for (size_t fi = 0; fi < c.facets.size(); ++fi) {
        const Simplex& f = c.facets[fi];
        if (f.size() < 2) continue;
        for (size_t i = 0; i < f.size(); ++i) {
            Simplex r;
            r.reserve(f.size() - 1);
            for (size_t j = 0; j < f.size(); ++j)
                if (j != i) r.push_back(f[j]);
            out[r].push_back(fi);
        }
    }
    return out;
}

std::vector<int> facet_components(const SimplicialComplex& c) {
    // union-find over facets joined by shared vertices
    std::vector<int> parent(c.facets.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> owner(c.vertex_count, -1);
    for (size_t fi = 0; fi < c.facets.size(); ++fi) {
        for (Vertex v : c.facets[fi]) {
            if (owner[v] == -1)
                owner[v] = static_cast<int>(fi);
            else
                parent[find(static_cast<int>(fi))] = find(owner[v]);
        }
    }
    std::vector<int> comp(c.facets.size());
    for (size_t fi = 0; fi < c.facets.size(); ++fi) comp[fi] = find(static_cast<int>(fi));
    return comp;
}

}  // namespace

std::vector<Simplex> boundary_ridges(const SimplicialComplex& c) {
    std::vector<Simplex> out;
    if (c.facets.empty() || !c.is_pure()) return out;
    for (const auto& [ridge, cofaces] : ridge_cofaces(c))
        if (cofaces.size() == 1) out.push_back(ridge);
    return out;
}

SimplicialComplex boundary_complex(const SimplicialComplex& c) {
    SimplicialComplex b;
    b.vertex_count = c.vertex_count;
    b.facets = boundary_ridges(c);
    b.name = c.name.empty() ? "" : "boundary(" + c.name + ")";
    return b;
}

ManifoldFlags validate(const SimplicialComplex& c) {
    SimplicialComplex checked = c;
    normalize_and_check(checked);

    ManifoldFlags flags;
    if (checked.facets.empty()) {
        flags.is_closed = true;
        flags.is_pseudomanifold = true;
        flags.is_orientable = true;
        return flags;
    }

    const bool pure = checked.is_pure();
    auto cofaces = ridge_cofaces(checked);

    bool closed = pure && checked.dimension() >= 1;
    bool at_most_two = pure;
    for (const auto& [ridge, fs] : cofaces) {
        if (fs.size() != 2) closed = false;
        if (fs.size() > 2) at_most_two = false;
    }
    if (pure && checked.dimension() == 0) closed = true;  // isolated points have no ridges
    flags.is_closed = closed;

    bool pm = pure && at_most_two;
    if (pm) {
        // ridge-adjacency must connect each vertex component of the facet set
        std::vector<int> vcomp = facet_components(checked);
        std::vector<int> parent(checked.facets.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [ridge, fs] : cofaces)
            if (fs.size() == 2) parent[find(static_cast<int>(fs[0]))] = find(static_cast<int>(fs[1]));
        std::set<std::pair<int, int>> pairs;
        for (size_t fi = 0; fi < checked.facets.size(); ++fi)
            pairs.insert({vcomp[fi], find(static_cast<int>(fi))});
        std::set<int> vcomps;
        for (int x : vcomp) vcomps.insert(x);
        pm = pairs.size() == vcomps.size();
    }
    flags.is_pseudomanifold = pm;

    if (pm) {
        auto oriented = orient(checked);
        flags.is_orientable = oriented.has_value();
    }

    // boundary decomposition: connected components of the ridges with one coface
    std::vector<Simplex> bridges = boundary_ridges(checked);
    if (!bridges.empty()) {
        std::vector<int> parent(bridges.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<int> owner(checked.vertex_count, -1);
        for (size_t i = 0; i < bridges.size(); ++i) {
            for (Vertex v : bridges[i]) {
                if (owner[v] == -1)
                    owner[v] = static_cast<int>(i);
                else
                    parent[find(static_cast<int>(i))] = find(owner[v]);
            }
        }
        std::map<int, std::vector<Simplex>> groups;
        for (size_t i = 0; i < bridges.size(); ++i) groups[find(static_cast<int>(i))].push_back(bridges[i]);
        for (auto& [root, fs] : groups) {
            SimplicialComplex comp;
            comp.vertex_count = checked.vertex_count;
            comp.facets = fs;
            flags.boundary_components.push_back(compactify_labels(comp));
        }
    }
    return flags;
}

std::optional<SimplicialComplex> orient(const SimplicialComplex& c) {
    SimplicialComplex out = c;
    normalize_and_check(out);
    if (out.facets.empty()) {
        out.orientation = std::vector<int>{};
        return out;
    }
    if (!out.is_pure()) throw NotPseudomanifold("orientation requires a pure complex");
    auto cofaces = ridge_cofaces(out);
    for (const auto& [ridge, fs] : cofaces)
        if (fs.size() > 2) throw NotPseudomanifold("ridge with more than two cofaces");

    const size_t nf = out.facets.size();
    std::vector<int> sign(nf, 0);

    // induced sign of a facet on the ridge obtained by deleting position pos
    auto induced = [](size_t pos) { return (pos % 2 == 0) ? 1 : -1; };

    for (size_t root = 0; root < nf; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::vector<size_t> stack{root};
        while (!stack.empty()) {
            size_t fi = stack.back();
            stack.pop_back();
            const Simplex& f = out.facets[fi];
            for (size_t i = 0; i < f.size(); ++i) {
                Simplex r;
                for (size_t j = 0; j < f.size(); ++j)
                    if (j != i) r.push_back(f[j]);
                const auto& fs = cofaces[r];
                if (fs.size() != 2) continue;
                size_t other = fs[0] == fi ? fs[1] : fs[0];
                const Simplex& g = out.facets[other];
                size_t gpos = 0;
                for (size_t j = 0; j < g.size(); ++j) {
                    bool in_r = std::binary_search(r.begin(), r.end(), g[j]);
                    if (!in_r) {
                        gpos = j;
                        break;
                    }
                }
                // consistent orientations induce opposite signs on the shared ridge
                int needed = -sign[fi] * induced(i) * induced(gpos);
                if (sign[other] == 0) {
                    sign[other] = needed;
                    stack.push_back(other);
                } else if (sign[other] != needed) {
                    return std::nullopt;
                }
            }
        }
    }
    out.orientation = std::move(sign);
    return out;
}

SimplicialComplex reverse_orientation(SimplicialComplex c) {
    if (!c.orientation) throw NotOriented("cannot reverse a complex with no orientation");
    for (int& s : *c.orientation) s = -s;
    if (!c.name.empty()) c.name = "reversed(" + c.name + ")";
    return c;
}

SimplicialComplex compactify_labels(const SimplicialComplex& c) {
    std::set<Vertex> used;
    for (const auto& f : c.facets) used.insert(f.begin(), f.end());
    std::map<Vertex, Vertex> remap;
    Vertex next = 0;
    for (Vertex v : used) remap[v] = next++;
    SimplicialComplex out;
    out.vertex_count = next;
    out.name = c.name;
    out.orientation = c.orientation;
    out.facets.reserve(c.facets.size());
    for (const auto& f : c.facets) {
        Simplex g;
        g.reserve(f.size());
        for (Vertex v : f) g.push_back(remap.at(v));
        out.facets.push_back(std::move(g));
    }
    normalize_and_check(out);
    return out;
}

}  // namespace cobkit
