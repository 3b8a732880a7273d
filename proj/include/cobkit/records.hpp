#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobkit/forms.hpp"

namespace cobkit {

// A manifold known through its invariants. Fields are optional where the data
// may be unavailable; per-field provenance records whether a value was
// computed from a complex or declared by the source.
struct ManifoldRecord {
    std::string name;
    int dimension = 0;
    bool closed = true;
    std::optional<bool> orientable;
    std::optional<bool> spin;
    long chi = 0;
    std::optional<std::vector<long>> betti_mod2;
    std::optional<std::vector<long>> betti_rational;
    std::optional<int> semichar_mod2;
    std::optional<int> semichar_rational;
    std::optional<long> sigma;
    std::optional<bool> w_top_minus_one_trivial;
    std::map<std::string, std::string> provenance;  // field -> computed | declared

    bool spin_or(bool fallback) const { return spin.value_or(fallback); }

    // Resolved semi-characteristic: the stored field, else derived from the
    // matching Betti vector. Throws EvenDimension / MissingInvariant.
    int semichar(Field field) const;
    bool has_semichar(Field field) const;

    static ManifoldRecord empty(int dimension);
};

// Checks the record's internal consistency. Throws MalformedRecord.
void validate_record(const ManifoldRecord& r);

// All invariants computed from a validated closed complex.
ManifoldRecord from_complex(const SimplicialComplex& c,
                            size_t budget = kDefaultTopSimplexBudget);

ManifoldRecord disjoint_union(const ManifoldRecord& a, const ManifoldRecord& b);
ManifoldRecord connected_sum_record(const ManifoldRecord& a, const ManifoldRecord& b);
ManifoldRecord product_record(const ManifoldRecord& a, const ManifoldRecord& b);

// A cobordism known through its invariants; boundary records are partitioned
// into incoming and outgoing manifolds.
struct CobordismRecord {
    std::string name;
    int total_dimension = 0;
    long chi = 0;
    bool spin = false;
    std::optional<bool> span_geq_2;
    std::vector<ManifoldRecord> boundary_in;
    std::vector<ManifoldRecord> boundary_out;

    std::vector<const ManifoldRecord*> boundary() const;
    long boundary_chi() const;
};

void validate_cobordism_record(const CobordismRecord& w);

// Invariants of the double 2W from the cobordism data alone.
ManifoldRecord double_record(const CobordismRecord& w);

// Counts (k1, k2) of the two standard summands normalizing an even Euler
// characteristic of a 4-dimensional cobordism to zero: chi - 2 k1 + 2 k2 = 0,
// minimal and with k1 * k2 = 0. Throws OddChi.
std::pair<long, long> normalize_chi_plan(long chi, int n_plus_1 = 4);

// Record-side views of the complex operations.
long euler_characteristic(const ManifoldRecord& r);
long signature(const ManifoldRecord& r);  // throws MissingInvariant / BadDimension
int kervaire_semichar(const ManifoldRecord& r, Field field);
bool spin_check(const ManifoldRecord& r);  // the (declared or computed) spin flag

// Bundled record corpus ("k3", "t4" as torus(4), "sphere(3)", "poincare",
// nested product(...)), mirroring the complex corpus grammar.
ManifoldRecord standard_record(const std::string& name);

}  // namespace cobkit
