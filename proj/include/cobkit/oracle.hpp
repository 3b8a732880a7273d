#pragma once

#include "cobkit/records.hpp"

namespace cobkit {

enum class Verdict { Yes, No, UnknownPerPaper };

std::string to_string(Verdict v);

// Outcome of a decision procedure: the verdict, the rule (theorem + case) that
// produced it, and the invariant values it used.
struct DecisionReport {
    Verdict verdict = Verdict::UnknownPerPaper;
    std::string rule;
    std::map<std::string, std::string> evidence;
    std::vector<std::string> preconditions_used;
};

enum class CobGroup { Z2, Z, Trivial, Unsupported };

std::string to_string(CobGroup g);

struct CobordismClass {
    int dimension = 0;
    CobGroup group = CobGroup::Unsupported;
    long value = 0;

    bool operator==(const CobordismClass&) const = default;
};

// Spin-cobordance between two closed spin records: automatic in dimensions
// 3, 6, 7 (trivial groups), equivalent to equal signatures in dimension 4,
// otherwise resolved only by a declared flag. nullopt = unknown.
std::optional<bool> spin_cobordant_check(const ManifoldRecord& m1, const ManifoldRecord& m2,
                                         std::optional<bool> declared = std::nullopt);

// Existence of an indefinite-signature (2, n-1) spin cobordism between two
// closed spin n-manifold records.
DecisionReport decide_spin_pr(const ManifoldRecord& m1, const ManifoldRecord& m2,
                              std::optional<bool> declared_spin_cobordant = std::nullopt);

// Existence of a Lorentzian spin cobordism between two closed spin records.
DecisionReport decide_lorentzian(const ManifoldRecord& m1, const ManifoldRecord& m2);

// Both verdicts for 3-dimensional records; they provably agree there.
std::pair<DecisionReport, DecisionReport> compare_cobordisms(const ManifoldRecord& m1,
                                                             const ManifoldRecord& m2);

// Necessary-and-sufficient span >= 2 test for a closed record, by dimension
// mod 4. nullopt when a needed invariant is missing.
std::optional<bool> span_criterion(const ManifoldRecord& m);

enum class MetricCheckMode {
    TrivialEulerClass,  // metric induced by a 2-distribution of trivial Euler class
    DoubleMetric,       // non-singular metrics on W and its double
};

DecisionReport cobordism_metric_check(const CobordismRecord& w, MetricCheckMode mode);

// The class of an eligible record in the cobordism group of its dimension.
CobordismClass class_in_group(const ManifoldRecord& m);

CobordismClass group_add(const CobordismClass& a, const CobordismClass& b);
CobordismClass group_identity(int dimension);

// Class of the product of two records, in the graded ring.
CobordismClass ring_product_class(const ManifoldRecord& a, const ManifoldRecord& b);

}  // namespace cobkit
