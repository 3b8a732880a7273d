#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobkit/oracle.hpp"

using namespace cobkit;

namespace {

ManifoldRecord rec(const std::string& name) { return standard_record(name); }

// spin record in an arbitrary dimension with a chosen lower-half Betti sum
ManifoldRecord odd_spin_record(const std::string& name, int dimension, int semichar) {
    ManifoldRecord r;
    r.name = name;
    r.dimension = dimension;
    r.closed = true;
    r.orientable = true;
    r.spin = true;
    r.chi = 0;
    r.semichar_mod2 = semichar;
    r.semichar_rational = semichar;
    return r;
}

}  // namespace

TEST_CASE("spin cobordance: automatic dimensions, signatures, declarations") {
    CHECK(spin_cobordant_check(rec("sphere(3)"), rec("torus(3)")) == true);
    CHECK(spin_cobordant_check(rec("sphere(6)"), rec("torus(6)")) == true);
    CHECK(spin_cobordant_check(rec("sphere(7)"), rec("torus(7)")) == true);

    CHECK(spin_cobordant_check(rec("k3"), rec("torus(4)")) == false);  // -16 vs 0
    CHECK(spin_cobordant_check(rec("torus(4)"), rec("product(sphere(1),sphere(3))")) == true);

    // unsupported dimension: only a declaration resolves it
    ManifoldRecord a = odd_spin_record("a9", 9, 0);
    ManifoldRecord b = odd_spin_record("b9", 9, 1);
    CHECK_FALSE(spin_cobordant_check(a, b).has_value());
    CHECK(spin_cobordant_check(a, b, true) == true);
    CHECK(spin_cobordant_check(a, b, false) == false);

    ManifoldRecord notspin = rec("sphere(3)");
    notspin.spin = false;
    CHECK_THROWS_AS(spin_cobordant_check(notspin, rec("sphere(3)")), NotSpin);
    CHECK_THROWS_AS(spin_cobordant_check(rec("sphere(3)"), rec("sphere(5)")), DimensionMismatch);
}

TEST_CASE("decide_spin_pr: the decision table") {
    // (S3, S3) -> Yes by the three-dimensional criterion
    DecisionReport r = decide_spin_pr(rec("sphere(3)"), rec("sphere(3)"));
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.rule == "Thm1.3:n3");

    // (S3, T3) -> No: semi-characteristics 1 vs 0
    r = decide_spin_pr(rec("sphere(3)"), rec("torus(3)"));
    CHECK(r.verdict == Verdict::No);
    CHECK(r.evidence.at("semichar_mod2_1") == "1");
    CHECK(r.evidence.at("semichar_mod2_2") == "0");

    // (S3, S1xS2) -> No
    r = decide_spin_pr(rec("sphere(3)"), rec("product(sphere(1),sphere(2))"));
    CHECK(r.verdict == Verdict::No);

    // (T4, S1xS3) -> Yes: chi 0 = 0, sigma 0 = 0
    r = decide_spin_pr(rec("torus(4)"), rec("product(sphere(1),sphere(3))"));
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.rule == "Thm1.3:n4");

    // (K3, T4) -> No: not spin-cobordant (and chi != 0)
    r = decide_spin_pr(rec("k3"), rec("torus(4)"));
    CHECK(r.verdict == Verdict::No);
    CHECK(r.rule == "SpinCobordance:prerequisite");

    // spin 7-manifolds: Yes without further assumptions
    r = decide_spin_pr(rec("sphere(7)"), rec("product(sphere(3),sphere(4))"));
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.rule == "Thm1.3:n7");

    // n = 6: chi must vanish on both sides
    r = decide_spin_pr(rec("torus(6)"), rec("product(sphere(3),sphere(3))"));
    CHECK(r.verdict == Verdict::Yes);
    r = decide_spin_pr(rec("torus(6)"), rec("product(sphere(2),sphere(4))"));
    CHECK(r.verdict == Verdict::No);  // chi(S2 x S4) = 4

    // dimension 13 = 5 mod 8: sufficiency only
    ManifoldRecord s13 = rec("sphere(13)");
    ManifoldRecord s1xs12 = rec("product(sphere(1),sphere(12))");
    CHECK(s13.semichar(Field::mod2) == 1);
    CHECK(s1xs12.semichar(Field::mod2) == 0);
    r = decide_spin_pr(s13, s1xs12, true);
    CHECK(r.verdict == Verdict::UnknownPerPaper);
    CHECK(r.rule == "Thm1.2:n1mod4");
    r = decide_spin_pr(s13, s13, true);
    CHECK(r.verdict == Verdict::Yes);

    // unresolved precondition
    CHECK_THROWS_AS(decide_spin_pr(s13, s1xs12), PreconditionUnresolved);

    // n = 11 = 3 mod 8 with declared cobordance: iff on semi-characteristics
    ManifoldRecord a11 = odd_spin_record("a11", 11, 1);
    ManifoldRecord b11 = odd_spin_record("b11", 11, 0);
    r = decide_spin_pr(a11, b11, true);
    CHECK(r.verdict == Verdict::No);
    CHECK(r.rule == "Thm1.2:n3mod8");
    r = decide_spin_pr(a11, a11, true);
    CHECK(r.verdict == Verdict::Yes);

    // n = 15 = 7 mod 8 with declared cobordance: unconditional
    ManifoldRecord a15 = odd_spin_record("a15", 15, 1);
    ManifoldRecord b15 = odd_spin_record("b15", 15, 0);
    r = decide_spin_pr(a15, b15, true);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.rule == "Thm1.2:n7mod8");

    // n = 2: even case needs chi = 0 = chi
    ManifoldRecord t2 = rec("torus(2)");
    r = decide_spin_pr(t2, t2, true);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.rule == "Thm1.2:n_even");
}

TEST_CASE("decide_spin_pr is symmetric in its arguments") {
    std::vector<ManifoldRecord> corpus = {
        rec("sphere(3)"), rec("torus(3)"), rec("rp3"),
        rec("torus(4)"), rec("product(sphere(1),sphere(3))"), rec("k3"),
        rec("sphere(7)"), rec("product(sphere(3),sphere(4))")};
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            if (a.dimension != b.dimension) continue;
            DecisionReport ab = decide_spin_pr(a, b, true);
            DecisionReport ba = decide_spin_pr(b, a, true);
            CHECK(ab.verdict == ba.verdict);
        }
}

TEST_CASE("decide_lorentzian") {
    DecisionReport r = decide_lorentzian(rec("sphere(3)"), rec("sphere(3)"));
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.rule == "Thm5.2:n3");

    r = decide_lorentzian(rec("sphere(3)"), rec("torus(3)"));
    CHECK(r.verdict == Verdict::No);

    // n = 4 needs equal chi and sigma, but chi need not vanish
    ManifoldRecord s2xs2 = rec("s2xs2");
    r = decide_lorentzian(s2xs2, s2xs2);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.rule == "Cor5.6:n4");
    r = decide_lorentzian(s2xs2, rec("torus(4)"));
    CHECK(r.verdict == Verdict::No);  // chi 4 vs 0
    r = decide_lorentzian(rec("k3"), rec("torus(4)"));
    CHECK(r.verdict == Verdict::No);

    // odd dimensions, sufficiency
    r = decide_lorentzian(rec("sphere(13)"), rec("sphere(13)"));
    CHECK(r.verdict == Verdict::Yes);
    r = decide_lorentzian(rec("sphere(13)"), rec("product(sphere(1),sphere(12))"));
    CHECK(r.verdict == Verdict::UnknownPerPaper);
    r = decide_lorentzian(rec("sphere(7)"), rec("product(sphere(3),sphere(4))"));
    CHECK(r.verdict == Verdict::Yes);

    // even n != 4 is not covered
    r = decide_lorentzian(rec("torus(6)"), rec("torus(6)"));
    CHECK(r.verdict == Verdict::UnknownPerPaper);
}

TEST_CASE("compare_cobordisms agrees in dimension 3") {
    std::vector<ManifoldRecord> corpus = {rec("sphere(3)"), rec("torus(3)"), rec("rp3"),
                                          rec("poincare"),
                                          rec("product(sphere(1),sphere(2))")};
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            auto [pr, lo] = compare_cobordisms(a, b);
            CHECK(pr.verdict == lo.verdict);
        }
    // the Poincare sphere pairs with S3 (equal semi-characteristics)
    auto [pr, lo] = compare_cobordisms(rec("sphere(3)"), rec("poincare"));
    CHECK(pr.verdict == Verdict::Yes);
    CHECK(lo.verdict == Verdict::Yes);
    auto [pr2, lo2] = compare_cobordisms(rec("sphere(3)"), rec("product(sphere(1),sphere(2))"));
    CHECK(pr2.verdict == Verdict::No);
    CHECK(lo2.verdict == Verdict::No);
    auto [pr3, lo3] = compare_cobordisms(rec("torus(3)"), rec("torus(3)"));
    CHECK(pr3.verdict == Verdict::Yes);
    CHECK(lo3.verdict == Verdict::Yes);

    CHECK_THROWS_AS(compare_cobordisms(rec("torus(4)"), rec("torus(4)")), BadDimension);
}

TEST_CASE("span criterion by dimension mod 4") {
    // n = 0 mod 4: sigma = 0 mod 4 and chi = 0
    ManifoldRecord cp2ish;
    cp2ish.name = "cp2";
    cp2ish.dimension = 4;
    cp2ish.closed = true;
    cp2ish.chi = 3;
    cp2ish.sigma = 1;
    CHECK(span_criterion(cp2ish) == false);
    CHECK(span_criterion(rec("torus(4)")) == true);
    CHECK(span_criterion(rec("k3")) == false);  // sigma = -16 = 0 mod 4 but chi != 0

    // n = 3 mod 4: always true
    CHECK(span_criterion(rec("sphere(3)")) == true);
    CHECK(span_criterion(rec("poincare")) == true);

    // n = 2 mod 4: chi = 0
    CHECK(span_criterion(rec("torus(2)")) == true);
    CHECK(span_criterion(rec("sphere(2)")) == false);

    // n = 1 mod 4: w_{n-1} = 0 and rational semi-characteristic 0
    CHECK(span_criterion(rec("torus(5)")) == true);
    CHECK(span_criterion(rec("sphere(5)")) == false);  // semichar_R = 1
    ManifoldRecord unknown5 = odd_spin_record("m5", 5, 0);
    unknown5.w_top_minus_one_trivial.reset();
    CHECK_FALSE(span_criterion(unknown5).has_value());

    ManifoldRecord open_rec;
    open_rec.dimension = 4;
    open_rec.closed = false;
    CHECK_THROWS_AS(span_criterion(open_rec), NotClosed);
}

TEST_CASE("cobordism metric checks") {
    // D2 x T2: chi(W) = 0, boundary T3 with chi 0, spin
    CobordismRecord d2xt2;
    d2xt2.name = "d2xt2";
    d2xt2.total_dimension = 4;
    d2xt2.chi = 0;
    d2xt2.spin = true;
    d2xt2.boundary_out.push_back(rec("torus(3)"));
    DecisionReport r = cobordism_metric_check(d2xt2, MetricCheckMode::DoubleMetric);
    CHECK(r.verdict == Verdict::Yes);
    r = cobordism_metric_check(d2xt2, MetricCheckMode::TrivialEulerClass);
    CHECK(r.verdict == Verdict::Yes);  // span derived from the double (n = 0 mod 4)

    // D2 x S2: chi = 2 fails the trivial-Euler-class requirement
    CobordismRecord d2xs2;
    d2xs2.name = "d2xs2";
    d2xs2.total_dimension = 4;
    d2xs2.chi = 2;
    d2xs2.spin = true;
    d2xs2.boundary_out.push_back(rec("product(sphere(1),sphere(2))"));
    r = cobordism_metric_check(d2xs2, MetricCheckMode::TrivialEulerClass);
    CHECK(r.verdict == Verdict::No);
    r = cobordism_metric_check(d2xs2, MetricCheckMode::DoubleMetric);
    CHECK(r.verdict == Verdict::No);  // chi(W) != 0 in an even total dimension

    // total dimension 3 mod 4: Yes without further assumptions
    CobordismRecord w7;
    w7.name = "w7";
    w7.total_dimension = 7;
    w7.chi = 5;
    w7.spin = true;
    w7.boundary_out.push_back(rec("torus(6)"));
    r = cobordism_metric_check(w7, MetricCheckMode::DoubleMetric);
    CHECK(r.verdict == Verdict::Yes);
    CHECK(r.rule == "Prop2.13:n3mod4");

    // 5-dimensional spin cobordism with torus boundary: spin case of 1 mod 4
    CobordismRecord w5;
    w5.name = "w5";
    w5.total_dimension = 5;
    w5.chi = 0;
    w5.spin = true;
    w5.boundary_out.push_back(rec("torus(4)"));
    r = cobordism_metric_check(w5, MetricCheckMode::DoubleMetric);
    CHECK(r.verdict == Verdict::Yes);
    w5.spin = false;
    r = cobordism_metric_check(w5, MetricCheckMode::DoubleMetric);
    CHECK(r.verdict == Verdict::UnknownPerPaper);

    // declared span short-circuits the derivation
    CobordismRecord w6;
    w6.name = "w6";
    w6.total_dimension = 6;
    w6.chi = 0;
    w6.spin = true;
    w6.span_geq_2 = true;
    w6.boundary_out.push_back(rec("torus(5)"));
    r = cobordism_metric_check(w6, MetricCheckMode::TrivialEulerClass);
    CHECK(r.verdict == Verdict::Yes);

    // dimension 5 = 1 mod 4 without declared span: underivable from the double
    CobordismRecord w5u = w5;
    w5u.spin = true;
    CHECK_THROWS_AS(cobordism_metric_check(w5u, MetricCheckMode::TrivialEulerClass),
                    MissingInvariant);
}

TEST_CASE("classes in the cobordism groups") {
    CobordismClass s3 = class_in_group(rec("sphere(3)"));
    CHECK(s3.group == CobGroup::Z2);
    CHECK(s3.value == 1);  // the generator

    CobordismClass t4 = class_in_group(rec("torus(4)"));
    CHECK(t4.group == CobGroup::Z);
    CHECK(t4.value == 0);

    CobordismClass t6 = class_in_group(rec("torus(6)"));
    CHECK(t6.group == CobGroup::Trivial);
    CHECK(t6.value == 0);

    CobordismClass s9 = class_in_group(standard_record("sphere(9)"));
    CHECK(s9.group == CobGroup::Unsupported);

    CHECK_THROWS_AS(class_in_group(rec("k3")), NotEligible);  // chi = 24
    CHECK_THROWS_AS(class_in_group(standard_record("sphere(2)")), NotEligible);
    ManifoldRecord notspin = rec("sphere(3)");
    notspin.spin = false;
    CHECK_THROWS_AS(class_in_group(notspin), NotSpin);
}

TEST_CASE("group arithmetic") {
    CobordismClass one{3, CobGroup::Z2, 1};
    CobordismClass sum = group_add(one, one);
    CHECK(sum.value == 0);
    CHECK(sum.group == CobGroup::Z2);

    CobordismClass a{4, CobGroup::Z, -16};
    CobordismClass b{4, CobGroup::Z, 16};
    CHECK(group_add(a, b).value == 0);

    CobordismClass x{4, CobGroup::Z, 5};
    CHECK(group_add(x, group_identity(4)) == x);
    CHECK(group_add(one, group_identity(3)) == one);

    CHECK_THROWS_AS(group_add(one, a), GroupMismatch);
    CobordismClass unsupported{9, CobGroup::Unsupported, 0};
    CHECK_THROWS_AS(group_add(unsupported, unsupported), GroupMismatch);
}

TEST_CASE("ring products land in the graded ring") {
    CobordismClass c = ring_product_class(rec("sphere(1)"), rec("sphere(2)"));
    CHECK(c.dimension == 3);
    CHECK(c.group == CobGroup::Z2);
    CHECK(c.value == 0);  // semichar(S1 x S2) = 0

    c = ring_product_class(rec("sphere(1)"), rec("sphere(3)"));
    CHECK(c.group == CobGroup::Z);
    CHECK(c.value == 0);

    c = ring_product_class(rec("sphere(1)"), rec("torus(5)"));
    CHECK(c.group == CobGroup::Trivial);

    CHECK_THROWS_AS(ring_product_class(rec("sphere(2)"), rec("sphere(3)")), UnsupportedDegree);
}

TEST_CASE("UnknownPerPaper appears only where the theorems leave a gap") {
    std::vector<ManifoldRecord> corpus = {
        rec("sphere(3)"), rec("torus(3)"),
        rec("torus(4)"), rec("product(sphere(1),sphere(3))"), rec("k3"),
        rec("torus(6)"), rec("product(sphere(2),sphere(4))"),
        rec("sphere(7)"), rec("product(sphere(3),sphere(4))"),
        rec("sphere(13)"), rec("product(sphere(1),sphere(12))"),
        odd_spin_record("a11", 11, 1), odd_spin_record("b11", 11, 0),
        odd_spin_record("a15", 15, 1), odd_spin_record("b15", 15, 0)};
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            if (a.dimension != b.dimension) continue;
            DecisionReport r = decide_spin_pr(a, b, true);
            if (r.verdict != Verdict::UnknownPerPaper) continue;
            CHECK(a.dimension % 4 == 1);
            CHECK(a.semichar(Field::mod2) != b.semichar(Field::mod2));
        }
}

TEST_CASE("homomorphism law: classes add over disjoint unions") {
    std::vector<ManifoldRecord> eligible = {
        rec("sphere(3)"), rec("torus(3)"), rec("rp3"), rec("poincare"),
        rec("product(sphere(1),sphere(2))"),
        rec("torus(4)"), rec("product(sphere(1),sphere(3))")};
    for (const auto& a : eligible)
        for (const auto& b : eligible) {
            if (a.dimension != b.dimension) continue;
            CobordismClass lhs = class_in_group(disjoint_union(a, b));
            CobordismClass rhs = group_add(class_in_group(a), class_in_group(b));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("equivalence relation laws on the eligible corpus") {
    std::vector<ManifoldRecord> eligible = {
        rec("sphere(3)"), rec("torus(3)"), rec("rp3"), rec("poincare"),
        rec("product(sphere(1),sphere(2))"),
        rec("torus(4)"), rec("product(sphere(1),sphere(3))"),
        rec("torus(6)"), rec("product(sphere(3),sphere(3))"),
        rec("sphere(7)"), rec("product(sphere(3),sphere(4))")};
    auto yes = [](const ManifoldRecord& x, const ManifoldRecord& y) {
        return decide_spin_pr(x, y).verdict == Verdict::Yes;
    };
    for (const auto& a : eligible) {
        CHECK(yes(a, a));  // reflexive on the eligible corpus
        for (const auto& b : eligible) {
            if (a.dimension != b.dimension) continue;
            CHECK(yes(a, b) == yes(b, a));  // symmetric
            for (const auto& c : eligible) {
                if (b.dimension != c.dimension) continue;
                if (yes(a, b) && yes(b, c)) CHECK(yes(a, c));  // transitive
            }
        }
    }
    // Yes-verdicts match equal classes in the supported dimensions
    for (const auto& a : eligible)
        for (const auto& b : eligible) {
            if (a.dimension != b.dimension) continue;
            if (a.dimension == 3 || a.dimension == 4)
                CHECK(yes(a, b) == (class_in_group(a) == class_in_group(b)));
        }
}
