#include "cobkit/oracle.hpp"

namespace cobkit {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        case Verdict::UnknownPerPaper: return "UnknownPerPaper";
    }
    return "?";
}

std::string to_string(CobGroup g) {
    switch (g) {
        case CobGroup::Z2: return "Z2";
        case CobGroup::Z: return "Z";
        case CobGroup::Trivial: return "Trivial";
        case CobGroup::Unsupported: return "Unsupported";
    }
    return "?";
}

namespace {

void require_closed_spin_pair(const ManifoldRecord& m1, const ManifoldRecord& m2) {
    if (m1.dimension != m2.dimension)
        throw DimensionMismatch("records must have equal dimensions");
    for (const ManifoldRecord* m : {&m1, &m2}) {
        if (!m->closed) throw NotClosed("record '" + m->name + "' is not closed");
        if (!m->spin.has_value())
            throw MissingInvariant("record '" + m->name + "' has no spin flag");
        if (!*m->spin) throw NotSpin("record '" + m->name + "' is not spin");
    }
}

std::string fmt(long v) { return std::to_string(v); }

}  // namespace

std::optional<bool> spin_cobordant_check(const ManifoldRecord& m1, const ManifoldRecord& m2,
                                         std::optional<bool> declared) {
    require_closed_spin_pair(m1, m2);
    const int n = m1.dimension;
    if (n == 3 || n == 6 || n == 7) return true;  // trivial spin cobordism groups
    if (n == 4) {
        if (!m1.sigma || !m2.sigma)
            throw MissingInvariant("dimension-4 spin cobordance needs signatures");
        return *m1.sigma == *m2.sigma;
    }
    return declared;
}

DecisionReport decide_spin_pr(const ManifoldRecord& m1, const ManifoldRecord& m2,
                              std::optional<bool> declared_spin_cobordant) {
    require_closed_spin_pair(m1, m2);
    const int n = m1.dimension;
    if (n < 2) throw BadDimension("decision needs dimension >= 2");

    DecisionReport report;
    report.evidence["n"] = fmt(n);

    std::optional<bool> cobordant = spin_cobordant_check(m1, m2, declared_spin_cobordant);
    if (!cobordant.has_value())
        throw PreconditionUnresolved(
            "spin-cobordance between '" + m1.name + "' and '" + m2.name +
            "' is not derivable in dimension " + fmt(n) + "; pass a declared flag");
    if (n == 3 || n == 6 || n == 7)
        report.preconditions_used.push_back("spin-cobordant: automatic (trivial group)");
    else if (n == 4)
        report.preconditions_used.push_back("spin-cobordant iff equal signature");
    else
        report.preconditions_used.push_back("spin-cobordant: declared");

    if (!*cobordant) {
        report.verdict = Verdict::No;
        report.rule = "SpinCobordance:prerequisite";
        if (n == 4) {
            report.evidence["sigma1"] = fmt(*m1.sigma);
            report.evidence["sigma2"] = fmt(*m2.sigma);
        }
        return report;
    }

    if (n % 2 == 0) {
        report.evidence["chi1"] = fmt(m1.chi);
        report.evidence["chi2"] = fmt(m2.chi);
        if (n == 4) {
            report.rule = "Thm1.3:n4";
            report.evidence["sigma1"] = fmt(*m1.sigma);
            report.evidence["sigma2"] = fmt(*m2.sigma);
        } else if (n == 6) {
            report.rule = "Thm1.3:n6";
        } else {
            report.rule = "Thm1.2:n_even";
        }
        report.verdict = (m1.chi == 0 && m2.chi == 0) ? Verdict::Yes : Verdict::No;
        return report;
    }

    if (n % 8 == 7) {
        report.rule = (n == 7) ? "Thm1.3:n7" : "Thm1.2:n7mod8";
        report.verdict = Verdict::Yes;
        report.evidence["unconditional"] = "true";
        return report;
    }

    const int s1 = m1.semichar(Field::mod2);
    const int s2 = m2.semichar(Field::mod2);
    report.evidence["semichar_mod2_1"] = fmt(s1);
    report.evidence["semichar_mod2_2"] = fmt(s2);

    if (n % 8 == 3) {
        report.rule = (n == 3) ? "Thm1.3:n3" : "Thm1.2:n3mod8";
        report.verdict = (s1 == s2) ? Verdict::Yes : Verdict::No;
        return report;
    }

    // n = 1 mod 4: equal semi-characteristics suffice; the converse is open
    report.rule = "Thm1.2:n1mod4";
    if (s1 == s2) {
        report.verdict = Verdict::Yes;
    } else {
        report.verdict = Verdict::UnknownPerPaper;
        report.evidence["gap"] =
            "only sufficiency is proved for n = 1 mod 4 (Remark 6.1 open question)";
    }
    return report;
}

DecisionReport decide_lorentzian(const ManifoldRecord& m1, const ManifoldRecord& m2) {
    require_closed_spin_pair(m1, m2);
    const int n = m1.dimension;
    DecisionReport report;
    report.evidence["n"] = fmt(n);

    if (n == 4) {
        if (!m1.sigma || !m2.sigma)
            throw MissingInvariant("dimension-4 Lorentzian decision needs signatures");
        report.rule = "Cor5.6:n4";
        report.evidence["chi1"] = fmt(m1.chi);
        report.evidence["chi2"] = fmt(m2.chi);
        report.evidence["sigma1"] = fmt(*m1.sigma);
        report.evidence["sigma2"] = fmt(*m2.sigma);
        report.verdict =
            (m1.chi == m2.chi && *m1.sigma == *m2.sigma) ? Verdict::Yes : Verdict::No;
        return report;
    }
    if (n % 2 == 1) {
        if (n % 8 == 7) {
            report.rule = "Sec6.2:n7mod8";
            report.verdict = Verdict::Yes;
            report.evidence["unconditional"] = "true";
            return report;
        }
        const int s1 = m1.semichar(Field::mod2);
        const int s2 = m2.semichar(Field::mod2);
        report.evidence["semichar_mod2_1"] = fmt(s1);
        report.evidence["semichar_mod2_2"] = fmt(s2);
        if (n == 3) {
            report.rule = "Thm5.2:n3";
            report.verdict = (s1 == s2) ? Verdict::Yes : Verdict::No;
            return report;
        }
        report.rule = "Sec6.2:odd_sufficiency";
        if (s1 == s2) {
            report.verdict = Verdict::Yes;
        } else {
            report.verdict = Verdict::UnknownPerPaper;
            report.evidence["gap"] = "only sufficiency is available for odd n != 3";
        }
        return report;
    }
    report.rule = "Lorentzian:unsupported_dimension";
    report.verdict = Verdict::UnknownPerPaper;
    report.evidence["gap"] = "no Lorentzian criterion is encoded for even n != 4";
    return report;
}

std::pair<DecisionReport, DecisionReport> compare_cobordisms(const ManifoldRecord& m1,
                                                             const ManifoldRecord& m2) {
    require_closed_spin_pair(m1, m2);
    if (m1.dimension != 3) throw BadDimension("comparison is a 3-dimensional statement");
    DecisionReport pr = decide_spin_pr(m1, m2);
    DecisionReport lo = decide_lorentzian(m1, m2);
    if (pr.verdict != lo.verdict)
        throw Error("InternalCheck", "3-dimensional verdicts must coincide");
    return {pr, lo};
}

std::optional<bool> span_criterion(const ManifoldRecord& m) {
    if (!m.closed) throw NotClosed("span criterion needs a closed record");
    const int n = m.dimension;
    switch (((n % 4) + 4) % 4) {
        case 0: {
            if (!m.sigma) return std::nullopt;
            return (*m.sigma % 4 == 0) && m.chi == 0;
        }
        case 1: {
            if (!m.w_top_minus_one_trivial || !m.has_semichar(Field::rational))
                return std::nullopt;
            return *m.w_top_minus_one_trivial && m.semichar(Field::rational) == 0;
        }
        case 2:
            return m.chi == 0;
        default:
            return true;  // always true for n = 3 mod 4
    }
}

DecisionReport cobordism_metric_check(const CobordismRecord& w, MetricCheckMode mode) {
    validate_cobordism_record(w);
    const int d = w.total_dimension;
    DecisionReport report;
    report.evidence["total_dimension"] = fmt(d);
    report.evidence["chi_W"] = fmt(w.chi);
    report.evidence["chi_boundary"] = fmt(w.boundary_chi());

    if (mode == MetricCheckMode::TrivialEulerClass) {
        report.rule = "Cor2.12";
        if (!w.spin) throw NotSpin("trivial-Euler-class mode needs a spin cobordism");
        bool chi_ok = w.chi == 0;
        for (const ManifoldRecord* m : w.boundary())
            if (m->chi != 0) chi_ok = false;
        if (!chi_ok) {
            report.verdict = Verdict::No;
            return report;
        }
        std::optional<bool> span = w.span_geq_2;
        if (span.has_value()) {
            report.preconditions_used.push_back("span >= 2: declared");
        } else {
            // derive via the span table applied to the closed double
            span = span_criterion(double_record(w));
            if (span.has_value()) {
                report.preconditions_used.push_back("span >= 2: derived from the double");
                report.evidence["span_rule"] = "Tbl1:n_mod4_" + std::to_string(((d % 4) + 4) % 4);
            }
        }
        if (!span.has_value())
            throw MissingInvariant("span of '" + w.name + "' is neither declared nor derivable");
        report.evidence["span_geq_2"] = *span ? "true" : "false";
        report.verdict = *span ? Verdict::Yes : Verdict::No;
        return report;
    }

    // metrics on W and 2W
    report.rule = "Prop2.13";
    if (w.boundary_chi() != 0) {
        // a Lorentzian restriction forces the boundary characteristics to vanish
        report.verdict = Verdict::No;
        report.rule = "Prop2.13:boundary_chi";
        return report;
    }
    if (d % 4 == 3) {
        report.rule = "Prop2.13:n3mod4";
        report.verdict = Verdict::Yes;
        return report;
    }
    if (w.chi != 0) {
        report.rule = "Prop2.13:chi_W";
        report.verdict = Verdict::No;
        return report;
    }
    if (d % 4 == 1 && !w.spin) {
        report.rule = "Prop2.13:n1mod4_spin";
        report.verdict = Verdict::UnknownPerPaper;
        report.evidence["gap"] = "the n = 1 mod 4 case is only proved for spin cobordisms";
        return report;
    }
    report.verdict = Verdict::Yes;
    return report;
}

CobordismClass class_in_group(const ManifoldRecord& m) {
    if (!m.closed) throw NotClosed("group classes need closed records");
    if (!m.spin.value_or(false)) throw NotSpin("group classes need spin records");
    if (m.dimension % 2 == 0 && m.chi != 0)
        throw NotEligible("record '" + m.name +
                          "' has nonzero Euler characteristic; not a group element");
    CobordismClass out;
    out.dimension = m.dimension;
    switch (m.dimension) {
        case 3:
            out.group = CobGroup::Z2;
            out.value = m.semichar(Field::mod2);
            break;
        case 4:
            if (!m.sigma) throw MissingInvariant("dimension-4 class needs a signature");
            out.group = CobGroup::Z;
            out.value = *m.sigma;
            break;
        case 6:
        case 7:
            out.group = CobGroup::Trivial;
            out.value = 0;
            break;
        default:
            out.group = CobGroup::Unsupported;
            out.value = 0;
            break;
    }
    return out;
}

CobordismClass group_add(const CobordismClass& a, const CobordismClass& b) {
    if (a.dimension != b.dimension || a.group != b.group)
        throw GroupMismatch("group elements live in different groups");
    CobordismClass out = a;
    switch (a.group) {
        case CobGroup::Z2:
            out.value = (a.value + b.value) % 2;
            break;
        case CobGroup::Z:
            out.value = a.value + b.value;
            break;
        case CobGroup::Trivial:
            out.value = 0;
            break;
        case CobGroup::Unsupported:
            throw GroupMismatch("no group structure is supported in this dimension");
    }
    return out;
}

CobordismClass group_identity(int dimension) {
    CobordismClass out;
    out.dimension = dimension;
    switch (dimension) {
        case 3: out.group = CobGroup::Z2; break;
        case 4: out.group = CobGroup::Z; break;
        case 6:
        case 7: out.group = CobGroup::Trivial; break;
        default: out.group = CobGroup::Unsupported; break;
    }
    out.value = 0;
    return out;
}

CobordismClass ring_product_class(const ManifoldRecord& a, const ManifoldRecord& b) {
    const int n = a.dimension + b.dimension;
    if (n != 3 && n != 4 && n != 6 && n != 7)
        throw UnsupportedDegree("ring product lands outside the supported degrees");
    return class_in_group(product_record(a, b));
}

}  // namespace cobkit
