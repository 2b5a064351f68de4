// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/normalization.hpp"

namespace liftbank {

const char* to_string(Verdict verdict) noexcept {
    switch (verdict) {
    case Verdict::Compliant: return "compliant";
    case Verdict::NonCompliant: return "non-compliant";
    case Verdict::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

namespace {

std::string b_name(long index) {
    return "B_" + std::to_string(index);
}

} // namespace

ComplianceReport check_part2(const LiftingCascade& cascade) {
    ComplianceReport report;
    report.k = cascade.k();
    report.reversible = cascade.reversible();
    report.alternation_ok = cascade.alternates();
    report.tolerance_qualified = cascade.mode() == Arithmetic::Float;

    if (cascade.empty()) {
        report.reasons.emplace_back("cascade has no lifting steps, so m_init is undefined");
        return report;
    }
    const long n = static_cast<long>(cascade.size());
    report.m_init = m_init(cascade);

    if (!report.alternation_ok) {
        for (long i = 1; i < n; ++i) {
            const Update m = cascade.steps()[static_cast<std::size_t>(i)].update;
            if (m == cascade.steps()[static_cast<std::size_t>(i - 1)].update) {
                report.reasons.push_back("steps " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                         " both update channel " + std::to_string(index_of(m)) +
                                         "; the B recursion assumes alternating updates");
            }
        }
        return report;
    }

    bool ok = true;
    const Scalar one = Scalar::one(cascade.mode());
    if (cascade.reversible()) {
        if (!cascade.k().is_one()) {
            report.reasons.push_back("reversible cascade requires K = 1, got K = " + cascade.k().str());
            ok = false;
        }
        bool dyadic = true;
        for (std::size_t i = 0; i < cascade.size(); ++i) {
            if (!cascade.steps()[i].filter.is_dyadic()) {
                report.reasons.push_back("step " + std::to_string(i) + " has a non-dyadic coefficient");
                dyadic = false;
            }
        }
        report.dyadic_ok = dyadic;
        ok = ok && dyadic;
        if (cascade.base()) {
            report.reasons.emplace_back("reversible cascade must not have a base matrix");
            ok = false;
        }
    }

    const DCTrace trace = dc_trace(cascade);
    const long index = *report.m_init == Update::Highpass ? n - 2 : n - 1;
    const Scalar& actual = trace.b_at(index);
    const Scalar required = cascade.reversible() ? one : cascade.k();
    report.b_index = index;
    report.actual_b = actual;
    report.required_value = required;
    const bool matches = cascade.mode() == Arithmetic::Exact
                             ? actual == required
                             : (actual - required).abs().to_double() <= kComplianceTolerance;
    if (!matches) {
        report.reasons.push_back(b_name(index) + " = " + actual.str() + " ≠ " + required.str() + " (" +
                                 (cascade.reversible() ? "reversible normalization requires " + b_name(index) + " = 1"
                                                       : "irreversible normalization requires " + b_name(index) +
                                                             " = K") +
                                 ")");
        ok = false;
    }
    report.verdict = ok ? Verdict::Compliant : Verdict::NonCompliant;
    return report;
}

AnalysisReport analyze(const LiftingCascade& cascade) {
    const Arithmetic mode = cascade.mode();
    const Scalar one = Scalar::one(mode);
    const Scalar minus_one = -one;
    PolyphaseMatrix matrix = evaluate(cascade);
    FilterPair filters = filters_from_polyphase(matrix);
    AnalysisReport report{
        .matrix = matrix,
        .filters = filters,
        .dc_lowpass = filters.lowpass.evaluate(one),
        .nyquist_lowpass = filters.lowpass.evaluate(minus_one),
        .dc_highpass = filters.highpass.evaluate(one),
        .nyquist_highpass = filters.highpass.evaluate(minus_one),
        .det = determinant(matrix),
        .trace = dc_trace(cascade),
        .m_init = cascade.empty() ? std::nullopt : std::optional<Update>(m_init(cascade)),
        .symmetry = summarize_symmetry(cascade, filters),
        .compliance = check_part2(cascade),
    };
    return report;
}

} // namespace liftbank
