// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/normalization.hpp"
#include "liftbank/report.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace liftbank;
using namespace liftbank::testing;

TEST_SUITE("normalization") {
    TEST_CASE("Haar cascade is compliant") {
        const ComplianceReport r = check_part2(haar_cascade());
        CHECK(r.verdict == Verdict::Compliant);
        CHECK(r.m_init == Update::Lowpass);
        CHECK(r.b_index == 1);
        CHECK(r.actual_b == q(1));
        CHECK(r.required_value == q(1));
        CHECK(r.reasons.empty());
        CHECK_FALSE(r.tolerance_qualified);
    }

    TEST_CASE("dyadic counterexample violates the reversible requirement") {
        const ComplianceReport r = check_part2(counterexample_cascade(true));
        CHECK(r.verdict == Verdict::NonCompliant);
        CHECK(r.b_index == 0);
        CHECK(r.actual_b == q(3));
        CHECK(r.required_value == q(1));
        CHECK(r.dyadic_ok == true);
        REQUIRE(r.reasons.size() == 1);
        CHECK(r.reasons[0].find("B_0 = 3 ≠ 1") != std::string::npos);
    }

    TEST_CASE("5/3 reversible cascade is compliant") {
        const ComplianceReport r = check_part2(fivethree_cascade(true));
        CHECK(r.verdict == Verdict::Compliant);
        const DCTrace t = dc_trace(fivethree_cascade(true));
        CHECK(t.b_at(0) == q(0));
        CHECK(t.b_at(1) == q(1));
    }

    TEST_CASE("irreversible K must match the selected B") {
        const LiftingCascade seven({lower(constant("-1")), upper(constant("1/2"))}, q(7));
        const ComplianceReport r = check_part2(seven);
        CHECK(r.verdict == Verdict::NonCompliant);
        CHECK(r.required_value == q(7));
        CHECK(r.actual_b == q(1));
        CHECK(r.reasons.at(0).find("= K") != std::string::npos);
    }

    TEST_CASE("single lower step requires K = 1") {
        CHECK(check_part2(LiftingCascade({lower(constant("5"))}, q(1))).verdict == Verdict::Compliant);
        const ComplianceReport r = check_part2(LiftingCascade({lower(constant("5"))}, q(2)));
        CHECK(r.verdict == Verdict::NonCompliant);
        CHECK(r.b_index == -1);
    }

    TEST_CASE("cascades outside the recursion's assumptions are not applicable") {
        const ComplianceReport empty = check_part2(LiftingCascade({}, q(1)));
        CHECK(empty.verdict == Verdict::NotApplicable);
        CHECK_FALSE(empty.reasons.empty());

        const ComplianceReport repeated = check_part2(LiftingCascade({lower(constant("1")), lower(constant("2"))}, q(1)));
        CHECK(repeated.verdict == Verdict::NotApplicable);
        CHECK_FALSE(repeated.alternation_ok);
        CHECK(repeated.reasons.size() == 1);
    }

    TEST_CASE("float cascades compare within tolerance") {
        const auto f = [](double v) {
            LaurentPoly p(Arithmetic::Float);
            p.set(0, Scalar::real(v));
            return p;
        };
        const LiftingCascade near({lower(f(-1.0)), upper(f(0.5))}, Scalar::real(1.0 + 1e-10));
        const ComplianceReport r = check_part2(near);
        CHECK(r.verdict == Verdict::Compliant);
        CHECK(r.tolerance_qualified);
        const LiftingCascade far({lower(f(-1.0)), upper(f(0.5))}, Scalar::real(1.0 + 1e-8));
        CHECK(check_part2(far).verdict == Verdict::NonCompliant);
    }

    TEST_CASE("every failed sub-condition is listed") {
        // Built through the irreversible constructor path, then checked as
        // a reversible cascade would be: reuse the spec-level rejection
        // instead, since the constructor forbids K != 1 when reversible.
        LiftingCascade::Options reversible;
        reversible.reversible = true;
        const LiftingCascade c({upper(poly({{0, "1"}, {1, "1"}})), lower(constant("1"))}, q(1), reversible);
        const ComplianceReport r = check_part2(c);
        CHECK(r.verdict == Verdict::NonCompliant);
        CHECK(r.b_index == 0);
        CHECK(r.actual_b == q(3));
    }

    TEST_CASE("analysis report examples") {
        const AnalysisReport haar = analyze(haar_cascade());
        CHECK(haar.dc_lowpass == q(1));
        CHECK(haar.nyquist_highpass == q(-2));
        CHECK(haar.nyquist_lowpass == q(0));
        CHECK(haar.dc_highpass == q(0));
        CHECK(haar.det == constant("1"));

        const AnalysisReport id = analyze(LiftingCascade({}, q(1)));
        CHECK(id.filters.lowpass == constant("1"));
        CHECK(id.filters.highpass == poly({{-1, "1"}}));
        CHECK(id.dc_lowpass == q(1));
        CHECK_FALSE(id.m_init.has_value());

        CHECK(analyze(counterexample_cascade(false)).dc_lowpass == q(3));
    }

    TEST_CASE("compliance is equivalent to the lowpass DC condition") {
        std::mt19937_64 rng(0xe0e0);
        int compliant = 0;
        for (int trial = 0; trial < 300; ++trial) {
            const LiftingCascade c = random_alternating_cascade(rng);
            const RefMatrix e = ref_evaluate(LiftingCascade(c.steps(), q(1)));
            const mpq_class e0 = ref_eval(ref_filter(e, 0), 1);
            const mpq_class h0 = ref_eval(ref_filter(ref_evaluate(c), 0), 1);
            const bool passes = check_part2(c).verdict == Verdict::Compliant;
            CHECK(passes == (e0 == c.k().exact()));
            CHECK(passes == (h0 == 1));
            compliant += passes ? 1 : 0;
        }
        CHECK(compliant > 0);
    }

    TEST_CASE("reports are deterministic") {
        const LiftingCascade c = identity_six_cascade();
        for (ReportFormat format : {ReportFormat::Text, ReportFormat::Json}) {
            CHECK(render_analysis(analyze(c), format) == render_analysis(analyze(c), format));
            CHECK(render_compliance(check_part2(c), format) == render_compliance(check_part2(c), format));
        }
    }

    TEST_CASE("text report cites the failing B") {
        const std::string text = render_compliance(check_part2(counterexample_cascade(true)), ReportFormat::Text);
        CHECK(text.find("non-compliant") != std::string::npos);
        CHECK(text.find("B_0 = 3") != std::string::npos);
    }
}
