// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/factorization.hpp"
#include "liftbank/normalization.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace liftbank;
using namespace liftbank::testing;

namespace {

const FactorStrategy kStrategies[] = {
    {Reduction::HighEnd, FirstChannel::Lowpass},
    {Reduction::HighEnd, FirstChannel::Highpass},
    {Reduction::LowEnd, FirstChannel::Lowpass},
    {Reduction::LowEnd, FirstChannel::Highpass},
};

} // namespace

TEST_SUITE("factorization") {
    TEST_CASE("identity factors trivially") {
        for (const FactorStrategy& s : kStrategies) {
            const LiftingCascade c = factor_lifting(PolyphaseMatrix::identity(), s);
            CHECK(c.empty());
            CHECK(c.k() == q(1));
        }
    }

    TEST_CASE("gain matrix factors to its K") {
        const LiftingCascade c = factor_lifting(PolyphaseMatrix::gain(q("3/2")));
        CHECK(c.empty());
        CHECK(c.k() == q("3/2"));
    }

    TEST_CASE("Haar matrix") {
        for (const FactorStrategy& s : kStrategies) {
            const LiftingCascade c = factor_lifting(haar_matrix(), s);
            CHECK(evaluate(c) == haar_matrix());
        }
        // D_2 L(-1/2) U(1)
        const LiftingCascade c = factor_lifting(haar_matrix());
        CHECK(c == LiftingCascade({upper(constant("1")), lower(constant("-1/2"))}, q(2)));
    }

    TEST_CASE("identity liftings of the identity collapse") {
        CHECK(factor_lifting(evaluate(identity_eight_cascade())).empty());
        CHECK(factor_lifting(evaluate(identity_six_cascade())).empty());
    }

    TEST_CASE("delayed monomial entries are handled") {
        // [[z^-1, 0], [0, z]] has unit determinant but is not of the form D_K.
        const PolyphaseMatrix m{poly({{1, "1"}}), LaurentPoly(), LaurentPoly(), poly({{-1, "1"}})};
        for (const FactorStrategy& s : kStrategies) {
            CHECK(evaluate(factor_lifting(m, s)) == m);
        }
        const PolyphaseMatrix twisted{LaurentPoly(), poly({{2, "2"}}), poly({{-2, "-1/2"}}), constant("3")};
        CHECK(evaluate(factor_lifting(twisted)) == twisted);
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(factor_lifting(PolyphaseMatrix::diagonal(q(2), q(1))), NotUnimodular);
        CHECK_THROWS_AS(factor_lifting(PolyphaseMatrix::identity(Arithmetic::Float)), DomainError);
    }

    TEST_CASE("round trip on random cascades") {
        std::mt19937_64 rng(0xfac7);
        for (int trial = 0; trial < 100; ++trial) {
            const LiftingCascade c = random_alternating_cascade(rng);
            const PolyphaseMatrix m = evaluate(c);
            for (const FactorStrategy& s : kStrategies) {
                const LiftingCascade f = factor_lifting(m, s);
                CAPTURE(to_string(s.reduction));
                CAPTURE(to_string(s.first_channel));
                CHECK(ref_from(evaluate(f)) == ref_from(m));
                CHECK(determinant(evaluate(f)) == constant("1"));
                for (const LiftingStep& step : f.steps()) {
                    CHECK_FALSE(step.filter.is_zero());
                }
            }
        }
    }

    TEST_CASE("round trip on non-alternating products") {
        std::mt19937_64 rng(0xfac8);
        std::bernoulli_distribution coin(0.5);
        for (int trial = 0; trial < 50; ++trial) {
            PolyphaseMatrix m = PolyphaseMatrix::gain(Scalar::rational(random_dyadic(rng)));
            for (int i = 0; i < 5; ++i) {
                const LiftingStep s(coin(rng) ? Update::Lowpass : Update::Highpass, random_dyadic_filter(rng, 3));
                m = step_matrix(s) * m;
            }
            CHECK(evaluate(factor_lifting(m)) == m);
        }
    }

    TEST_CASE("strategy names") {
        CHECK(parse_reduction("high-end") == Reduction::HighEnd);
        CHECK(parse_reduction("low-end") == Reduction::LowEnd);
        CHECK_FALSE(parse_reduction("middle").has_value());
        CHECK(parse_first_channel("highpass") == FirstChannel::Highpass);
        CHECK_FALSE(parse_first_channel("bandpass").has_value());
        CHECK(std::string(to_string(Reduction::LowEnd)) == "low-end");
    }
}

TEST_SUITE("renormalize") {
    TEST_CASE("Haar steps with K = 7 reset to K = 1") {
        const LiftingCascade c({lower(constant("-1")), upper(constant("1/2"))}, q(7));
        const RenormalizeResult r = renormalize(c);
        CHECK(r.cascade.k() == q(1));
        CHECK(r.cascade.steps() == c.steps());
        CHECK(check_part2(r.cascade).verdict == Verdict::Compliant);
    }

    TEST_CASE("irreversible counterexample gets K = 3") {
        const RenormalizeResult r = renormalize(counterexample_cascade(false));
        CHECK(r.cascade.k() == q(3));
        CHECK(check_part2(r.cascade).verdict == Verdict::Compliant);
        CHECK_FALSE(r.diagnostics.empty());
    }

    TEST_CASE("reversible counterexample is left unchanged") {
        const LiftingCascade c = counterexample_cascade(true);
        const RenormalizeResult r = renormalize(c);
        CHECK(r.cascade == c);
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(check_part2(r.cascade).verdict == Verdict::NonCompliant);
    }

    TEST_CASE("vanishing lowpass DC has no normalization") {
        const LiftingCascade c({upper(constant("-1"))}, q(1));
        CHECK_THROWS_AS(renormalize(c), DomainError);
    }

    TEST_CASE("renormalize only touches K") {
        std::mt19937_64 rng(0x2e2);
        for (int trial = 0; trial < 200; ++trial) {
            const LiftingCascade c = random_alternating_cascade(rng);
            const Scalar e0 = dc_trace(c).vectors.back().lowpass;
            if (e0.is_zero()) {
                CHECK_THROWS_AS(renormalize(c), DomainError);
                continue;
            }
            const RenormalizeResult r = renormalize(c);
            CHECK(r.cascade.steps() == c.steps());
            CHECK(partial_product(r.cascade, static_cast<long>(c.size()) - 1) ==
                  partial_product(c, static_cast<long>(c.size()) - 1));
            CHECK(check_part2(r.cascade).verdict == Verdict::Compliant);
        }
    }
}
