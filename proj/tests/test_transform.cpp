// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/rescaling.hpp"
#include "liftbank/transform.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <limits>

using namespace liftbank;
using namespace liftbank::testing;

namespace {

std::span<const std::int64_t> ints(const std::vector<std::int64_t>& x) { return x; }
std::span<const double> reals(const std::vector<double>& x) { return x; }

/// Random alternating dyadic cascade flagged reversible.
LiftingCascade random_reversible_cascade(std::mt19937_64& rng, RoundingRule rule) {
    const LiftingCascade c = random_alternating_cascade(rng, 6, 4);
    LiftingCascade::Options options;
    options.reversible = true;
    options.rounding = rule;
    return LiftingCascade(c.steps(), q(1), options);
}

} // namespace

TEST_SUITE("transform") {
    TEST_CASE("reversible Haar on a two-sample signal") {
        const auto bands = analyze_signal(haar_cascade(true), ints({2, 3}));
        CHECK(bands.lowpass == std::vector<std::int64_t>{3});
        CHECK(bands.highpass == std::vector<std::int64_t>{1});
        CHECK(synthesize_signal(haar_cascade(true), bands) == std::vector<std::int64_t>{2, 3});
    }

    TEST_CASE("irreversible Haar on a two-sample signal") {
        const auto bands = analyze_signal(haar_cascade(), reals({2.0, 3.0}));
        CHECK(bands.lowpass == std::vector<double>{2.5});
        CHECK(bands.highpass == std::vector<double>{1.0});
        const std::vector<double> back = synthesize_signal(haar_cascade(), bands);
        CHECK(back == std::vector<double>{2.0, 3.0});
    }

    TEST_CASE("identity cascade splits even and odd samples") {
        LiftingCascade::Options reversible;
        reversible.reversible = true;
        const LiftingCascade id({}, q(1), reversible);
        const auto bands = analyze_signal(id, ints({1, 2, 3, 4, 5, 6}));
        CHECK(bands.lowpass == std::vector<std::int64_t>{1, 3, 5});
        CHECK(bands.highpass == std::vector<std::int64_t>{2, 4, 6});
        const auto real_bands = analyze_signal(LiftingCascade({}, q(1)), reals({1, 2, 3, 4}));
        CHECK(real_bands.lowpass == std::vector<double>{1, 3});
        CHECK(real_bands.highpass == std::vector<double>{2, 4});
    }

    TEST_CASE("input validation") {
        CHECK_THROWS_AS(analyze_signal(haar_cascade(true), ints({1, 2, 3})), DomainError);
        CHECK_THROWS_AS(analyze_signal(haar_cascade(true), ints({})), DomainError);
        CHECK_THROWS_AS(analyze_signal(haar_cascade(), reals({1.0})), DomainError);
        CHECK_THROWS_AS(analyze_signal(haar_cascade(), ints({1, 2})), DomainError);
        CHECK_THROWS_AS(synthesize_signal(haar_cascade(true), SubbandPair<std::int64_t>{{1, 2}, {3}}), DomainError);
        CHECK_THROWS_AS(synthesize_signal(haar_cascade(), SubbandPair<double>{{1.0}, {}}), DomainError);
    }

    TEST_CASE("overflow is reported instead of wrapping") {
        LiftingCascade::Options reversible;
        reversible.reversible = true;
        const LiftingCascade big({upper(constant("4"))}, q(1), reversible);
        const std::int64_t huge = std::numeric_limits<std::int64_t>::max() / 2;
        CHECK_THROWS_AS(analyze_signal(big, ints({huge, huge})), DomainError);
    }

    TEST_CASE("dyadic rounding matches the rational rules") {
        std::mt19937_64 rng(0x20d);
        std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
        std::uniform_int_distribution<int> shift(0, 6);
        for (int trial = 0; trial < 2000; ++trial) {
            const std::int64_t n = num(rng);
            const int s = shift(rng);
            for (RoundingRule rule : kAllRoundingRules) {
                const mpq_class value(n, 1L << s);
                CHECK(round_dyadic(n, s, rule) == ref_round(value, rule).get_si());
            }
        }
    }

    TEST_CASE("reversible analysis matches the exact reference") {
        std::mt19937_64 rng(0x2e7);
        for (RoundingRule rule : kAllRoundingRules) {
            for (int trial = 0; trial < 40; ++trial) {
                const LiftingCascade c = random_reversible_cascade(rng, rule);
                const std::vector<std::int64_t> x = random_integer_signal(rng, 16, 1000);
                CAPTURE(to_string(rule));
                CHECK(analyze_signal(c, ints(x)) == ref_reversible_analyze(c, x));
            }
        }
    }

    TEST_CASE("reversible round trip is bit exact") {
        std::mt19937_64 rng(0x2e8);
        for (RoundingRule rule : kAllRoundingRules) {
            for (int trial = 0; trial < 40; ++trial) {
                const LiftingCascade c = random_reversible_cascade(rng, rule);
                for (std::size_t length : {2u, 6u, 32u}) {
                    const std::vector<std::int64_t> x = random_integer_signal(rng, length);
                    CHECK(synthesize_signal(c, analyze_signal(c, ints(x))) == x);
                }
            }
        }
    }

    TEST_CASE("irreversible analysis agrees with direct filtering") {
        std::mt19937_64 rng(0x2e9);
        for (int trial = 0; trial < 50; ++trial) {
            const LiftingCascade c = random_alternating_cascade(rng, 4, 3);
            const std::vector<double> x = random_real_signal(rng, 32);
            const auto lifted = analyze_signal(c, reals(x));
            const auto direct = ref_direct_filter(c, x);
            CHECK(max_abs_difference(lifted.lowpass, direct.lowpass) <= 1e-9);
            CHECK(max_abs_difference(lifted.highpass, direct.highpass) <= 1e-9);
        }
        const LiftingCascade wa = wa_over_haar_cascade();
        const std::vector<double> x = random_real_signal(rng, 32);
        CHECK(max_abs_difference(analyze_signal(wa, reals(x)).lowpass, ref_direct_filter(wa, x).lowpass) <= 1e-12);
        CHECK(max_abs_difference(analyze_signal(wa, reals(x)).highpass, ref_direct_filter(wa, x).highpass) <= 1e-12);
    }

    TEST_CASE("irreversible round trip, including a base matrix") {
        std::mt19937_64 rng(0x2ea);
        for (int trial = 0; trial < 50; ++trial) {
            LiftingCascade c = random_alternating_cascade(rng, 4, 3);
            if (trial % 2 == 0) {
                c = rescale_cascade(c, q("3/2")); // introduces a diagonal base
            }
            const std::vector<double> x = random_real_signal(rng, 24);
            CHECK(max_abs_difference(synthesize_signal(c, analyze_signal(c, reals(x))), x) <= 1e-9);
        }
    }

    TEST_CASE("irreversible path is linear") {
        std::mt19937_64 rng(0x2eb);
        for (int trial = 0; trial < 30; ++trial) {
            const LiftingCascade c = random_alternating_cascade(rng, 4, 3);
            const std::vector<double> x = random_real_signal(rng, 16);
            const std::vector<double> y = random_real_signal(rng, 16);
            std::vector<double> mix(16);
            for (std::size_t i = 0; i < 16; ++i) {
                mix[i] = 2.0 * x[i] - 0.5 * y[i];
            }
            const auto ax = analyze_signal(c, reals(x));
            const auto ay = analyze_signal(c, reals(y));
            const auto am = analyze_signal(c, reals(mix));
            for (std::size_t i = 0; i < 8; ++i) {
                CHECK(std::abs(am.lowpass[i] - (2.0 * ax.lowpass[i] - 0.5 * ay.lowpass[i])) <= 1e-9);
                CHECK(std::abs(am.highpass[i] - (2.0 * ax.highpass[i] - 0.5 * ay.highpass[i])) <= 1e-9);
            }
        }
    }
}
