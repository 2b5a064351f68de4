// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/symmetry.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace liftbank;
using namespace liftbank::testing;

namespace {

/// Half-sample symmetric filter about +1/2 (update) or -1/2 (predict).
LaurentPoly random_hs_filter(std::mt19937_64& rng, Update m) {
    std::uniform_int_distribution<int> pairs(1, 3);
    LaurentPoly p;
    const int count = pairs(rng);
    for (int j = 0; j < count; ++j) {
        const Scalar c = Scalar::rational(random_dyadic(rng));
        // Index pairs (j+1, -j) are symmetric about 1/2, (j, -1-j) about -1/2.
        if (m == Update::Lowpass) {
            p.set(j + 1, c);
            p.set(-j, c);
        } else {
            p.set(j, c);
            p.set(-1 - j, c);
        }
    }
    return p;
}

/// Whole-sample antisymmetric filter about 0.
LaurentPoly random_wa_filter(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pairs(1, 3);
    LaurentPoly p;
    const int count = pairs(rng);
    for (int j = 1; j <= count; ++j) {
        const Scalar c = Scalar::rational(random_dyadic(rng));
        p.set(j, c);
        p.set(-j, -c);
    }
    return p;
}

} // namespace

TEST_SUITE("symmetry") {
    TEST_CASE("filter classification examples") {
        const SymmetryClass predict = classify_filter(poly({{0, "-1/2"}, {-1, "-1/2"}}));
        CHECK(predict.kind == SymmetryKind::Symmetric);
        CHECK(predict.twice_center == -1);
        CHECK(predict.center_str() == "-1/2");
        CHECK_FALSE(predict.whole_sample());

        const SymmetryClass five = classify_filter(poly({{2, "5"}, {3, "5"}}));
        CHECK(five.kind == SymmetryKind::Symmetric);
        CHECK(five.center_str() == "5/2");

        const SymmetryClass wa = classify_filter(poly({{-1, "1"}, {1, "-1"}}));
        CHECK(wa.kind == SymmetryKind::Antisymmetric);
        CHECK(wa.twice_center == 0);
        CHECK(wa.whole_sample());

        CHECK(classify_filter(poly({{0, "1"}, {1, "2"}})).kind == SymmetryKind::None);
        CHECK_THROWS_AS(classify_filter(LaurentPoly()), DomainError);
    }

    TEST_CASE("classification is scale invariant and shift equivariant") {
        std::mt19937_64 rng(0x5);
        std::uniform_int_distribution<int> shift(-4, 4);
        for (int trial = 0; trial < 200; ++trial) {
            const LaurentPoly p = trial % 2 == 0 ? random_hs_filter(rng, Update::Lowpass) : random_dyadic_filter(rng);
            const SymmetryClass base = classify_filter(p);
            const Scalar factor = Scalar::rational(random_dyadic(rng));
            CHECK(classify_filter(p * factor) == base);
            const int d = shift(rng);
            const SymmetryClass moved = classify_filter(p.delayed(d));
            CHECK(moved.kind == base.kind);
            CHECK(moved.twice_center == base.twice_center + 2 * d);
        }
    }

    TEST_CASE("WS group examples") {
        CHECK(classify_ws_group(fivethree_cascade()).kind == GroupLifting::WsGroup);
        const GroupLiftingClass eight = classify_ws_group(identity_eight_cascade());
        CHECK(eight.kind == GroupLifting::Neither);
        CHECK_FALSE(eight.notes.empty());
        CHECK(classify_ws_group(identity_six_cascade()).kind == GroupLifting::Neither);
    }

    TEST_CASE("HS group examples") {
        CHECK(classify_hs_group(wa_over_haar_cascade()).kind == GroupLifting::HsGroup);
        const GroupLiftingClass fivethree = classify_hs_group(fivethree_cascade());
        CHECK(fivethree.kind == GroupLifting::Neither);
        CHECK(fivethree.notes.at(0) == "no base matrix");

        LiftingCascade::Options base_only;
        base_only.base = haar_matrix();
        CHECK(classify_hs_group(LiftingCascade({}, q(1), base_only)).kind == GroupLifting::HsGroup);
        CHECK(classify_hs_group(identity_eight_cascade()).kind == GroupLifting::Neither);
        CHECK(classify_hs_group(identity_six_cascade()).kind == GroupLifting::Neither);
    }

    TEST_CASE("linear phase examples") {
        const FilterPair fivethree = filters_from_polyphase(evaluate(fivethree_cascade()));
        CHECK(fivethree.lowpass.support_length() == 5);
        CHECK(fivethree.highpass.support_length() == 3);
        CHECK(classify_linear_phase(fivethree) == LinearPhase::WS);
        CHECK(classify_linear_phase(filters_from_polyphase(haar_matrix())) == LinearPhase::HS);
        CHECK(classify_linear_phase({constant("1"), poly({{-1, "1"}})}) == LinearPhase::WS);
        CHECK(classify_linear_phase({poly({{0, "1"}, {1, "2"}}), constant("1")}) == LinearPhase::Neither);
    }

    TEST_CASE("WS group cascades yield WS filter banks") {
        std::mt19937_64 rng(0x3a5);
        for (int trial = 0; trial < 100; ++trial) {
            std::uniform_int_distribution<int> length(1, 6);
            const int n = length(rng);
            Update m = trial % 2 == 0 ? Update::Highpass : Update::Lowpass;
            std::vector<LiftingStep> steps;
            for (int i = 0; i < n; ++i) {
                steps.emplace_back(m, random_hs_filter(rng, m));
                m = other(m);
            }
            const LiftingCascade c(std::move(steps), Scalar::rational(random_dyadic(rng)));
            REQUIRE(classify_ws_group(c).kind == GroupLifting::WsGroup);
            CHECK(classify_linear_phase(filters_from_polyphase(evaluate(c))) == LinearPhase::WS);
        }
    }

    TEST_CASE("HS group cascades yield HS filter banks") {
        std::mt19937_64 rng(0x3a6);
        for (int trial = 0; trial < 100; ++trial) {
            std::uniform_int_distribution<int> length(0, 5);
            const int n = length(rng);
            Update m = trial % 2 == 0 ? Update::Highpass : Update::Lowpass;
            std::vector<LiftingStep> steps;
            for (int i = 0; i < n; ++i) {
                steps.emplace_back(m, random_wa_filter(rng));
                m = other(m);
            }
            LiftingCascade::Options options;
            options.base = haar_matrix();
            const LiftingCascade c(std::move(steps), Scalar::rational(random_dyadic(rng)), options);
            REQUIRE(classify_hs_group(c).kind == GroupLifting::HsGroup);
            CHECK(classify_linear_phase(filters_from_polyphase(evaluate(c))) == LinearPhase::HS);
        }
    }

    TEST_CASE("summary collects all three classifications") {
        const LiftingCascade c = fivethree_cascade();
        const SymmetrySummary s = summarize_symmetry(c, filters_from_polyphase(evaluate(c)));
        CHECK(s.ws_group.kind == GroupLifting::WsGroup);
        CHECK(s.hs_group.kind == GroupLifting::Neither);
        CHECK(s.linear_phase == LinearPhase::WS);
    }
}
