// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/symmetry.hpp"

#include "liftbank/error.hpp"

namespace liftbank {

const char* to_string(SymmetryKind kind) noexcept {
    switch (kind) {
    case SymmetryKind::Symmetric: return "symmetric";
    case SymmetryKind::Antisymmetric: return "antisymmetric";
    case SymmetryKind::None: return "none";
    }
    return "none";
}

const char* to_string(GroupLifting kind) noexcept {
    switch (kind) {
    case GroupLifting::WsGroup: return "WS-group";
    case GroupLifting::HsGroup: return "HS-group";
    case GroupLifting::Neither: return "neither";
    }
    return "neither";
}

const char* to_string(LinearPhase kind) noexcept {
    switch (kind) {
    case LinearPhase::WS: return "WS";
    case LinearPhase::HS: return "HS";
    case LinearPhase::Neither: return "neither";
    }
    return "neither";
}

std::string SymmetryClass::center_str() const {
    if (twice_center % 2 == 0) {
        return std::to_string(twice_center / 2);
    }
    return std::to_string(twice_center) + "/2";
}

SymmetryClass classify_filter(const LaurentPoly& p) {
    if (p.is_zero()) {
        throw DomainError("symmetry of the zero polynomial is undefined");
    }
    const std::int64_t twice_center = p.min_index() + p.max_index();
    bool symmetric = true;
    bool antisymmetric = true;
    for (const auto& [index, value] : p.taps()) {
        const Scalar mirror = p.coefficient(twice_center - index);
        symmetric = symmetric && approx_equal(value, mirror);
        antisymmetric = antisymmetric && approx_equal(value, -mirror);
    }
    if (symmetric) {
        return {SymmetryKind::Symmetric, twice_center};
    }
    if (antisymmetric) {
        return {SymmetryKind::Antisymmetric, twice_center};
    }
    return {SymmetryKind::None, twice_center};
}

namespace {

std::string describe(const SymmetryClass& s) {
    if (s.kind == SymmetryKind::None) {
        return "not symmetric";
    }
    return std::string(to_string(s.kind)) + " about " + s.center_str();
}

} // namespace

GroupLiftingClass classify_ws_group(const LiftingCascade& cascade) {
    GroupLiftingClass result;
    if (cascade.base()) {
        result.notes.emplace_back("base matrix present");
    }
    for (std::size_t i = 0; i < cascade.size(); ++i) {
        const LiftingStep& step = cascade.steps()[i];
        const std::int64_t wanted = step.update == Update::Lowpass ? 1 : -1;
        const SymmetryClass s = classify_filter(step.filter);
        if (s.kind != SymmetryKind::Symmetric || s.twice_center != wanted) {
            result.notes.push_back("step " + std::to_string(i) + ": filter is " + describe(s) +
                                   ", expected symmetric about " + (wanted > 0 ? "1/2" : "-1/2"));
        }
    }
    result.kind = result.notes.empty() ? GroupLifting::WsGroup : GroupLifting::Neither;
    return result;
}

GroupLiftingClass classify_hs_group(const LiftingCascade& cascade) {
    GroupLiftingClass result;
    if (!cascade.base()) {
        result.notes.emplace_back("no base matrix");
    } else {
        const FilterPair base = filters_from_polyphase(*cascade.base());
        if (base.lowpass.is_zero() || base.highpass.is_zero()) {
            result.notes.emplace_back("base filter bank has a zero filter");
        } else {
            const SymmetryClass low = classify_filter(base.lowpass);
            const SymmetryClass high = classify_filter(base.highpass);
            if (low.kind != SymmetryKind::Symmetric || low.whole_sample()) {
                result.notes.push_back("base lowpass is " + describe(low) + ", expected half-sample symmetric");
            }
            if (high.kind != SymmetryKind::Antisymmetric || high.whole_sample()) {
                result.notes.push_back("base highpass is " + describe(high) +
                                       ", expected half-sample antisymmetric");
            }
            if (base.lowpass.support_length() != base.highpass.support_length()) {
                result.notes.emplace_back("base filters have unequal lengths");
            }
            if (low.twice_center != high.twice_center) {
                result.notes.emplace_back("base filters are not concentric");
            }
        }
    }
    for (std::size_t i = 0; i < cascade.size(); ++i) {
        const SymmetryClass s = classify_filter(cascade.steps()[i].filter);
        if (s.kind != SymmetryKind::Antisymmetric || s.twice_center != 0) {
            result.notes.push_back("step " + std::to_string(i) + ": filter is " + describe(s) +
                                   ", expected antisymmetric about 0");
        }
    }
    result.kind = result.notes.empty() ? GroupLifting::HsGroup : GroupLifting::Neither;
    return result;
}

LinearPhase classify_linear_phase(const FilterPair& filters) {
    if (filters.lowpass.is_zero() || filters.highpass.is_zero()) {
        return LinearPhase::Neither;
    }
    const SymmetryClass low = classify_filter(filters.lowpass);
    const SymmetryClass high = classify_filter(filters.highpass);
    const bool odd_lengths = filters.lowpass.support_length() % 2 == 1 && filters.highpass.support_length() % 2 == 1;
    const bool even_lengths = filters.lowpass.support_length() % 2 == 0 && filters.highpass.support_length() % 2 == 0;
    if (odd_lengths && low.kind == SymmetryKind::Symmetric && high.kind == SymmetryKind::Symmetric) {
        return LinearPhase::WS;
    }
    if (even_lengths && low.kind == SymmetryKind::Symmetric && high.kind == SymmetryKind::Antisymmetric) {
        return LinearPhase::HS;
    }
    return LinearPhase::Neither;
}

SymmetrySummary summarize_symmetry(const LiftingCascade& cascade, const FilterPair& filters) {
    return {classify_ws_group(cascade), classify_hs_group(cascade), classify_linear_phase(filters)};
}

} // namespace liftbank
