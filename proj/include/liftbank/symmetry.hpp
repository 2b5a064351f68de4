// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_SYMMETRY_HPP
#define LIFTBANK_SYMMETRY_HPP

#include "liftbank/lifting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace liftbank {

enum class SymmetryKind { Symmetric, Antisymmetric, None };

const char* to_string(SymmetryKind kind) noexcept;

/// Symmetry of an impulse response about the midpoint c of its support.
/// The center is stored doubled so half-sample centers stay integral.
struct SymmetryClass {
    SymmetryKind kind = SymmetryKind::None;
    std::int64_t twice_center = 0;

    bool whole_sample() const noexcept { return twice_center % 2 == 0; }
    /// "0", "5/2", "-1/2"
    std::string center_str() const;

    friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

/// Symmetric if s(n) = s(2c - n), antisymmetric if s(n) = -s(2c - n).
/// Single taps are symmetric about their own index. Float-mode taps are
/// compared within kCoefficientTolerance. DomainError for the zero
/// polynomial.
SymmetryClass classify_filter(const LaurentPoly& p);

enum class GroupLifting { WsGroup, HsGroup, Neither };

const char* to_string(GroupLifting kind) noexcept;

struct GroupLiftingClass {
    GroupLifting kind = GroupLifting::Neither;
    /// Why a step or the base failed (empty on success).
    std::vector<std::string> notes;
};

/// WS group lifting: no base, and every lifting filter is half-sample
/// symmetric about +1/2 (lowpass update) or -1/2 (highpass update).
GroupLiftingClass classify_ws_group(const LiftingCascade& cascade);

/// HS group lifting: lifted from a concentric equal-length HS base bank by
/// whole-sample antisymmetric (WA) filters centered at 0.
GroupLiftingClass classify_hs_group(const LiftingCascade& cascade);

enum class LinearPhase { WS, HS, Neither };

const char* to_string(LinearPhase kind) noexcept;

/// WS: both filters symmetric with odd support length. HS: even lengths,
/// lowpass symmetric and highpass antisymmetric.
LinearPhase classify_linear_phase(const FilterPair& filters);

struct SymmetrySummary {
    GroupLiftingClass ws_group;
    GroupLiftingClass hs_group;
    LinearPhase linear_phase = LinearPhase::Neither;
};

SymmetrySummary summarize_symmetry(const LiftingCascade& cascade, const FilterPair& filters);

} // namespace liftbank

#endif
