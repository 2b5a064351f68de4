// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_FACTORIZATION_HPP
#define LIFTBANK_FACTORIZATION_HPP

#include "liftbank/lifting.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liftbank {

/// Which end of the support each division step cancels.
enum class Reduction { HighEnd, LowEnd };
/// Which row-0 entry is reduced when both have the same support length.
enum class FirstChannel { Lowpass, Highpass };

struct FactorStrategy {
    Reduction reduction = Reduction::HighEnd;
    FirstChannel first_channel = FirstChannel::Lowpass;
};

const char* to_string(Reduction reduction) noexcept;
const char* to_string(FirstChannel channel) noexcept;
std::optional<Reduction> parse_reduction(std::string_view name) noexcept;
std::optional<FirstChannel> parse_first_channel(std::string_view name) noexcept;

/// Factors a unit-determinant exact polyphase matrix as D_K S_{N-1} ... S_0
/// (identity base) by Euclidean reduction of its lowpass row.
///
/// The identity factors as the empty cascade with K = 1. Throws
/// NotUnimodular if det != 1 and DomainError in float mode.
LiftingCascade factor_lifting(const PolyphaseMatrix& m, const FactorStrategy& strategy = {});

struct RenormalizeResult {
    LiftingCascade cascade;
    std::vector<std::string> diagnostics;
};

/// Sets K to the unnormalized lowpass DC response E_0(1) so the Part 2
/// check passes. Reversible cascades come back unchanged with a diagnostic,
/// since their normalization has to live in the lifting filters.
///
/// Throws DomainError when the cascade has a base or non-alternating steps,
/// or when E_0(1) = 0.
RenormalizeResult renormalize(const LiftingCascade& cascade);

} // namespace liftbank

#endif
