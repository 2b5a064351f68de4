// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_TRANSFORM_HPP
#define LIFTBANK_TRANSFORM_HPP

#include "liftbank/lifting.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace liftbank {

enum class Boundary { Periodic };

__extension__ typedef __int128 Int128;

template <typename T>
struct SubbandPair {
    std::vector<T> lowpass;
    std::vector<T> highpass;

    friend bool operator==(const SubbandPair&, const SubbandPair&) = default;
};

/// One level of irreversible lifting analysis on an even-length signal:
/// split into even/odd phases, run the steps in order without rounding,
/// then scale lowpass by 1/K and highpass by K. Lifting filters wrap
/// periodically. Reversible cascades run here as their unrounded linear
/// filter bank. DomainError on odd or zero length.
SubbandPair<double> analyze_signal(const LiftingCascade& cascade, std::span<const double> signal,
                                   Boundary boundary = Boundary::Periodic);

/// Inverse of the irreversible analyze_signal.
std::vector<double> synthesize_signal(const LiftingCascade& cascade, const SubbandPair<double>& subbands,
                                      Boundary boundary = Boundary::Periodic);

/// Reversible analysis: every update is computed exactly as a dyadic
/// rational and rounded with the cascade's rule before it is added.
/// DomainError for irreversible cascades, odd lengths, or when a
/// coefficient or an intermediate sum exceeds the 64-bit fixed-point range.
SubbandPair<std::int64_t> analyze_signal(const LiftingCascade& cascade, std::span<const std::int64_t> signal,
                                         Boundary boundary = Boundary::Periodic);

/// Bit-exact inverse of the reversible analyze_signal.
std::vector<std::int64_t> synthesize_signal(const LiftingCascade& cascade,
                                            const SubbandPair<std::int64_t>& subbands,
                                            Boundary boundary = Boundary::Periodic);

/// Rounds num / 2^shift with `rule`, exactly.
std::int64_t round_dyadic(Int128 num, int shift, RoundingRule rule);

} // namespace liftbank

#endif
