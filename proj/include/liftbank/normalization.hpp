// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_NORMALIZATION_HPP
#define LIFTBANK_NORMALIZATION_HPP

#include "liftbank/lifting.hpp"
#include "liftbank/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liftbank {

/// Absolute tolerance on |B - K| for float-mode compliance verdicts.
inline constexpr double kComplianceTolerance = 1e-9;

enum class Verdict { Compliant, NonCompliant, NotApplicable };

const char* to_string(Verdict verdict) noexcept;

/// Outcome of the JPEG 2000 Part 2 gain-normalization check.
///
/// The check selects B_{N-2} when m_init = 1 and B_{N-1} when m_init = 0
/// and requires it to equal K (irreversible) or 1 (reversible).
struct ComplianceReport {
    Verdict verdict = Verdict::NotApplicable;
    /// Value the selected B must take: K, or 1 for reversible cascades.
    std::optional<Scalar> required_value;
    /// The selected B and its index (N-2 or N-1).
    std::optional<Scalar> actual_b;
    std::optional<long> b_index;
    Scalar k;
    std::optional<Update> m_init;
    bool reversible = false;
    bool alternation_ok = false;
    /// Reversible cascades only.
    std::optional<bool> dyadic_ok;
    /// Float mode: the verdict compares within kComplianceTolerance.
    bool tolerance_qualified = false;
    /// One entry per failed sub-condition.
    std::vector<std::string> reasons;
};

ComplianceReport check_part2(const LiftingCascade& cascade);

/// Everything `analyze` reports about a cascade.
struct AnalysisReport {
    PolyphaseMatrix matrix;
    FilterPair filters;
    Scalar dc_lowpass;
    Scalar nyquist_lowpass;
    Scalar dc_highpass;
    Scalar nyquist_highpass;
    LaurentPoly det;
    DCTrace trace;
    std::optional<Update> m_init;
    SymmetrySummary symmetry;
    ComplianceReport compliance;
};

AnalysisReport analyze(const LiftingCascade& cascade);

} // namespace liftbank

#endif
