// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_LIFTING_HPP
#define LIFTBANK_LIFTING_HPP

#include "liftbank/polyphase.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liftbank {

/// Update characteristic: which channel a lifting step modifies.
enum class Update : int {
    Lowpass = 0,  ///< x0 += S * x1, upper-triangular matrix
    Highpass = 1, ///< x1 += S * x0, lower-triangular matrix
};

inline int index_of(Update m) noexcept { return static_cast<int>(m); }
inline Update other(Update m) noexcept { return m == Update::Lowpass ? Update::Highpass : Update::Lowpass; }

/// Deterministic rounding used by reversible lifting updates.
enum class RoundingRule {
    HalfUp,   ///< floor(x + 1/2), the default
    HalfDown, ///< ceil(x - 1/2)
    HalfEven, ///< nearest, ties to even
    Floor,
    Ceil,
    Truncate, ///< toward zero
};

inline constexpr RoundingRule kAllRoundingRules[] = {
    RoundingRule::HalfUp, RoundingRule::HalfDown, RoundingRule::HalfEven,
    RoundingRule::Floor,  RoundingRule::Ceil,     RoundingRule::Truncate,
};

const char* to_string(RoundingRule rule) noexcept;
/// Accepts the names produced by to_string ("half-up", "floor", ...).
std::optional<RoundingRule> parse_rounding_rule(std::string_view name) noexcept;

/// Rounds an exact rational to an integer.
mpz_class round_rational(const mpq_class& value, RoundingRule rule);

struct LiftingStep {
    Update update;
    LaurentPoly filter;

    /// Throws InvalidCascade for a zero filter (an identity step).
    LiftingStep(Update update, LaurentPoly filter);

    friend bool operator==(const LiftingStep&, const LiftingStep&) = default;
};

/// [[1, S], [0, 1]] for lowpass updates, [[1, 0], [S, 1]] for highpass ones.
PolyphaseMatrix step_matrix(const LiftingStep& step);

/// H(z) = D_K S_{N-1}(z) ... S_0(z) B(z), with S_0 applied first.
///
/// Invariants, checked on construction: K != 0; all values share one
/// arithmetic mode; a base matrix has unit determinant; a reversible cascade
/// has K = 1, no base, exact mode and dyadic lifting filters.
class LiftingCascade {
public:
    struct Options {
        std::optional<PolyphaseMatrix> base;
        bool reversible = false;
        RoundingRule rounding = RoundingRule::HalfUp;
    };

    LiftingCascade(std::vector<LiftingStep> steps, Scalar k);
    LiftingCascade(std::vector<LiftingStep> steps, Scalar k, Options options);

    const std::vector<LiftingStep>& steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    const Scalar& k() const noexcept { return k_; }
    const std::optional<PolyphaseMatrix>& base() const noexcept { return base_; }
    /// Base matrix, or the identity when none is present.
    PolyphaseMatrix base_or_identity() const;
    Arithmetic mode() const noexcept { return k_.mode(); }
    bool reversible() const noexcept { return reversible_; }
    RoundingRule rounding() const noexcept { return rounding_; }

    /// Consecutive steps always update opposite channels.
    bool alternates() const;

    friend bool operator==(const LiftingCascade&, const LiftingCascade&) = default;

private:
    std::vector<LiftingStep> steps_;
    Scalar k_;
    std::optional<PolyphaseMatrix> base_;
    bool reversible_ = false;
    RoundingRule rounding_ = RoundingRule::HalfUp;
};

/// Lists every invariant a would-be cascade violates (empty when valid).
std::vector<std::string> cascade_violations(const std::vector<LiftingStep>& steps, const Scalar& k,
                                            const LiftingCascade::Options& options);

PolyphaseMatrix evaluate(const LiftingCascade& cascade);

/// E^(n)(z) = S_n ... S_0 B for -1 <= n <= N-1 (no gain factor); n = -1
/// yields the base. Throws DomainError for n outside that range.
PolyphaseMatrix partial_product(const LiftingCascade& cascade, long n);

/// Per-step DC responses of a cascade.
struct DCTrace {
    struct Vector {
        Scalar lowpass;
        Scalar highpass;
        const Scalar& operator[](Update m) const { return m == Update::Lowpass ? lowpass : highpass; }
        friend bool operator==(const Vector&, const Vector&) = default;
    };

    /// E^(n)(1) for n = -1 ... N-1; vectors[0] is the base DC vector.
    std::vector<Vector> vectors;
    /// B_{-2}, B_{-1}, B_0, ..., B_{N-1}: B_n is the entry of E^(n)(1) that
    /// step n modified. With an identity base the sequence starts 1, 1.
    std::vector<Scalar> b;
    /// D_n = S_n(1).
    std::vector<Scalar> d;

    /// B_n for n >= -2.
    const Scalar& b_at(long n) const { return b.at(static_cast<std::size_t>(n + 2)); }
};

/// Runs E^(n)(1) = S_n(1) E^(n-1)(1) from E^(-1)(1) = B(1) [1, 1]^T.
DCTrace dc_trace(const LiftingCascade& cascade);

/// Update characteristic of the last analysis step. Throws DomainError for
/// an empty cascade.
Update m_init(const LiftingCascade& cascade);

/// Cascade whose evaluation is the inverse of evaluate(cascade).
///
/// Steps are reversed and negated, K becomes 1/K and every step is
/// conjugated by D_K so the gain stays in the leading slot. A base matrix
/// cannot stay in the trailing slot of the inverse, so its inverse is
/// factored into lifting steps (exact mode only; DomainError otherwise).
LiftingCascade synthesis_cascade(const LiftingCascade& cascade);

} // namespace liftbank

#endif
