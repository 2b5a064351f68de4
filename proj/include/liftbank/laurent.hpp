// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_LAURENT_HPP
#define LIFTBANK_LAURENT_HPP

#include "liftbank/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace liftbank {

/// Finitely supported Laurent polynomial S(z) = sum_n s(n) z^(-n).
///
/// Taps are keyed by the index n, so positive powers of z (advances) sit at
/// negative indices. Only nonzero coefficients are stored; an empty tap map
/// is the zero polynomial. Every coefficient shares the polynomial's mode.
class LaurentPoly {
public:
    using TapMap = std::map<std::int64_t, Scalar>;

    LaurentPoly() : mode_(Arithmetic::Exact) {}
    explicit LaurentPoly(Arithmetic mode) : mode_(mode) {}

    /// Builds from (n, s(n)) pairs; repeated indices accumulate. Throws
    /// ModeMismatch if a coefficient's mode differs from `mode`.
    LaurentPoly(std::initializer_list<std::pair<std::int64_t, Scalar>> taps,
                Arithmetic mode = Arithmetic::Exact);

    static LaurentPoly constant(const Scalar& value);
    /// value * z^(-index)
    static LaurentPoly monomial(const Scalar& value, std::int64_t index);

    Arithmetic mode() const noexcept { return mode_; }
    const TapMap& taps() const noexcept { return taps_; }
    bool is_zero() const noexcept { return taps_.empty(); }
    std::size_t tap_count() const noexcept { return taps_.size(); }
    bool is_monomial() const noexcept { return taps_.size() == 1; }

    /// s(n); zero outside the support.
    Scalar coefficient(std::int64_t index) const;
    void set(std::int64_t index, const Scalar& value);

    // Support bounds; DomainError for the zero polynomial.
    std::int64_t min_index() const;
    std::int64_t max_index() const;
    /// max_index - min_index + 1.
    std::int64_t support_length() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Scalar& factor);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(LaurentPoly lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend LaurentPoly operator*(const Scalar& lhs, LaurentPoly rhs) { return rhs *= lhs; }

    /// Multiplies by z^(-shift): every tap index moves by +shift.
    LaurentPoly delayed(std::int64_t shift) const;
    /// S(z^2): tap n moves to 2n.
    LaurentPoly upsampled() const;

    /// sum_n s(n) * point^(-n). Throws DomainError when point is zero and the
    /// support contains a positive index (a pole at the origin).
    Scalar evaluate(const Scalar& point) const;

    /// Every coefficient has a power-of-two denominator. DomainError in
    /// float mode, where dyadicity is undefined.
    bool is_dyadic() const;

    /// Exact structural equality (same mode, same taps).
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

    /// Human-readable form, e.g. "-1/4 z^2 + 1/4 z".
    std::string str() const;

private:
    void require_mode(Arithmetic other) const;

    TapMap taps_;
    Arithmetic mode_;
};

/// Coefficient-wise comparison with an absolute tolerance (exact in exact
/// mode). Throws ModeMismatch when the modes differ.
bool approx_equal(const LaurentPoly& a, const LaurentPoly& b,
                  double tolerance = kCoefficientTolerance);

} // namespace liftbank

#endif
