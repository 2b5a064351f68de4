// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_SCALAR_HPP
#define LIFTBANK_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace liftbank {

/// Arithmetic mode of a value. Exact values are reduced rationals; float
/// values are IEEE doubles. The two never mix in one computation.
enum class Arithmetic { Exact, Float };

const char* to_string(Arithmetic mode) noexcept;

/// Default absolute tolerance for float-mode coefficient comparisons.
inline constexpr double kCoefficientTolerance = 1e-12;

/// A coefficient: either an arbitrary-precision rational in canonical
/// reduced form, or a double.
class Scalar {
public:
    /// Exact zero.
    Scalar() = default;

    static Scalar integer(std::int64_t value);
    static Scalar rational(std::int64_t num, std::int64_t den);
    static Scalar rational(mpq_class value);
    static Scalar real(double value);
    static Scalar zero(Arithmetic mode);
    static Scalar one(Arithmetic mode);

    Arithmetic mode() const noexcept {
        return std::holds_alternative<double>(value_) ? Arithmetic::Float : Arithmetic::Exact;
    }
    bool is_exact() const noexcept { return mode() == Arithmetic::Exact; }

    bool is_zero() const;
    bool is_one() const;
    int sign() const;

    /// Exact value; throws DomainError in float mode.
    const mpq_class& exact() const;
    double to_double() const;

    /// Denominator is a power of two. Throws DomainError in float mode.
    bool is_dyadic() const;
    bool is_integer() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Throws DomainError on division by zero.
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    Scalar reciprocal() const;
    Scalar abs() const;
    /// Integer power, negative exponents allowed for nonzero values.
    Scalar pow(int exponent) const;

    /// Exact identity: same mode and same value. Float-mode callers that
    /// want a tolerance use approx_equal.
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    /// Canonical text: "p/q" or "p" in exact mode, shortest round-trip
    /// decimal in float mode.
    std::string str() const;

private:
    std::variant<mpq_class, double> value_{mpq_class(0)};
};

/// Exact equality in exact mode; |a - b| <= tolerance in float mode.
/// Throws ModeMismatch when the modes differ.
bool approx_equal(const Scalar& a, const Scalar& b, double tolerance = kCoefficientTolerance);

/// Parses "p/q", an integer, or a decimal ("0.25", "-1.5e-3").
/// In exact mode decimals are converted exactly (0.1 -> 1/10); exponents are
/// allowed in both modes. Throws DomainError on malformed text or a zero
/// denominator.
Scalar parse_scalar(std::string_view text, Arithmetic mode);

} // namespace liftbank

#endif
