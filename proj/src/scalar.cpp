// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/scalar.hpp"

#include "liftbank/error.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace liftbank {

const char* to_string(Arithmetic mode) noexcept {
    return mode == Arithmetic::Exact ? "exact" : "float";
}

namespace {

void require_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) {
        throw ModeMismatch();
    }
}

mpz_class pow10(unsigned long exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

// Exact conversion of a decimal literal such as "-12.5e-3".
mpq_class parse_decimal_exact(std::string_view text) {
    std::string digits;
    bool negative = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    long fraction_digits = 0;
    bool seen_point = false;
    bool seen_digit = false;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_point) {
                ++fraction_digits;
            }
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) {
        throw DomainError("malformed number '" + std::string(text) + "'");
    }
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') {
            throw DomainError("malformed number '" + std::string(text) + "'");
        }
        ++i;
        const std::string_view rest = text.substr(i);
        const char* first = rest.data();
        if (!rest.empty() && rest.front() == '+') {
            ++first;
        }
        const auto [ptr, ec] = std::from_chars(first, rest.data() + rest.size(), exponent);
        if (ec != std::errc() || ptr != rest.data() + rest.size() || first == rest.data() + rest.size()) {
            throw DomainError("malformed exponent in '" + std::string(text) + "'");
        }
        if (exponent > 4096 || exponent < -4096) {
            throw DomainError("exponent out of range in '" + std::string(text) + "'");
        }
    }
    mpq_class value(mpz_class(digits, 10));
    const long scale = exponent - fraction_digits;
    if (scale >= 0) {
        value *= pow10(static_cast<unsigned long>(scale));
    } else {
        value /= pow10(static_cast<unsigned long>(-scale));
    }
    value.canonicalize();
    return negative ? mpq_class(-value) : value;
}

bool is_integer_literal(std::string_view text) {
    std::size_t i = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
    if (i == text.size()) {
        return false;
    }
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) {
        throw DomainError("malformed integer '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    return mpz_class(s, 10);
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
        text.remove_suffix(1);
    }
    return text;
}

} // namespace

Scalar Scalar::integer(std::int64_t value) {
    Scalar s;
    s.value_ = mpq_class(mpz_class(std::to_string(value), 10));
    return s;
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    mpq_class q(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
    q.canonicalize();
    return rational(std::move(q));
}

Scalar Scalar::rational(mpq_class value) {
    value.canonicalize();
    Scalar s;
    s.value_ = std::move(value);
    return s;
}

Scalar Scalar::real(double value) {
    Scalar s;
    s.value_ = value;
    return s;
}

Scalar Scalar::zero(Arithmetic mode) {
    return mode == Arithmetic::Exact ? Scalar() : real(0.0);
}

Scalar Scalar::one(Arithmetic mode) {
    return mode == Arithmetic::Exact ? integer(1) : real(1.0);
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) {
        return sgn(*q) == 0;
    }
    return std::get<double>(value_) == 0.0;
}

bool Scalar::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) {
        return *q == 1;
    }
    return std::get<double>(value_) == 1.0;
}

int Scalar::sign() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) {
        return sgn(*q);
    }
    const double d = std::get<double>(value_);
    return (d > 0) - (d < 0);
}

const mpq_class& Scalar::exact() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) {
        return *q;
    }
    throw DomainError("exact value requested from a float-mode scalar");
}

double Scalar::to_double() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) {
        return q->get_d();
    }
    return std::get<double>(value_);
}

bool Scalar::is_dyadic() const {
    const mpq_class& q = exact();
    return mpz_popcount(q.get_den_mpz_t()) == 1;
}

bool Scalar::is_integer() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) {
        return q->get_den() == 1;
    }
    const double d = std::get<double>(value_);
    return std::isfinite(d) && std::floor(d) == d;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (auto* q = std::get_if<mpq_class>(&s.value_)) {
        *q = -*q;
    } else {
        std::get<double>(s.value_) = -std::get<double>(s.value_);
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_mode(*this, rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(rhs.value_);
    } else {
        std::get<double>(value_) += std::get<double>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_mode(*this, rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(rhs.value_);
    } else {
        std::get<double>(value_) -= std::get<double>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_mode(*this, rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(rhs.value_);
    } else {
        std::get<double>(value_) *= std::get<double>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_mode(*this, rhs);
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q /= std::get<mpq_class>(rhs.value_);
    } else {
        std::get<double>(value_) /= std::get<double>(rhs.value_);
    }
    return *this;
}

Scalar Scalar::reciprocal() const {
    return one(mode()) / *this;
}

Scalar Scalar::abs() const {
    return sign() < 0 ? -*this : *this;
}

Scalar Scalar::pow(int exponent) const {
    Scalar base = exponent < 0 ? reciprocal() : *this;
    unsigned n = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
    Scalar result = one(mode());
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        base *= base;
        n >>= 1U;
    }
    return result;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.mode() != rhs.mode()) {
        return false;
    }
    if (lhs.is_exact()) {
        return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
    }
    return std::get<double>(lhs.value_) == std::get<double>(rhs.value_);
}

std::string Scalar::str() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) {
        return q->get_str(10);
    }
    const double d = std::get<double>(value_);
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, d);
    std::string text(buffer, result.ptr);
    if (text == "-0") {
        text = "0";
    }
    return text;
}

bool approx_equal(const Scalar& a, const Scalar& b, double tolerance) {
    if (a.mode() != b.mode()) {
        throw ModeMismatch();
    }
    if (a.is_exact()) {
        return a == b;
    }
    return std::fabs(a.to_double() - b.to_double()) <= tolerance;
}

Scalar parse_scalar(std::string_view raw, Arithmetic mode) {
    const std::string_view text = trim(raw);
    if (text.empty()) {
        throw DomainError("empty number");
    }
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const mpz_class num = parse_integer(trim(text.substr(0, slash)));
        const mpz_class den = parse_integer(trim(text.substr(slash + 1)));
        if (den == 0) {
            throw DomainError("zero denominator in '" + std::string(text) + "'");
        }
        mpq_class q(num, den);
        q.canonicalize();
        return mode == Arithmetic::Exact ? Scalar::rational(std::move(q)) : Scalar::real(q.get_d());
    }
    if (mode == Arithmetic::Exact) {
        return Scalar::rational(parse_decimal_exact(text));
    }
    double value = 0.0;
    const char* first = text.data();
    if (text.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw DomainError("malformed number '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) {
        throw DomainError("non-finite number '" + std::string(text) + "'");
    }
    return Scalar::real(value);
}

} // namespace liftbank
