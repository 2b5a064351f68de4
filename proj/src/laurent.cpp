// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/laurent.hpp"

#include "liftbank/error.hpp"

#include <set>
#include <sstream>

namespace liftbank {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<std::int64_t, Scalar>> taps, Arithmetic mode)
    : mode_(mode) {
    for (const auto& [index, value] : taps) {
        require_mode(value.mode());
        set(index, coefficient(index) + value);
    }
}

LaurentPoly LaurentPoly::constant(const Scalar& value) {
    return monomial(value, 0);
}

LaurentPoly LaurentPoly::monomial(const Scalar& value, std::int64_t index) {
    LaurentPoly p(value.mode());
    p.set(index, value);
    return p;
}

void LaurentPoly::require_mode(Arithmetic other) const {
    if (other != mode_) {
        throw ModeMismatch();
    }
}

Scalar LaurentPoly::coefficient(std::int64_t index) const {
    const auto it = taps_.find(index);
    return it == taps_.end() ? Scalar::zero(mode_) : it->second;
}

void LaurentPoly::set(std::int64_t index, const Scalar& value) {
    require_mode(value.mode());
    if (value.is_zero()) {
        taps_.erase(index);
    } else {
        taps_.insert_or_assign(index, value);
    }
}

std::int64_t LaurentPoly::min_index() const {
    if (taps_.empty()) {
        throw DomainError("support of the zero polynomial is empty");
    }
    return taps_.begin()->first;
}

std::int64_t LaurentPoly::max_index() const {
    if (taps_.empty()) {
        throw DomainError("support of the zero polynomial is empty");
    }
    return taps_.rbegin()->first;
}

std::int64_t LaurentPoly::support_length() const {
    return taps_.empty() ? 0 : max_index() - min_index() + 1;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly result(mode_);
    for (const auto& [index, value] : taps_) {
        result.taps_.emplace(index, -value);
    }
    return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    require_mode(rhs.mode_);
    for (const auto& [index, value] : rhs.taps_) {
        set(index, coefficient(index) + value);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    require_mode(rhs.mode_);
    for (const auto& [index, value] : rhs.taps_) {
        set(index, coefficient(index) - value);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& factor) {
    require_mode(factor.mode());
    if (factor.is_zero()) {
        taps_.clear();
        return *this;
    }
    for (auto& entry : taps_) {
        entry.second *= factor;
    }
    // Float products can underflow to zero.
    std::erase_if(taps_, [](const auto& entry) { return entry.second.is_zero(); });
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    lhs.require_mode(rhs.mode_);
    LaurentPoly result(lhs.mode_);
    for (const auto& [i, a] : lhs.taps_) {
        for (const auto& [j, b] : rhs.taps_) {
            auto [it, inserted] = result.taps_.try_emplace(i + j, a * b);
            if (!inserted) {
                it->second += a * b;
            }
        }
    }
    std::erase_if(result.taps_, [](const auto& entry) { return entry.second.is_zero(); });
    return result;
}

LaurentPoly LaurentPoly::delayed(std::int64_t shift) const {
    LaurentPoly result(mode_);
    for (const auto& [index, value] : taps_) {
        result.taps_.emplace_hint(result.taps_.end(), index + shift, value);
    }
    return result;
}

LaurentPoly LaurentPoly::upsampled() const {
    LaurentPoly result(mode_);
    for (const auto& [index, value] : taps_) {
        result.taps_.emplace_hint(result.taps_.end(), 2 * index, value);
    }
    return result;
}

Scalar LaurentPoly::evaluate(const Scalar& point) const {
    require_mode(point.mode());
    Scalar sum = Scalar::zero(mode_);
    if (point.is_zero()) {
        for (const auto& [index, value] : taps_) {
            if (index > 0) {
                throw DomainError("evaluation at z = 0 of a polynomial with negative powers of z");
            }
            if (index == 0) {
                sum += value;
            }
        }
        return sum;
    }
    for (const auto& [index, value] : taps_) {
        sum += value * point.pow(static_cast<int>(-index));
    }
    return sum;
}

bool LaurentPoly::is_dyadic() const {
    if (mode_ == Arithmetic::Float) {
        throw DomainError("dyadicity is undefined for float-mode coefficients");
    }
    for (const auto& entry : taps_) {
        if (!entry.second.is_dyadic()) {
            return false;
        }
    }
    return true;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.mode_ == rhs.mode_ && lhs.taps_ == rhs.taps_;
}

std::string LaurentPoly::str() const {
    if (taps_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    // Highest power of z first, i.e. ascending tap index.
    for (const auto& [index, value] : taps_) {
        Scalar magnitude = value;
        if (first) {
            if (value.sign() < 0) {
                out << '-';
                magnitude = -value;
            }
        } else {
            out << (value.sign() < 0 ? " - " : " + ");
            if (value.sign() < 0) {
                magnitude = -value;
            }
        }
        first = false;
        const long long power = -index;
        if (power == 0) {
            out << magnitude.str();
            continue;
        }
        if (!magnitude.is_one()) {
            out << magnitude.str() << ' ';
        }
        out << 'z';
        if (power != 1) {
            out << '^' << power;
        }
    }
    return out.str();
}

bool approx_equal(const LaurentPoly& a, const LaurentPoly& b, double tolerance) {
    if (a.mode() != b.mode()) {
        throw ModeMismatch();
    }
    if (a.mode() == Arithmetic::Exact) {
        return a == b;
    }
    std::set<std::int64_t> indices;
    for (const auto& entry : a.taps()) {
        indices.insert(entry.first);
    }
    for (const auto& entry : b.taps()) {
        indices.insert(entry.first);
    }
    for (const std::int64_t index : indices) {
        if (!approx_equal(a.coefficient(index), b.coefficient(index), tolerance)) {
            return false;
        }
    }
    return true;
}

} // namespace liftbank
