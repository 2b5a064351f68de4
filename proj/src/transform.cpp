// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/transform.hpp"

#include "liftbank/error.hpp"

#include <algorithm>
#include <utility>

namespace liftbank {

namespace {

void require_even_length(std::size_t length) {
    if (length == 0 || length % 2 != 0) {
        throw DomainError("signal length must be even and nonzero, got " + std::to_string(length));
    }
}

void require_matching_subbands(std::size_t low, std::size_t high) {
    if (low != high) {
        throw DomainError("subband lengths differ (" + std::to_string(low) + " vs " + std::to_string(high) + ")");
    }
    if (low == 0) {
        throw DomainError("subbands are empty");
    }
}

std::size_t wrap(std::int64_t n, std::size_t length) {
    const auto m = static_cast<std::int64_t>(length);
    return static_cast<std::size_t>(((n % m) + m) % m);
}

// ---------------------------------------------------------------------------
// Irreversible path (double precision)

using RealTaps = std::vector<std::pair<std::int64_t, double>>;

RealTaps real_taps(const LaurentPoly& p) {
    RealTaps taps;
    for (const auto& [index, value] : p.taps()) {
        taps.emplace_back(index, value.to_double());
    }
    return taps;
}

// out[n] += sum_k s(k) x[n - k], periodic.
void accumulate(const RealTaps& taps, const std::vector<double>& x, std::vector<double>& out, double sign) {
    const std::size_t m = x.size();
    for (std::size_t n = 0; n < m; ++n) {
        double sum = 0.0;
        for (const auto& [k, s] : taps) {
            sum += s * x[wrap(static_cast<std::int64_t>(n) - k, m)];
        }
        out[n] += sign * sum;
    }
}

std::pair<std::vector<double>, std::vector<double>> apply_matrix(const PolyphaseMatrix& b,
                                                                 const std::vector<double>& x0,
                                                                 const std::vector<double>& x1) {
    std::vector<double> y0(x0.size(), 0.0);
    std::vector<double> y1(x0.size(), 0.0);
    accumulate(real_taps(b.h00), x0, y0, 1.0);
    accumulate(real_taps(b.h01), x1, y0, 1.0);
    accumulate(real_taps(b.h10), x0, y1, 1.0);
    accumulate(real_taps(b.h11), x1, y1, 1.0);
    return {std::move(y0), std::move(y1)};
}

// ---------------------------------------------------------------------------
// Reversible path (exact dyadic fixed point)

struct DyadicFilter {
    std::vector<std::pair<std::int64_t, std::int64_t>> taps; // (index, numerator)
    int shift = 0;                                           // common denominator 2^shift
};

DyadicFilter dyadic_filter(const LaurentPoly& p) {
    DyadicFilter f;
    for (const auto& entry : p.taps()) {
        const mpq_class& q = entry.second.exact();
        const auto e = static_cast<int>(mpz_scan1(q.get_den_mpz_t(), 0));
        f.shift = std::max(f.shift, e);
    }
    if (f.shift > 62) {
        throw DomainError("lifting filter denominator exceeds the fixed-point range");
    }
    for (const auto& [index, value] : p.taps()) {
        const mpq_class& q = value.exact();
        const auto e = static_cast<int>(mpz_scan1(q.get_den_mpz_t(), 0));
        mpz_class num = q.get_num();
        num <<= static_cast<mp_bitcnt_t>(f.shift - e);
        if (!num.fits_slong_p()) {
            throw DomainError("lifting filter coefficient exceeds the fixed-point range");
        }
        f.taps.emplace_back(index, num.get_si());
    }
    return f;
}

[[noreturn]] void overflow() {
    throw DomainError("reversible lifting update overflows 64-bit integer range");
}

void lift_integer(const DyadicFilter& f, RoundingRule rule, const std::vector<std::int64_t>& source,
                  std::vector<std::int64_t>& target, bool subtract) {
    const std::size_t m = source.size();
    for (std::size_t n = 0; n < m; ++n) {
        Int128 sum = 0;
        for (const auto& [k, num] : f.taps) {
            Int128 term = 0;
            if (__builtin_mul_overflow(static_cast<Int128>(num), static_cast<Int128>(source[wrap(static_cast<std::int64_t>(n) - k, m)]), &term) ||
                __builtin_add_overflow(sum, term, &sum)) {
                overflow();
            }
        }
        const std::int64_t update = round_dyadic(sum, f.shift, rule);
        std::int64_t result = 0;
        const bool bad = subtract ? __builtin_sub_overflow(target[n], update, &result)
                                  : __builtin_add_overflow(target[n], update, &result);
        if (bad) {
            overflow();
        }
        target[n] = result;
    }
}

void require_reversible(const LiftingCascade& cascade) {
    if (!cascade.reversible()) {
        throw DomainError("integer transforms require a reversible cascade");
    }
}

Int128 floor_shift(Int128 num, int shift) {
    return num >> shift; // arithmetic shift floors
}

} // namespace

std::int64_t round_dyadic(Int128 num, int shift, RoundingRule rule) {
    if (shift < 0 || shift > 120) {
        throw DomainError("dyadic shift out of range");
    }
    Int128 result = num;
    if (shift > 0) {
        const Int128 one = 1;
        const Int128 half = one << (shift - 1);
        switch (rule) {
        case RoundingRule::Floor:
            result = floor_shift(num, shift);
            break;
        case RoundingRule::Ceil:
            result = -floor_shift(-num, shift);
            break;
        case RoundingRule::Truncate:
            result = num >= 0 ? floor_shift(num, shift) : -floor_shift(-num, shift);
            break;
        case RoundingRule::HalfUp:
            result = floor_shift(num + half, shift);
            break;
        case RoundingRule::HalfDown:
            result = -floor_shift(-num + half, shift);
            break;
        case RoundingRule::HalfEven: {
            result = floor_shift(num, shift);
            const Int128 remainder = num - (result << shift);
            if (remainder > half || (remainder == half && (result & 1) != 0)) {
                ++result;
            }
            break;
        }
        }
    }
    if (result > INT64_MAX || result < INT64_MIN) {
        overflow();
    }
    return static_cast<std::int64_t>(result);
}

SubbandPair<double> analyze_signal(const LiftingCascade& cascade, std::span<const double> signal, Boundary) {
    require_even_length(signal.size());
    const std::size_t half = signal.size() / 2;
    std::vector<double> x0(half);
    std::vector<double> x1(half);
    for (std::size_t n = 0; n < half; ++n) {
        x0[n] = signal[2 * n];
        x1[n] = signal[2 * n + 1];
    }
    if (cascade.base()) {
        std::tie(x0, x1) = apply_matrix(*cascade.base(), x0, x1);
    }
    for (const LiftingStep& step : cascade.steps()) {
        const RealTaps taps = real_taps(step.filter);
        if (step.update == Update::Lowpass) {
            accumulate(taps, x1, x0, 1.0);
        } else {
            accumulate(taps, x0, x1, 1.0);
        }
    }
    const double k = cascade.k().to_double();
    for (std::size_t n = 0; n < half; ++n) {
        x0[n] /= k;
        x1[n] *= k;
    }
    return {std::move(x0), std::move(x1)};
}

std::vector<double> synthesize_signal(const LiftingCascade& cascade, const SubbandPair<double>& subbands,
                                      Boundary) {
    require_matching_subbands(subbands.lowpass.size(), subbands.highpass.size());
    std::vector<double> x0 = subbands.lowpass;
    std::vector<double> x1 = subbands.highpass;
    const double k = cascade.k().to_double();
    for (std::size_t n = 0; n < x0.size(); ++n) {
        x0[n] *= k;
        x1[n] /= k;
    }
    for (auto it = cascade.steps().rbegin(); it != cascade.steps().rend(); ++it) {
        const RealTaps taps = real_taps(it->filter);
        if (it->update == Update::Lowpass) {
            accumulate(taps, x1, x0, -1.0);
        } else {
            accumulate(taps, x0, x1, -1.0);
        }
    }
    if (cascade.base()) {
        std::tie(x0, x1) = apply_matrix(inverse_unimodular(*cascade.base()), x0, x1);
    }
    std::vector<double> signal(2 * x0.size());
    for (std::size_t n = 0; n < x0.size(); ++n) {
        signal[2 * n] = x0[n];
        signal[2 * n + 1] = x1[n];
    }
    return signal;
}

SubbandPair<std::int64_t> analyze_signal(const LiftingCascade& cascade, std::span<const std::int64_t> signal,
                                         Boundary) {
    require_reversible(cascade);
    require_even_length(signal.size());
    const std::size_t half = signal.size() / 2;
    std::vector<std::int64_t> x0(half);
    std::vector<std::int64_t> x1(half);
    for (std::size_t n = 0; n < half; ++n) {
        x0[n] = signal[2 * n];
        x1[n] = signal[2 * n + 1];
    }
    for (const LiftingStep& step : cascade.steps()) {
        const DyadicFilter f = dyadic_filter(step.filter);
        if (step.update == Update::Lowpass) {
            lift_integer(f, cascade.rounding(), x1, x0, false);
        } else {
            lift_integer(f, cascade.rounding(), x0, x1, false);
        }
    }
    return {std::move(x0), std::move(x1)};
}

std::vector<std::int64_t> synthesize_signal(const LiftingCascade& cascade,
                                            const SubbandPair<std::int64_t>& subbands, Boundary) {
    require_reversible(cascade);
    require_matching_subbands(subbands.lowpass.size(), subbands.highpass.size());
    std::vector<std::int64_t> x0 = subbands.lowpass;
    std::vector<std::int64_t> x1 = subbands.highpass;
    for (auto it = cascade.steps().rbegin(); it != cascade.steps().rend(); ++it) {
        const DyadicFilter f = dyadic_filter(it->filter);
        if (it->update == Update::Lowpass) {
            lift_integer(f, cascade.rounding(), x1, x0, true);
        } else {
            lift_integer(f, cascade.rounding(), x0, x1, true);
        }
    }
    std::vector<std::int64_t> signal(2 * x0.size());
    for (std::size_t n = 0; n < x0.size(); ++n) {
        signal[2 * n] = x0[n];
        signal[2 * n + 1] = x1[n];
    }
    return signal;
}

} // namespace liftbank
