// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/polyphase.hpp"

#include "liftbank/error.hpp"

namespace liftbank {

PolyphaseMatrix PolyphaseMatrix::identity(Arithmetic mode) {
    const Scalar one = Scalar::one(mode);
    return {LaurentPoly::constant(one), LaurentPoly(mode), LaurentPoly(mode), LaurentPoly::constant(one)};
}

PolyphaseMatrix PolyphaseMatrix::diagonal(const Scalar& low, const Scalar& high) {
    if (low.mode() != high.mode()) {
        throw ModeMismatch();
    }
    return {LaurentPoly::constant(low), LaurentPoly(low.mode()), LaurentPoly(low.mode()),
            LaurentPoly::constant(high)};
}

PolyphaseMatrix PolyphaseMatrix::gain(const Scalar& k) {
    return diagonal(k.reciprocal(), k);
}

Arithmetic PolyphaseMatrix::mode() const {
    const Arithmetic m = h00.mode();
    if (h01.mode() != m || h10.mode() != m || h11.mode() != m) {
        throw ModeMismatch();
    }
    return m;
}

bool PolyphaseMatrix::is_identity() const {
    return *this == identity(mode());
}

PolyphaseMatrix operator*(const PolyphaseMatrix& a, const PolyphaseMatrix& b) {
    if (a.mode() != b.mode()) {
        throw ModeMismatch();
    }
    return {a.h00 * b.h00 + a.h01 * b.h10, a.h00 * b.h01 + a.h01 * b.h11,
            a.h10 * b.h00 + a.h11 * b.h10, a.h10 * b.h01 + a.h11 * b.h11};
}

bool approx_equal(const PolyphaseMatrix& a, const PolyphaseMatrix& b, double tolerance) {
    return approx_equal(a.h00, b.h00, tolerance) && approx_equal(a.h01, b.h01, tolerance) &&
           approx_equal(a.h10, b.h10, tolerance) && approx_equal(a.h11, b.h11, tolerance);
}

LaurentPoly determinant(const PolyphaseMatrix& m) {
    return m.h00 * m.h11 - m.h01 * m.h10;
}

PolyphaseMatrix inverse_unimodular(const PolyphaseMatrix& m, double tolerance) {
    const Arithmetic mode = m.mode();
    const LaurentPoly det = determinant(m);
    if (!approx_equal(det, LaurentPoly::constant(Scalar::one(mode)), tolerance)) {
        throw NotUnimodular("determinant is " + det.str() + ", not 1: no FIR inverse under unit-determinant normalization");
    }
    return {m.h11, -m.h01, -m.h10, m.h00};
}

FilterPair filters_from_polyphase(const PolyphaseMatrix& m) {
    m.mode(); // rejects mixed-mode entries
    // z * p(z^2) shifts every upsampled index by -1.
    return {m.h00.upsampled() + m.h01.upsampled().delayed(-1),
            m.h10.upsampled() + m.h11.upsampled().delayed(-1)};
}

namespace {

// Splits H(z) = E(z^2) + z O(z^2) into (E, O).
std::pair<LaurentPoly, LaurentPoly> split_phases(const LaurentPoly& filter) {
    LaurentPoly even(filter.mode());
    LaurentPoly odd(filter.mode());
    for (const auto& [index, value] : filter.taps()) {
        if (index % 2 == 0) {
            even.set(index / 2, value);
        } else {
            // index = 2j - 1
            odd.set((index + 1) / 2, value);
        }
    }
    return {std::move(even), std::move(odd)};
}

} // namespace

PolyphaseMatrix polyphase_from_filters(const FilterPair& filters) {
    if (filters.lowpass.mode() != filters.highpass.mode()) {
        throw ModeMismatch();
    }
    auto [h00, h01] = split_phases(filters.lowpass);
    auto [h10, h11] = split_phases(filters.highpass);
    return {std::move(h00), std::move(h01), std::move(h10), std::move(h11)};
}

} // namespace liftbank
