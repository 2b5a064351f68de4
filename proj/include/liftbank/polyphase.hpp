// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_POLYPHASE_HPP
#define LIFTBANK_POLYPHASE_HPP

#include "liftbank/laurent.hpp"

namespace liftbank {

/// 2x2 matrix over the Laurent ring. Row 0 is the lowpass channel, row 1 the
/// highpass channel; column 0 acts on even samples, column 1 on odd ones.
struct PolyphaseMatrix {
    LaurentPoly h00;
    LaurentPoly h01;
    LaurentPoly h10;
    LaurentPoly h11;

    static PolyphaseMatrix identity(Arithmetic mode = Arithmetic::Exact);
    /// diag(low, high)
    static PolyphaseMatrix diagonal(const Scalar& low, const Scalar& high);
    /// D_K = diag(1/K, K)
    static PolyphaseMatrix gain(const Scalar& k);

    /// Mode shared by all four entries; ModeMismatch if they disagree.
    Arithmetic mode() const;
    bool is_identity() const;

    friend PolyphaseMatrix operator*(const PolyphaseMatrix& a, const PolyphaseMatrix& b);
    friend bool operator==(const PolyphaseMatrix& a, const PolyphaseMatrix& b) = default;
};

bool approx_equal(const PolyphaseMatrix& a, const PolyphaseMatrix& b,
                  double tolerance = kCoefficientTolerance);

/// h00*h11 - h01*h10
LaurentPoly determinant(const PolyphaseMatrix& m);

/// Adjugate inverse of a matrix with determinant exactly 1 (or within
/// `tolerance` of 1 in float mode). Throws NotUnimodular otherwise.
PolyphaseMatrix inverse_unimodular(const PolyphaseMatrix& m,
                                   double tolerance = kCoefficientTolerance);

/// Lowpass and highpass analysis filters.
struct FilterPair {
    LaurentPoly lowpass;
    LaurentPoly highpass;

    friend bool operator==(const FilterPair&, const FilterPair&) = default;
};

/// H_i(z) = h_i0(z^2) + z h_i1(z^2): even taps of each filter come from
/// column 0, odd taps (advanced by one sample) from column 1.
FilterPair filters_from_polyphase(const PolyphaseMatrix& m);

/// Inverse even/odd split of filters_from_polyphase.
PolyphaseMatrix polyphase_from_filters(const FilterPair& filters);

} // namespace liftbank

#endif
