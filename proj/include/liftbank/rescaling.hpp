// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#ifndef LIFTBANK_RESCALING_HPP
#define LIFTBANK_RESCALING_HPP

#include "liftbank/lifting.hpp"

#include <optional>
#include <string>

namespace liftbank {

/// gamma_K(A) = D_K A D_K^{-1} = [[a, K^-2 b], [K^2 c, d]]. Depends on K^2
/// only. Throws DomainError for K = 0.
PolyphaseMatrix gamma(const PolyphaseMatrix& a, const Scalar& k);

/// Filter of gamma_K(step_matrix(step)).
LaurentPoly conjugated_filter(const LiftingStep& step, const Scalar& k);

/// Rewrites a cascade so that D_{K kappa} absorbs an extra gain kappa:
/// each step becomes gamma_{1/kappa}(S_i), the base becomes
/// D_{1/kappa} B (an identity base is materialized as diag(kappa, 1/kappa))
/// and K becomes K * kappa. evaluate() is unchanged. A base that ends up
/// equal to the identity is dropped.
///
/// Throws DomainError for reversible cascades or kappa = 0.
LiftingCascade rescale_cascade(const LiftingCascade& cascade, const Scalar& kappa);

enum class Relation { Identical, EquivalentModuloRescaling, Inequivalent };

const char* to_string(Relation relation) noexcept;

struct RescalingWitness {
    Relation relation = Relation::Inequivalent;
    /// Positive factor with b = rescale_cascade(a, kappa) up to the sign of
    /// kappa; 1 for identical cascades, absent when inequivalent.
    std::optional<Scalar> kappa;
    std::string reason;
};

/// Decides whether `b` is a rescaling of `a`.
RescalingWitness find_rescaling(const LiftingCascade& a, const LiftingCascade& b,
                                double tolerance = kCoefficientTolerance);

} // namespace liftbank

#endif
