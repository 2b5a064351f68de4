// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/rescaling.hpp"

#include "liftbank/error.hpp"

namespace liftbank {

PolyphaseMatrix gamma(const PolyphaseMatrix& a, const Scalar& k) {
    if (k.is_zero()) {
        throw DomainError("inner automorphism gamma_K requires K != 0");
    }
    const Scalar k2 = k * k;
    return {a.h00, a.h01 * k2.reciprocal(), a.h10 * k2, a.h11};
}

LaurentPoly conjugated_filter(const LiftingStep& step, const Scalar& k) {
    if (k.is_zero()) {
        throw DomainError("inner automorphism gamma_K requires K != 0");
    }
    const Scalar k2 = k * k;
    return step.update == Update::Lowpass ? step.filter * k2.reciprocal() : step.filter * k2;
}

LiftingCascade rescale_cascade(const LiftingCascade& cascade, const Scalar& kappa) {
    if (cascade.reversible()) {
        throw DomainError("reversible cascades admit no rescaling: K is fixed at 1");
    }
    if (kappa.is_zero()) {
        throw DomainError("rescaling factor must be nonzero");
    }
    const Scalar inverse = kappa.reciprocal();
    std::vector<LiftingStep> steps;
    steps.reserve(cascade.size());
    for (const LiftingStep& s : cascade.steps()) {
        steps.emplace_back(s.update, conjugated_filter(s, inverse));
    }
    LiftingCascade::Options options;
    options.rounding = cascade.rounding();
    PolyphaseMatrix base = PolyphaseMatrix::gain(inverse) * cascade.base_or_identity();
    if (!base.is_identity()) {
        options.base = std::move(base);
    }
    return LiftingCascade(std::move(steps), cascade.k() * kappa, std::move(options));
}

const char* to_string(Relation relation) noexcept {
    switch (relation) {
    case Relation::Identical: return "identical";
    case Relation::EquivalentModuloRescaling: return "equivalent-modulo-rescaling";
    case Relation::Inequivalent: return "inequivalent";
    }
    return "inequivalent";
}

namespace {

bool same_structure(const LiftingCascade& a, const LiftingCascade& b, double tolerance) {
    if (a.size() != b.size() || !approx_equal(a.k(), b.k(), tolerance)) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.steps()[i].update != b.steps()[i].update ||
            !approx_equal(a.steps()[i].filter, b.steps()[i].filter, tolerance)) {
            return false;
        }
    }
    return approx_equal(a.base_or_identity(), b.base_or_identity(), tolerance);
}

RescalingWitness inequivalent(std::string reason) {
    return {Relation::Inequivalent, std::nullopt, std::move(reason)};
}

} // namespace

RescalingWitness find_rescaling(const LiftingCascade& a, const LiftingCascade& b, double tolerance) {
    if (a.mode() != b.mode()) {
        return inequivalent("arithmetic modes differ");
    }
    if (a.size() != b.size()) {
        return inequivalent("step counts differ (" + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.steps()[i].update != b.steps()[i].update) {
            return inequivalent("update characteristics differ at step " + std::to_string(i));
        }
    }
    if (a.reversible() == b.reversible() && a.rounding() == b.rounding() && same_structure(a, b, tolerance)) {
        return {Relation::Identical, Scalar::one(a.mode()), "all steps, base and K agree"};
    }
    if (a.reversible() || b.reversible()) {
        return inequivalent("reversible cascades admit no rescaling");
    }
    // Rescaling multiplies K by kappa, so the ratio of gains pins kappa down
    // including its sign; the steps only see kappa^2.
    const Scalar kappa = b.k() / a.k();
    if (!same_structure(rescale_cascade(a, kappa), b, tolerance)) {
        return inequivalent("no rescaling maps the first factorization onto the second");
    }
    return {Relation::EquivalentModuloRescaling, kappa.abs(),
            kappa.sign() < 0 ? "related by a negative gain factor; magnitude reported" : ""};
}

} // namespace liftbank
