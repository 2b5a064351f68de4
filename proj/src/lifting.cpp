// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/lifting.hpp"

#include "liftbank/error.hpp"
#include "liftbank/factorization.hpp"
#include "liftbank/rescaling.hpp"

#include <sstream>

namespace liftbank {

const char* to_string(RoundingRule rule) noexcept {
    switch (rule) {
    case RoundingRule::HalfUp: return "half-up";
    case RoundingRule::HalfDown: return "half-down";
    case RoundingRule::HalfEven: return "half-even";
    case RoundingRule::Floor: return "floor";
    case RoundingRule::Ceil: return "ceil";
    case RoundingRule::Truncate: return "truncate";
    }
    return "half-up";
}

std::optional<RoundingRule> parse_rounding_rule(std::string_view name) noexcept {
    for (const RoundingRule rule : kAllRoundingRules) {
        if (name == to_string(rule)) {
            return rule;
        }
    }
    return std::nullopt;
}

mpz_class round_rational(const mpq_class& value, RoundingRule rule) {
    mpz_class result;
    const mpz_srcptr num = value.get_num_mpz_t();
    const mpz_srcptr den = value.get_den_mpz_t();
    switch (rule) {
    case RoundingRule::Floor:
        mpz_fdiv_q(result.get_mpz_t(), num, den);
        return result;
    case RoundingRule::Ceil:
        mpz_cdiv_q(result.get_mpz_t(), num, den);
        return result;
    case RoundingRule::Truncate:
        mpz_tdiv_q(result.get_mpz_t(), num, den);
        return result;
    case RoundingRule::HalfUp: {
        const mpq_class shifted = value + mpq_class(1, 2);
        mpz_fdiv_q(result.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        return result;
    }
    case RoundingRule::HalfDown: {
        const mpq_class shifted = value - mpq_class(1, 2);
        mpz_cdiv_q(result.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        return result;
    }
    case RoundingRule::HalfEven: {
        mpz_fdiv_q(result.get_mpz_t(), num, den);
        const mpq_class fraction = value - mpq_class(result);
        const int cmp = ::cmp(fraction, mpq_class(1, 2));
        if (cmp > 0 || (cmp == 0 && mpz_odd_p(result.get_mpz_t()))) {
            ++result;
        }
        return result;
    }
    }
    return result;
}

LiftingStep::LiftingStep(Update update_, LaurentPoly filter_)
    : update(update_), filter(std::move(filter_)) {
    if (filter.is_zero()) {
        throw InvalidCascade("lifting step has a zero filter");
    }
}

PolyphaseMatrix step_matrix(const LiftingStep& step) {
    PolyphaseMatrix m = PolyphaseMatrix::identity(step.filter.mode());
    if (step.update == Update::Lowpass) {
        m.h01 = step.filter;
    } else {
        m.h10 = step.filter;
    }
    return m;
}

std::vector<std::string> cascade_violations(const std::vector<LiftingStep>& steps, const Scalar& k,
                                            const LiftingCascade::Options& options) {
    std::vector<std::string> problems;
    const Arithmetic mode = k.mode();
    if (k.is_zero()) {
        problems.emplace_back("scaling factor K must be nonzero");
    }
    bool modes_ok = true;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].filter.mode() != mode) {
            problems.push_back("step " + std::to_string(i) + " uses " + to_string(steps[i].filter.mode()) +
                               " arithmetic but K is " + to_string(mode));
            modes_ok = false;
        }
        if (steps[i].filter.is_zero()) {
            problems.push_back("step " + std::to_string(i) + " has a zero filter");
        }
    }
    if (options.base) {
        const PolyphaseMatrix& base = *options.base;
        const bool base_mode_ok = base.h00.mode() == mode && base.h01.mode() == mode &&
                                  base.h10.mode() == mode && base.h11.mode() == mode;
        if (!base_mode_ok) {
            problems.emplace_back("base matrix arithmetic mode differs from K");
            modes_ok = false;
        } else if (!approx_equal(determinant(base), LaurentPoly::constant(Scalar::one(mode)))) {
            problems.push_back("base matrix determinant is " + determinant(base).str() + ", not 1");
        }
    }
    if (options.reversible) {
        if (mode != Arithmetic::Exact) {
            problems.emplace_back("reversible cascades require exact arithmetic");
        } else {
            if (!k.is_one()) {
                problems.push_back("reversible cascades require K = 1, got K = " + k.str());
            }
            for (std::size_t i = 0; i < steps.size() && modes_ok; ++i) {
                if (!steps[i].filter.is_dyadic()) {
                    problems.push_back("step " + std::to_string(i) + " has a non-dyadic coefficient");
                }
            }
        }
        if (options.base) {
            problems.emplace_back("reversible cascades cannot have a base matrix");
        }
    }
    return problems;
}

LiftingCascade::LiftingCascade(std::vector<LiftingStep> steps, Scalar k)
    : LiftingCascade(std::move(steps), std::move(k), Options{}) {}

LiftingCascade::LiftingCascade(std::vector<LiftingStep> steps, Scalar k, Options options)
    : steps_(std::move(steps)), k_(std::move(k)), base_(std::move(options.base)),
      reversible_(options.reversible), rounding_(options.rounding) {
    Options check{base_, reversible_, rounding_};
    const auto problems = cascade_violations(steps_, k_, check);
    if (!problems.empty()) {
        std::string message = "invalid lifting cascade: ";
        for (std::size_t i = 0; i < problems.size(); ++i) {
            message += (i == 0 ? "" : "; ") + problems[i];
        }
        throw InvalidCascade(message);
    }
}

PolyphaseMatrix LiftingCascade::base_or_identity() const {
    return base_ ? *base_ : PolyphaseMatrix::identity(mode());
}

bool LiftingCascade::alternates() const {
    for (std::size_t i = 1; i < steps_.size(); ++i) {
        if (steps_[i].update == steps_[i - 1].update) {
            return false;
        }
    }
    return true;
}

PolyphaseMatrix partial_product(const LiftingCascade& cascade, long n) {
    const long count = static_cast<long>(cascade.size());
    if (n < -1 || n >= count) {
        throw DomainError("partial product index " + std::to_string(n) + " outside [-1, " +
                          std::to_string(count - 1) + "]");
    }
    PolyphaseMatrix product = cascade.base_or_identity();
    for (long i = 0; i <= n; ++i) {
        product = step_matrix(cascade.steps()[static_cast<std::size_t>(i)]) * product;
    }
    return product;
}

PolyphaseMatrix evaluate(const LiftingCascade& cascade) {
    return PolyphaseMatrix::gain(cascade.k()) *
           partial_product(cascade, static_cast<long>(cascade.size()) - 1);
}

DCTrace dc_trace(const LiftingCascade& cascade) {
    const Arithmetic mode = cascade.mode();
    const Scalar one = Scalar::one(mode);
    DCTrace trace;
    DCTrace::Vector v{one, one};
    if (cascade.base()) {
        const PolyphaseMatrix& base = *cascade.base();
        v = {base.h00.evaluate(one) + base.h01.evaluate(one), base.h10.evaluate(one) + base.h11.evaluate(one)};
    }
    trace.vectors.push_back(v);

    // The two seeds are the entries the first step reads from: B_{-2} is the
    // one it overwrites, B_{-1} the one it scales.
    const Update first = cascade.empty() ? Update::Lowpass : cascade.steps().front().update;
    trace.b.push_back(v[first]);
    trace.b.push_back(v[other(first)]);

    for (const LiftingStep& step : cascade.steps()) {
        const Scalar d = step.filter.evaluate(one);
        if (step.update == Update::Lowpass) {
            v.lowpass += d * v.highpass;
        } else {
            v.highpass += d * v.lowpass;
        }
        trace.d.push_back(d);
        trace.vectors.push_back(v);
        trace.b.push_back(v[step.update]);
    }
    return trace;
}

Update m_init(const LiftingCascade& cascade) {
    if (cascade.empty()) {
        throw DomainError("m_init is undefined for a cascade without lifting steps");
    }
    return cascade.steps().back().update;
}

LiftingCascade synthesis_cascade(const LiftingCascade& cascade) {
    const Scalar& k = cascade.k();
    std::vector<LiftingStep> steps;
    steps.reserve(cascade.size());
    // S D_{1/K} = D_{1/K} gamma_K(S) moves the inverse gain to the front.
    const auto conjugated_inverse = [&k](const LiftingStep& s) {
        return LiftingStep(s.update, -conjugated_filter(s, k));
    };
    for (auto it = cascade.steps().rbegin(); it != cascade.steps().rend(); ++it) {
        steps.push_back(conjugated_inverse(*it));
    }
    Scalar gain = k.reciprocal();
    if (cascade.base()) {
        if (cascade.mode() != Arithmetic::Exact) {
            throw DomainError("synthesis of a float-mode cascade with a base matrix is not supported");
        }
        // B^{-1} = D_{K_b} R_{M-1} ... R_0, and D_{K_b} D_{1/K} = D_{K_b / K}.
        const LiftingCascade base_inverse =
            factor_lifting(inverse_unimodular(*cascade.base()), FactorStrategy{});
        for (const LiftingStep& r : base_inverse.steps()) {
            steps.emplace_back(r.update, conjugated_filter(r, k));
        }
        gain = base_inverse.k() / k;
    }
    LiftingCascade::Options options;
    options.reversible = cascade.reversible();
    options.rounding = cascade.rounding();
    return LiftingCascade(std::move(steps), std::move(gain), std::move(options));
}

} // namespace liftbank
