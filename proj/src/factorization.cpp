// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/factorization.hpp"

#include "liftbank/error.hpp"

namespace liftbank {

const char* to_string(Reduction reduction) noexcept {
    return reduction == Reduction::HighEnd ? "high-end" : "low-end";
}

const char* to_string(FirstChannel channel) noexcept {
    return channel == FirstChannel::Lowpass ? "lowpass" : "highpass";
}

std::optional<Reduction> parse_reduction(std::string_view name) noexcept {
    if (name == "high-end") {
        return Reduction::HighEnd;
    }
    if (name == "low-end") {
        return Reduction::LowEnd;
    }
    return std::nullopt;
}

std::optional<FirstChannel> parse_first_channel(std::string_view name) noexcept {
    if (name == "lowpass") {
        return FirstChannel::Lowpass;
    }
    if (name == "highpass") {
        return FirstChannel::Highpass;
    }
    return std::nullopt;
}

namespace {

// Inverse of a nonzero monomial c z^(-k).
LaurentPoly monomial_inverse(const LaurentPoly& p) {
    const auto& [index, value] = *p.taps().begin();
    return LaurentPoly::monomial(value.reciprocal(), -index);
}

// Right-multiplies a working matrix by lifting matrices and records them,
// merging consecutive operations on the same column.
class ColumnReducer {
public:
    explicit ColumnReducer(PolyphaseMatrix m) : m_(std::move(m)) {}

    const PolyphaseMatrix& matrix() const noexcept { return m_; }

    // Lowpass update: column 1 += q * column 0. Highpass: column 0 += q * column 1.
    void apply(Update update, const LaurentPoly& q) {
        if (q.is_zero()) {
            return;
        }
        if (update == Update::Lowpass) {
            m_.h01 += q * m_.h00;
            m_.h11 += q * m_.h10;
        } else {
            m_.h00 += q * m_.h01;
            m_.h10 += q * m_.h11;
        }
        if (!ops_.empty() && ops_.back().first == update) {
            ops_.back().second += q;
            if (ops_.back().second.is_zero()) {
                ops_.pop_back();
            }
        } else {
            ops_.emplace_back(update, q);
        }
    }

    const std::vector<std::pair<Update, LaurentPoly>>& ops() const noexcept { return ops_; }

private:
    PolyphaseMatrix m_;
    std::vector<std::pair<Update, LaurentPoly>> ops_;
};

// Quotient q such that target + q * divisor has a shorter support than divisor,
// built one cancelling monomial at a time from the chosen end.
LaurentPoly reduce(const LaurentPoly& target, const LaurentPoly& divisor, Reduction reduction) {
    LaurentPoly remainder = target;
    LaurentPoly quotient(target.mode());
    while (!remainder.is_zero() && remainder.support_length() >= divisor.support_length()) {
        const bool high = reduction == Reduction::HighEnd;
        const std::int64_t r_end = high ? remainder.max_index() : remainder.min_index();
        const std::int64_t d_end = high ? divisor.max_index() : divisor.min_index();
        const LaurentPoly term =
            LaurentPoly::monomial(-(remainder.coefficient(r_end) / divisor.coefficient(d_end)), r_end - d_end);
        remainder += term * divisor;
        quotient += term;
    }
    return quotient;
}

bool is_unit_constant(const LaurentPoly& p) {
    return p.is_monomial() && p.min_index() == 0;
}

} // namespace

LiftingCascade factor_lifting(const PolyphaseMatrix& m, const FactorStrategy& strategy) {
    const Arithmetic mode = m.mode();
    if (mode != Arithmetic::Exact) {
        throw DomainError("lifting factorization requires exact arithmetic");
    }
    const LaurentPoly one = LaurentPoly::constant(Scalar::one(mode));
    const LaurentPoly det = determinant(m);
    if (det != one) {
        throw NotUnimodular("cannot factor: determinant is " + det.str() + ", not 1");
    }

    // Column operations drive row 0 to [u, 0] with u a nonzero constant; the
    // unit determinant then forces h11 = 1/u and one last highpass update
    // clears h10, leaving D_K with K = 1/u.
    ColumnReducer work(m);
    while (!(work.matrix().h01.is_zero() && is_unit_constant(work.matrix().h00))) {
        const LaurentPoly& a = work.matrix().h00;
        const LaurentPoly& b = work.matrix().h01;
        if (a.is_monomial()) {
            if (a.min_index() == 0) {
                work.apply(Update::Lowpass, -(b * monomial_inverse(a)));
            } else {
                // A delayed monomial would leave a residual diag(c z^-d, c^-1 z^d);
                // steer row 0 through [a, 1] and [1, 1] instead.
                work.apply(Update::Lowpass, (one - b) * monomial_inverse(a));
                work.apply(Update::Highpass, one - work.matrix().h00);
            }
            continue;
        }
        if (a.is_zero() || b.is_monomial()) {
            // det = 1 makes b a unit here; make h00 = 1.
            work.apply(Update::Highpass, (one - a) * monomial_inverse(b));
            continue;
        }
        const std::int64_t la = a.support_length();
        const std::int64_t lb = b.support_length();
        const bool reduce_lowpass = la > lb || (la == lb && strategy.first_channel == FirstChannel::Lowpass);
        if (reduce_lowpass) {
            work.apply(Update::Highpass, reduce(a, b, strategy.reduction));
        } else {
            work.apply(Update::Lowpass, reduce(b, a, strategy.reduction));
        }
    }
    const Scalar u = work.matrix().h00.coefficient(0);
    work.apply(Update::Highpass, -(work.matrix().h10 * u));

    // m R_1 ... R_r = D_K, so m = D_K R_r^{-1} ... R_1^{-1} and S_i = R_{i+1}^{-1}.
    std::vector<LiftingStep> steps;
    steps.reserve(work.ops().size());
    for (const auto& [update, q] : work.ops()) {
        steps.emplace_back(update, -q);
    }
    return LiftingCascade(std::move(steps), u.reciprocal());
}

RenormalizeResult renormalize(const LiftingCascade& cascade) {
    if (cascade.reversible()) {
        return {cascade,
                {"reversible cascade left unchanged: K is fixed at 1, so the lowpass DC normalization "
                 "must come from the lifting filters themselves"}};
    }
    if (cascade.base()) {
        throw DomainError("renormalize requires an identity base");
    }
    if (!cascade.alternates()) {
        throw DomainError("renormalize requires alternating update characteristics");
    }
    const DCTrace trace = dc_trace(cascade);
    const Scalar e0 = trace.vectors.back().lowpass;
    if (e0.is_zero()) {
        throw DomainError("lowpass DC response E_0(1) vanishes: no scaling factor can normalize it");
    }
    std::vector<std::string> diagnostics;
    if (!(e0 == cascade.k())) {
        diagnostics.push_back("K changed from " + cascade.k().str() + " to " + e0.str());
    }
    LiftingCascade::Options options;
    options.rounding = cascade.rounding();
    return {LiftingCascade(cascade.steps(), e0, std::move(options)), std::move(diagnostics)};
}

} // namespace liftbank
