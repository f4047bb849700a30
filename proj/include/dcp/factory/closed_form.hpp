#pragma once

/**
 * @file closed_form.hpp
 * @brief The algebraic solution S(p,rp) and the rational solution R(p,rp) of the order-4 operator.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/factory/coefficients.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcp {

// p^{-pole_order} * sqrt(radicand) * prod(numerator factors) / prod(denominator factors), with exact rational
// factor coefficients.
struct ClosedForm {
    enum Kind { kAlgebraic, kRational };
    Kind kind = kRational;
    Rat r;
    int pole_order = 2;
    std::vector<std::pair<RatPoly, int>> numerator_factors;
    std::vector<std::pair<RatPoly, int>> denominator_factors;
    std::optional<RatPoly> radicand;  // sign(r-1) * P_4(p,rp)
    int sign = 1;                     // sign(r-1)

    RatPoly numerator() const {
        RatPoly out(Rat(1));
        for (const auto& [f, e] : numerator_factors) out = out * f.pow(static_cast<unsigned>(e));
        return out;
    }
    RatPoly denominator() const {
        RatPoly out(Rat(1));
        for (const auto& [f, e] : denominator_factors) out = out * f.pow(static_cast<unsigned>(e));
        return out;
    }
    // Radicand scaled to constant term 1, so its square root has rational Taylor coefficients. The scaling
    // multiplies the function by the constant sqrt|r-1|.
    RatPoly unit_radicand() const {
        if (!radicand) return RatPoly(Rat(1));
        return *radicand * (1 / (*radicand)[0]);
    }
    // p^pole_order * f as a power series through p^order, using unit_radicand() for the algebraic kind.
    RatSeries shifted_series(int order) const {
        RatSeries s = rational_series(numerator(), denominator(), order);
        if (radicand) s = mul(s, sqrt_series(series_of(unit_radicand(), order)));
        return s;
    }
    // Exact zero at x: a numerator (or radicand) root where the denominator and p^pole_order do not vanish.
    bool vanishes_at(const Rat& x) const {
        if (sgn(x) == 0 || sgn(denominator().eval(x)) == 0) return false;
        return sgn(numerator().eval(x)) == 0 || (radicand && sgn(radicand->eval(x)) == 0);
    }
};

namespace detail {

inline void require_generic_r(const Rat& r) {
    if (sgn(r) == 0 || r == 1) throw std::invalid_argument("closed forms need r not in {0, 1}");
}

inline RatPoly rp_lin(const Rat& r) { return RatPoly{Rat(1), -r}; }        // 1 - r p
inline RatPoly rp_shift(const Rat& r) { return RatPoly{r - 1, -r}; }       // r - 1 - r p
inline RatPoly rp_quad(const Rat& r) { return RatPoly{r - 1, r * r, -r * r}; }  // r - 1 + r^2 p - r^2 p^2

}  // namespace detail

// r - 1 - 4 r^2 p^2 + 8 r^2 p^3 - 4 r^2 p^4
inline RatPoly p4_rational(const Rat& r) {
    Rat r2 = r * r;
    return RatPoly{r - 1, Rat(0), -4 * r2, 8 * r2, -4 * r2};
}

// sqrt(sign(r-1) P_4) (1-2p)(r-1+r^2p-r^2p^2) / [p^2 (r-1-rp)^3 (1-rp)^2]
inline ClosedForm closed_form_S(const Rat& r) {
    detail::require_generic_r(r);
    ClosedForm cf;
    cf.kind = ClosedForm::kAlgebraic;
    cf.r = r;
    cf.sign = r > 1 ? 1 : -1;
    cf.radicand = p4_rational(r) * Rat(cf.sign);
    cf.numerator_factors = {{RatPoly{Rat(1), Rat(-2)}, 1}, {detail::rp_quad(r), 1}};
    cf.denominator_factors = {{detail::rp_shift(r), 3}, {detail::rp_lin(r), 2}};
    return cf;
}

// sum a_i(r) p^i / [p^2 (1-2p) (1-rp)^2 (r-1-rp)^3]
inline ClosedForm closed_form_R(const Rat& r) {
    detail::require_generic_r(r);
    ClosedForm cf;
    cf.kind = ClosedForm::kRational;
    cf.r = r;
    cf.sign = r > 1 ? 1 : -1;
    cf.numerator_factors = {{coefficients::instantiate(coefficients::rational_numerator(), r), 1}};
    cf.denominator_factors = {{RatPoly{Rat(1), Rat(-2)}, 1}, {detail::rp_lin(r), 2}, {detail::rp_shift(r), 3}};
    return cf;
}

// Same denominator with an explicit numerator polynomial (for instance a printed N(p,rp)).
inline ClosedForm closed_form_R(const Rat& r, const RatPoly& numerator) {
    ClosedForm cf = closed_form_R(r);
    cf.numerator_factors = {{numerator, 1}};
    return cf;
}

}  // namespace dcp
