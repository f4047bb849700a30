#pragma once

/**
 * @file operators.hpp
 * @brief First-order annihilators of closed forms, conjugation by powers of p, and the second-order factor L2.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/poly_tools.hpp"
#include "dcp/factory/closed_form.hpp"
#include "dcp/factory/coefficients.hpp"
#include "dcp/ode/compose.hpp"
#include "dcp/ode/operator.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dcp {

namespace detail {

// Clears denominators of a list of rational polynomials with one common factor.
inline std::vector<IntPoly> clear_common(const std::vector<RatPoly>& polys) {
    Int den = 1;
    for (const auto& p : polys)
        for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<IntPoly> out;
    for (const auto& p : polys) {
        std::vector<Int> v;
        for (const auto& c : p.coeffs()) v.push_back(c.get_num() * (den / c.get_den()));
        out.emplace_back(std::move(v));
    }
    return out;
}

}  // namespace detail

// den D - num with f'/f = num/den. With shifted = true the operator annihilates p^pole_order * f instead of f.
inline DiffOperator first_order_annihilator(const ClosedForm& cf, bool shifted = false) {
    std::vector<std::pair<RatPoly, Rat>> factors;  // F_i with exponent e_i
    if (!shifted && cf.pole_order != 0) factors.emplace_back(RatPoly::x(), Rat(-cf.pole_order));
    if (cf.radicand) factors.emplace_back(*cf.radicand, Rat(1, 2));
    for (const auto& [f, e] : cf.numerator_factors)
        if (f.degree() > 0) factors.emplace_back(f, Rat(e));
    for (const auto& [f, e] : cf.denominator_factors)
        if (f.degree() > 0) factors.emplace_back(f, Rat(-e));
    RatPoly den(Rat(1)), num;
    for (const auto& f : factors) den = den * f.first;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        RatPoly term = factors[i].first.derivative() * factors[i].second;
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != i) term = term * factors[j].first;
        num += term;
    }
    if (!num.is_zero()) {
        RatPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
    }
    auto cleared = detail::clear_common({-num, den});
    return normalize(DiffOperator{{cleared[0], cleared[1]}, std::nullopt});
}

// Operator M with M(p^e f) = 0 for every solution f of op: p^{e+k} op(p^{-e} g), a polynomial operator in g.
inline DiffOperator shift_solutions(const DiffOperator& op, int e) {
    op.validate();
    if (!op.homogeneous()) throw std::invalid_argument("shift_solutions expects a homogeneous operator");
    const int k = op.order();
    std::vector<IntPoly> out(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) {
        const IntPoly& q = op.coeffs[static_cast<std::size_t>(j)];
        if (q.is_zero()) continue;
        Int falling = 1;  // (-e)(-e-1)...(-e-l+1)
        for (int l = 0; l <= j; ++l) {
            if (l > 0) falling *= Int(-e - (l - 1));
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(l));
            out[static_cast<std::size_t>(j - l)] += (q * (binom * falling)).shift_up(static_cast<std::size_t>(k - l));
        }
    }
    return normalize(DiffOperator{out, std::nullopt});
}

// p^2 (1-2p)(1-p)(1+4p-4p^2)(r-1-rp)(r-1+r^2p-r^2p^2)^2 P_4(p,rp) * sextic
inline RatPoly appendix_Q2(const Rat& r) {
    RatPoly out = RatPoly::monomial(Rat(1), 2);
    out = out * RatPoly{Rat(1), Rat(-2)} * RatPoly{Rat(1), Rat(-1)} * RatPoly{Rat(1), Rat(4), Rat(-4)};
    out = out * detail::rp_shift(r) * detail::rp_quad(r).pow(2) * p4_rational(r);
    return out * coefficients::instantiate(coefficients::head_sextic(), r);
}

inline RatPoly appendix_Q1(const Rat& r) {
    return RatPoly::x() * detail::rp_quad(r) * coefficients::instantiate(coefficients::q1_coefficients(), r);
}

inline RatPoly appendix_Q0(const Rat& r) { return coefficients::instantiate(coefficients::q0_coefficients(), r); }

// L2 = Q2 D^2 + Q1 D + Q0 with the printed coefficient data, cleared to integers (not otherwise rescaled).
inline DiffOperator appendix_L2(const Rat& r) {
    detail::require_generic_r(r);
    auto c = detail::clear_common({appendix_Q0(r), appendix_Q1(r), appendix_Q2(r)});
    return DiffOperator{c, std::nullopt};
}

}  // namespace dcp
