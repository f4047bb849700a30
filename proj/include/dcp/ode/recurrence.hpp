#pragma once

/**
 * @file recurrence.hpp
 * @brief P-recurrences sum_j c_j(n) a_{n-j} = 0 and their conversion to and from differential operators.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/ode/compose.hpp"
#include "dcp/ode/operator.hpp"

#include <stdexcept>
#include <vector>

namespace dcp {

struct PRecurrence {
    std::vector<IntPoly> coeffs;  // c_0(n) .. c_s(n)
    int valid_from = -1;          // first n at which the relation holds (a_m = 0 for m < 0); -1 means n = order

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    int degree() const {
        int d = -1;
        for (const auto& c : coeffs) d = std::max(d, c.degree());
        return d;
    }
    int start() const { return valid_from < 0 ? order() : valid_from; }
    void validate() const {
        if (coeffs.size() < 2) throw std::invalid_argument("degenerate recurrence: no shifted terms");
        if (coeffs[0].is_zero()) throw std::invalid_argument("degenerate recurrence: c_0 is zero");
        bool shifted = false;
        for (std::size_t j = 1; j < coeffs.size(); ++j) shifted |= !coeffs[j].is_zero();
        if (!shifted) throw std::invalid_argument("degenerate recurrence: no shifted terms");
    }
    friend bool operator==(const PRecurrence& a, const PRecurrence& b) { return a.coeffs == b.coeffs; }
};

// Content-free, sign fixed so c_0's lowest-degree nonzero coefficient is positive.
inline PRecurrence normalize(PRecurrence r) {
    r.validate();
    Int g = 0;
    for (const auto& c : r.coeffs) {
        Int cc = content(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
    }
    const IntPoly& c0 = r.coeffs[0];
    if (sgn(c0[static_cast<std::size_t>(c0.valuation())]) < 0) g = -g;
    for (auto& c : r.coeffs) {
        std::vector<Int> v(c.coeffs());
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        c = IntPoly(std::move(v));
    }
    return r;
}

// Values sum_j c_j(n) a_{n-j} for n = start .. length-1.
inline std::vector<Rat> recurrence_residual(const PRecurrence& r, const std::vector<Rat>& a) {
    std::vector<Rat> out;
    for (int n = r.start(); n < static_cast<int>(a.size()); ++n) {
        Rat acc = 0;
        for (int j = 0; j <= r.order(); ++j) {
            if (n - j < 0) continue;
            acc += Rat(r.coeffs[static_cast<std::size_t>(j)].eval(Int(n))) * a[static_cast<std::size_t>(n - j)];
        }
        out.push_back(acc);
    }
    return out;
}

// theta-form operator sum_j p^j c_j(theta + j), whose action on sum a_n p^n has p^n-coefficient
// sum_j c_j(n) a_{n-j}.
inline ThetaOperator recurrence_to_theta(const PRecurrence& r) {
    r.validate();
    const int s = r.order();
    int max_deg = r.degree();
    std::vector<IntPoly> P(static_cast<std::size_t>(max_deg + 1));
    for (int j = 0; j <= s; ++j) {
        IntPoly shifted = r.coeffs[static_cast<std::size_t>(j)].taylor_shift(Int(j));
        for (std::size_t l = 0; l < shifted.size(); ++l)
            if (sgn(shifted[l]) != 0) P[l] += IntPoly::monomial(shifted[l], static_cast<std::size_t>(j));
    }
    while (P.size() > 1 && P.back().is_zero()) P.pop_back();
    return ThetaOperator{P, std::nullopt};
}

// Homogeneous operator whose solutions include every sequence satisfying r from n >= 0 on.
inline DiffOperator recurrence_to_ode(const PRecurrence& r) { return normalize(to_d_form(recurrence_to_theta(r))); }

// Inhomogeneous operator L(S) = R with R the polynomial of degree < start() fixed by the initial terms.
inline DiffOperator recurrence_to_ode(const PRecurrence& r, const RatSeries& initial) {
    ThetaOperator t = recurrence_to_theta(r);
    const int s = r.start();
    if (initial.order() < s) throw std::invalid_argument("need the initial terms a_0 .. a_{start-1}");
    std::vector<Rat> rhs(static_cast<std::size_t>(s), Rat(0));
    for (int n = 0; n < s; ++n)
        for (int j = 0; j <= r.order() && j <= n; ++j)
            rhs[static_cast<std::size_t>(n)] +=
                Rat(r.coeffs[static_cast<std::size_t>(j)].eval(Int(n))) * initial.coeffs[static_cast<std::size_t>(n - j)];
    Int den = 1;
    for (const auto& v : rhs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Int> rhs_int;
    for (const auto& v : rhs) rhs_int.push_back(v.get_num() * (den / v.get_den()));
    for (auto& c : t.coeffs) c *= den;
    t.rhs = IntPoly(std::move(rhs_int));
    return normalize(to_d_form(t));
}

// (R D - R') L for L(S) = R: annihilates every solution of the inhomogeneous equation.
inline DiffOperator homogenize(const DiffOperator& op) {
    if (op.homogeneous()) return op;
    const IntPoly& R = *op.rhs;
    DiffOperator left{{-R.derivative(), R}, std::nullopt};
    DiffOperator hom{op.coeffs, std::nullopt};
    return normalize(compose(left, hom));
}

// Recurrence for the coefficients of solutions of op (from the theta form of p^k op).
inline PRecurrence ode_to_recurrence(const DiffOperator& op) {
    ThetaOperator t = to_theta_form(op);
    int lo = -1, hi = -1;
    for (const auto& c : t.coeffs) {
        if (c.is_zero()) continue;
        lo = lo < 0 ? c.valuation() : std::min(lo, c.valuation());
        hi = std::max(hi, c.degree());
    }
    if (lo < 0) throw std::invalid_argument("zero operator");
    PRecurrence r;
    for (int i = lo; i <= hi; ++i) {
        // A_i(theta) = sum_j P_{j,i} theta^j, c_{i-lo}(n) = A_i(n - (i - lo))
        std::vector<Int> a;
        for (const auto& c : t.coeffs) a.push_back(c[static_cast<std::size_t>(i)]);
        r.coeffs.push_back(IntPoly(std::move(a)).taylor_shift(Int(-(i - lo))));
    }
    while (r.coeffs.size() > 1 && r.coeffs.back().is_zero()) r.coeffs.pop_back();
    int start = 0;
    if (t.rhs && !t.rhs->is_zero()) start = std::max(0, t.rhs->degree() + 1 - lo);
    r.valid_from = start;
    return normalize(r);
}

}  // namespace dcp
