#pragma once

/**
 * @file known_results.hpp
 * @brief Published reference values used by the reproduction bundles: expansions, the r = 2 recurrence and
 *        ODE, the exponent table at the roots of Q_4(p,rp) and the critical exponents per wall type.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/ode/operator.hpp"
#include "dcp/ode/recurrence.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp::known {

namespace detail {

inline IntPoly poly(std::initializer_list<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

}  // namespace detail

// Rows of S_{1,1}(p, p_w): entry n is the polynomial in p_w multiplying p^n, n = 0..6.
inline std::vector<IntPoly> s11_rows() {
    using detail::poly;
    return {
        poly({1, 1}),
        poly({1, 2, 2}),
        poly({2, 2, 3, 5}),
        poly({4, 5, 3, 2, 14}),
        poly({8, 8, 11, 9, -14, 42}),
        poly({16, 19, 11, 16, 58, -108, 132}),
        poly({32, 30, 48, 26, -71, 387, -561, 429}),
    };
}

// Coefficients of S_{1,1}(p, 2p) through p^13.
inline std::vector<long> r2_series() {
    return {1, 3, 6, 16, 30, 84, 130, 464, 380, 3048, -1666, 27232, -60116, 332216};
}

// sum_j c_j(n) a_{n-j} = 0 for the coefficients of S_{1,1}(p, 2p).
inline PRecurrence r2_recurrence() {
    using detail::poly;
    PRecurrence r;
    r.coeffs = {
        poly({2, 1}).pow(2),                     // (n+2)^2
        poly({-2, -1}) * poly({7, 3}),           // -(n+2)(3n+7)
        poly({-8, 40, -14}),                     // -2(7n^2-20n+4)
        poly({208, -240, 80}),                   // 16(5n^2-15n+13)
        poly({-736, 640, -144}),                 // -16(9n^2-40n+46)
        poly({-3, 1}) * poly({-22, 7}) * Int(16),  // 16(n-3)(7n-22)
        poly({-4, 1}).pow(2) * Int(-32),         // -32(n-4)^2
    };
    return r;
}

// Second-order inhomogeneous ODE satisfied by S_{1,1}(p, 2p).
inline DiffOperator r2_ode() {
    using detail::poly;
    const IntPoly one_minus_2p = poly({1, -2});
    DiffOperator op;
    op.coeffs = {
        one_minus_2p * poly({2, -11, -14, 76, -88, 32}) * Int(2),
        poly({0, 1}) * one_minus_2p.pow(2) * poly({5, -2, -58, 96, -40}),
        poly({0, 0, 1}) * poly({1, -1}) * one_minus_2p.pow(3) * poly({1, 4, -4}),
    };
    op.rhs = poly({4, -3, -44, 86, -72, 24});
    return op;
}

// Head polynomial p^2(1-p)(1-2p)^3(1+4p-4p^2) of the r = 2 ODE.
inline IntPoly r2_head() { return r2_ode().coeffs[2]; }

// Exponents at the singular point 1/2 of the r = 2 ODE.
inline std::vector<Rat> r2_exponents_at_half() { return {Rat(-2), Rat(2)}; }

struct ExponentRow {
    std::string point;  // "0", "1/2", "sqrt2", "1/r", "1-1/r", "1", "P4", "inf"
    std::vector<Rat> exponents;  // ascending
};

// Local exponents at the roots of Q_4(p,rp) for generic r.
inline std::vector<ExponentRow> q4_exponent_table() {
    auto v = [](std::initializer_list<Rat> l) { return std::vector<Rat>(l); };
    return {
        {"0", v({Rat(-2), Rat(-2), Rat(-1), Rat(0)})},
        {"1/2", v({Rat(-1), Rat(1), Rat(1), Rat(3)})},
        {"sqrt2", v({Rat(0), Rat(1), Rat(2), Rat(4)})},
        {"1/r", v({Rat(-2), Rat(0), Rat(1), Rat(2)})},
        {"1-1/r", v({Rat(-3), Rat(0), Rat(1), Rat(2)})},
        {"1", v({Rat(0), Rat(0), Rat(1), Rat(2)})},
        {"P4", v({Rat(0), Rat(1, 2), Rat(1), Rat(2)})},
        {"inf", v({Rat(1), Rat(2), Rat(2), Rat(4)})},
    };
}

struct GammaRow {
    std::string wall;  // "dry", "r=1", "r=1/2", "r=3/2", "r=2", "wet"
    Rat r;             // wall probability ratio p_w / p (unused for "wet")
    int gamma;
};

// Critical exponent of the mean size per wall type (0 < r < 2 is represented by 1/2 and 3/2).
inline std::vector<GammaRow> gamma_table() {
    return {
        {"dry", Rat(0), 1}, {"r=1", Rat(1), 1}, {"r=1/2", Rat(1, 2), 1}, {"r=3/2", Rat(3, 2), 1},
        {"r=2", Rat(2), 2}, {"wet", Rat(0), 2},
    };
}

// Numerators N(p, r p) of the rational solution for r = 3, 4, 5, each up to its own constant factor.
inline IntPoly rational_solution_numerator(int r) {
    using detail::poly;
    switch (r) {
        case 3: return poly({-10, 43, -87, 596, -2688, 5292, -4752, 1620});
        case 4: return poly({-9, 24, 3, 543, -3144, 6304, -5504, 1792});
        case 5: return poly({-44, 61, 311, 3228, -20720, 41450, -35500, 11250});
        default: throw std::invalid_argument("numerator listed for r = 3, 4, 5 only");
    }
}

// Multiple c_r of the rational solution, built on N(p, r p), whose removal lowers the order of the ODE.
inline Rat removal_constant(int r) {
    switch (r) {
        case 3: return Rat(2);
        case 4: return Rat(8);
        default: throw std::invalid_argument("removal constant listed for r = 3, 4 only");
    }
}

}  // namespace dcp::known
