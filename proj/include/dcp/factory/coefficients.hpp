#pragma once

/**
 * @file coefficients.hpp
 * @brief Polynomial-in-r coefficient data for the rational solution numerator and the second-order factor.
 *
 * Each coefficient is an IntPoly in r. Evaluate with .eval(r) to get the p^n coefficient for a given r.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"

#include <initializer_list>
#include <vector>

namespace dcp::coefficients {

namespace detail {

inline IntPoly poly(std::initializer_list<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

inline IntPoly r_minus_1(unsigned e) { return poly({-1, 1}).pow(e); }

inline IntPoly r_pow(unsigned e) { return IntPoly::monomial(Int(1), e); }

inline IntPoly scaled(long c, const IntPoly& p) { return p * Int(c); }

}  // namespace detail

// a_0(r) .. a_7(r): numerator of the rational solution, sum a_i(r) p^i.
inline std::vector<IntPoly> rational_numerator() {
    using detail::poly;
    return {
        poly({4, -11, 10, -3}),
        poly({-16, 52, -60, 27, -3}),
        poly({24, -96, 148, -91, 15}),
        poly({-8, 64, -176, 156, -44, 8}),
        poly({0, -16, 128, -168, 96, -40}),
        poly({0, 0, -48, 96, -112, 72}),
        poly({0, 0, 0, -16, 56, -56}),
        poly({0, 0, 0, 0, -8, 16}),
    };
}

// Sextic factor of the second-order head: r-1 - 2(r-1)p - 2(1-r-r^2)p^2 - 20r^2p^3 + 50r^2p^4 - 48r^2p^5 + 16r^2p^6.
inline std::vector<IntPoly> head_sextic() {
    using detail::poly;
    return {
        poly({-1, 1}),
        poly({2, -2}),
        poly({-2, 2, 2}),
        poly({0, 0, -20}),
        poly({0, 0, 50}),
        poly({0, 0, -48}),
        poly({0, 0, 16}),
    };
}

// b_0(r) .. b_17(r): Q_1 = p (r-1 + r^2 p - r^2 p^2) sum b_n(r) p^n.
inline std::vector<IntPoly> q1_coefficients() {
    using detail::poly;
    using detail::r_minus_1;
    using detail::r_pow;
    using detail::scaled;
    return {
        scaled(6, r_minus_1(4)),
        r_minus_1(3) * poly({-2, 1}) * poly({6, -7}),
        scaled(-1, r_minus_1(2) * poly({28, -42, -39, 62})),
        r_minus_1(2) * poly({112, -280, 104, 125, -34}),
        scaled(2, r_minus_1(1) * poly({70, -316, 685, -689, 221, 48})),
        scaled(-2, r_minus_1(1) * poly({40, -266, 1808, -3351, 2266, -480, 36})),
        scaled(-2, poly({8, -128, 3836, -12328, 16107, -10619, 3568, -488})),
        scaled(-2, r_pow(1) * poly({24, -5336, 19108, -25748, 18075, -7763, 2180})),
        scaled(-4, r_pow(2) * poly({2372, -9376, 8729, 261, -2058, -872})),
        scaled(4, r_pow(2) * poly({1168, -5500, -7460, 33837, -31571, 10118})),
        scaled(-8, r_pow(2) * poly({120, -856, -11826, 38080, -42551, 23886})),
        scaled(-8, r_pow(3) * poly({104, 12720, -45638, 64846, -55321})),
        scaled(16, r_pow(4) * poly({3728, -16832, 31869, -40228})),
        scaled(-16, r_pow(4) * poly({1184, -7664, 20668, -39027})),
        scaled(64, r_pow(4) * poly({40, -496, 2147, -6343})),
        scaled(64, r_pow(5) * poly({56, -520, 2665})),
        scaled(512, r_pow(6) * poly({7, -82})),
        scaled(4608, r_pow(7)),
    };
}

// c_0(r) .. c_19(r): Q_0 = sum c_n(r) p^n.
inline std::vector<IntPoly> q0_coefficients() {
    using detail::poly;
    using detail::r_minus_1;
    using detail::r_pow;
    using detail::scaled;
    return {
        scaled(6, r_minus_1(5)),
        r_minus_1(4) * poly({16, -28, 15}),
        scaled(4, r_minus_1(3) * poly({4, -15, 42, -38, 2})),
        r_minus_1(2) * poly({20, -48, 356, -843, 711, -211}),
        scaled(-2, r_minus_1(2) * poly({16, -2, -220, 198, 400, -537, 44})),
        scaled(-1, r_minus_1(1) * poly({16, 44, -4488, 14058, -16044, 6591, 163, -462})),
        scaled(-8, r_minus_1(1) * r_pow(1) * poly({8, -1482, 5311, -8213, 6705, -2631, 257, -16})),
        scaled(4, r_pow(1) * poly({4, -4152, 21289, -51652, 74765, -64156, 30124, -6658, 486})),
        scaled(4, r_pow(2) * poly({3312, -20040, 61048, -112851, 121460, -75705, 25080, -2980})),
        scaled(-2, r_pow(2) * poly({2848, -22768, 90080, -206662, 258498, -196969, 86149, -17868})),
        scaled(16, r_pow(2) * poly({64, -904, 4652, -11542, 11019, -4029, 1336, -2180})),
        scaled(4, r_pow(3) * poly({496, -2240, -9776, 82392, -186525, 139737, -31298})),
        scaled(-16, r_pow(4) * poly({304, -6836, 36692, -94962, 84274, -36391})),
        scaled(8, r_pow(4) * poly({192, -8520, 58712, -204132, 217558, -151819})),
        scaled(32, r_pow(5) * poly({640, -6752, 34336, -44638, 49757})),
        scaled(-16, r_pow(5) * poly({160, -3456, 29052, -47800, 87825})),
        scaled(-64, r_pow(6) * poly({96, -1776, 4036, -13105})),
        scaled(-64, r_pow(7) * poly({192, -776, 5095})),
        scaled(-1024, r_pow(8) * poly({4, -73})),
        scaled(-7680, r_pow(9)),
    };
}

// Polynomial in p whose coefficients are the given polynomials in r evaluated at r.
inline RatPoly instantiate(const std::vector<IntPoly>& coeffs, const Rat& r) {
    std::vector<Rat> out;
    for (const auto& c : coeffs) out.push_back(to_rat(c).eval(r));
    return RatPoly(std::move(out));
}

}  // namespace dcp::coefficients
