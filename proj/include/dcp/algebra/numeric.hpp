#pragma once

/**
 * @file numeric.hpp
 * @brief High-precision real/complex arithmetic (MPFR) and polynomial root finding.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dcp {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>,
                                           boost::multiprecision::et_off>;

inline Real to_real(const Rat& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Int& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

struct Complex {
    Real re = 0, im = 0;

    Complex() = default;
    Complex(Real r, Real i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT(implicit)

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator-=(const Complex& b) { return *this = *this - b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }
};

inline Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

template <class T>
Complex eval_complex(const Poly<T>& p, const Complex& x) {
    Complex acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Complex(to_real(p[i]));
    return acc;
}

template <class T>
Real eval_real(const Poly<T>& p, const Real& x) {
    Real acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + to_real(p[i]);
    return acc;
}

// All complex roots with multiplicity of sum c_i x^i, by Aberth-Ehrlich iteration.
inline std::vector<Complex> complex_roots(std::vector<Complex> c) {
    while (!c.empty() && abs(c.back()) == 0) c.pop_back();
    if (c.empty()) throw std::invalid_argument("roots of the zero polynomial");
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<Complex> z;
    if (n <= 0) return z;
    const Complex lead = c.back();
    for (auto& v : c) v = v / lead;
    // start on a circle whose radius is the geometric mean of the root moduli
    Real radius = 1;
    if (abs(c[0]) > 0) radius = pow(Real(abs(c[0])), Real(1) / Real(n));
    for (int k = 0; k < n; ++k) {
        Real ang = Real(2) * boost::math::constants::pi<Real>() * (Real(k) + Real(0.25)) / Real(n) + Real(0.4);
        z.emplace_back(radius * cos(ang) * (Real(1) + Real(k) / Real(7 * n)), radius * sin(ang));
    }
    auto eval_pd = [&](const Complex& x, Complex& f, Complex& df) {
        f = c[static_cast<std::size_t>(n)];
        df = Complex();
        for (int i = n - 1; i >= 0; --i) {
            df = df * x + f;
            f = f * x + c[static_cast<std::size_t>(i)];
        }
    };
    // a root is frozen once its correction drops below tol; ill-conditioned clusters stop at stagnation
    const Real tol = pow(Real(10), Real(-std::numeric_limits<Real>::digits10 * 3 / 4));
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    Real best_step = -1;
    int stagnant = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        Real max_step = 0;
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            all_done = false;
            Complex f, df;
            eval_pd(z[static_cast<std::size_t>(i)], f, df);
            if (abs(f) == 0) {
                done[static_cast<std::size_t>(i)] = 1;
                continue;
            }
            Complex ratio = f / df;
            Complex s;
            for (int j = 0; j < n; ++j)
                if (j != i) s += Complex(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            Complex w = ratio / (Complex(1) - ratio * s);
            z[static_cast<std::size_t>(i)] -= w;
            Real rel = abs(w) / std::max(Real(1), Real(abs(z[static_cast<std::size_t>(i)])));
            if (rel < tol) done[static_cast<std::size_t>(i)] = 1;
            max_step = std::max(max_step, rel);
        }
        if (all_done) break;
        if (best_step < 0 || max_step < best_step / 2) {
            best_step = max_step;
            stagnant = 0;
        } else if (++stagnant > 50 && best_step < Real(1e-30)) {
            break;
        }
    }
    return z;
}

template <class T>
std::vector<Complex> complex_roots(const Poly<T>& p) {
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    std::vector<Complex> c;
    for (const auto& v : p.coeffs()) c.emplace_back(to_real(v));
    return complex_roots(std::move(c));
}

// Real roots (imaginary part below tol relative) of a squarefree polynomial, sorted ascending.
template <class T>
std::vector<Real> real_roots(const Poly<T>& p, double tol = 1e-30) {
    std::vector<Real> out;
    for (const auto& z : complex_roots(p))
        if (abs(z.im) <= Real(tol) * std::max(Real(1), Real(abs(z)))) out.push_back(z.re);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dcp
