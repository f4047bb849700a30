#pragma once

/**
 * @file indicial.hpp
 * @brief Indicial polynomials and local exponents at finite points and at infinity.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/numeric.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/poly_tools.hpp"
#include "dcp/ode/operator.hpp"
#include "dcp/singularity/points.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace dcp {

struct Exponent {
    bool exact = false;
    Rat value;      // when exact
    Complex approx;

    std::string str(int digits = 12) const {
        if (exact) return value.get_str();
        auto part = [&](const Real& x) {
            std::ostringstream os;
            os.precision(digits);
            os << (abs(x) < Real(1e-40) ? 0.0 : x.convert_to<double>());
            return os.str();
        };
        std::string s = part(approx.re);
        if (abs(approx.im) >= Real(1e-40)) s += (approx.im < 0 ? "-" : "+") + part(abs(approx.im)) + "i";
        return s;
    }
};

struct ExponentSet {
    SingularPoint point;
    bool regular = true;
    bool ordinary = false;            // head does not vanish there: exponents 0..k-1
    std::vector<Exponent> exponents;  // sorted by real part
    RatPoly indicial;                 // exact indicial polynomial (rational points and infinity)

    std::vector<double> real_parts() const {
        std::vector<double> out;
        for (const auto& e : exponents) out.push_back(e.approx.re.convert_to<double>());
        return out;
    }
    std::string str() const {
        if (!regular) return "IRREGULAR";
        std::string s = "{";
        for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? ", " : "") + exponents[i].str();
        return s + "}";
    }
};

namespace detail {

// theta (theta-1) ... (theta-j+1)
inline RatPoly falling_factorial(int j) {
    RatPoly out(Rat(1));
    for (int i = 0; i < j; ++i) out = out * RatPoly{Rat(-i), Rat(1)};
    return out;
}

inline void sort_exponents(std::vector<Exponent>& e) {
    std::sort(e.begin(), e.end(), [](const Exponent& a, const Exponent& b) {
        if (a.approx.re != b.approx.re) return a.approx.re < b.approx.re;
        return a.approx.im < b.approx.im;
    });
}

// Exact rational roots with multiplicity, then numeric roots of what remains.
inline std::vector<Exponent> roots_of(const RatPoly& ind) {
    std::vector<Exponent> out;
    IntPoly rest = primitive_part(clear_denominators(ind));
    for (const auto& rr : rational_roots(rest)) {
        IntPoly lin = linear_factor(rr.value), q;
        for (int i = 0; i < rr.multiplicity; ++i) {
            divides_exact(rest, lin, &q);
            rest = q;
            out.push_back({true, rr.value, Complex(to_real(rr.value))});
        }
    }
    if (rest.degree() > 0)
        for (const auto& z : complex_roots(rest)) out.push_back({false, Rat(0), z});
    sort_exponents(out);
    return out;
}

}  // namespace detail

// Local exponents of a homogeneous operator (a right-hand side is ignored). Returns regular = false at an
// irregular singular point.
inline ExponentSet indicial_exponents(const DiffOperator& op, const SingularPoint& point) {
    op.validate();
    const int k = op.order();
    ExponentSet out;
    out.point = point;
    constexpr int kNone = std::numeric_limits<int>::max();

    if (point.kind == SingularPoint::kRational || point.kind == SingularPoint::kInfinity) {
        // rational point a: t = p - a; infinity: t = 1/p
        std::vector<int> nu(static_cast<std::size_t>(k + 1), kNone);
        std::vector<Rat> lead(static_cast<std::size_t>(k + 1));
        for (int j = 0; j <= k; ++j) {
            const IntPoly& q = op.coeffs[static_cast<std::size_t>(j)];
            if (q.is_zero()) continue;
            if (point.kind == SingularPoint::kInfinity) {
                nu[static_cast<std::size_t>(j)] = -q.degree();
                lead[static_cast<std::size_t>(j)] = Rat(q.lead());
            } else {
                RatPoly shifted = to_rat(q).taylor_shift(point.value);
                nu[static_cast<std::size_t>(j)] = shifted.valuation();
                lead[static_cast<std::size_t>(j)] = shifted[static_cast<std::size_t>(shifted.valuation())];
            }
        }
        int m = kNone;
        if (point.kind == SingularPoint::kInfinity) {
            // p^j D^j = ff_j(theta_p) and theta_p = -theta_t, so Q_j D^j ~ lc_j t^{j - deg_j} ff_j(-theta_t)
            for (int j = 0; j <= k; ++j)
                if (nu[static_cast<std::size_t>(j)] != kNone) m = std::min(m, nu[static_cast<std::size_t>(j)] + j);
            out.regular = nu[static_cast<std::size_t>(k)] + k == m;
            if (!out.regular) return out;
            RatPoly ind;
            for (int j = 0; j <= k; ++j)
                if (nu[static_cast<std::size_t>(j)] != kNone && nu[static_cast<std::size_t>(j)] + j == m)
                    ind += detail::falling_factorial(j).scale_arg(Rat(-1)) * lead[static_cast<std::size_t>(j)];
            out.indicial = ind;
            out.exponents = detail::roots_of(ind);
            return out;
        }
        for (int j = 0; j <= k; ++j)
            if (nu[static_cast<std::size_t>(j)] != kNone) m = std::min(m, nu[static_cast<std::size_t>(j)] - j);
        out.regular = nu[static_cast<std::size_t>(k)] - k == m;
        if (!out.regular) return out;
        out.ordinary = nu[static_cast<std::size_t>(k)] == 0;
        RatPoly ind;
        for (int j = 0; j <= k; ++j)
            if (nu[static_cast<std::size_t>(j)] != kNone && nu[static_cast<std::size_t>(j)] - j == m)
                ind += detail::falling_factorial(j) * lead[static_cast<std::size_t>(j)];
        out.indicial = ind;
        out.exponents = detail::roots_of(ind);
        return out;
    }

    // algebraic point: orders from exact division by the defining polynomial f, leading Taylor coefficient
    // (Q_j / f^nu)(alpha) * f'(alpha)^nu evaluated numerically
    const IntPoly& f = point.minimal_polynomial;
    const Complex fp = eval_complex(f.derivative(), point.approx);
    std::vector<int> nu(static_cast<std::size_t>(k + 1), kNone);
    std::vector<Complex> lead(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) {
        const IntPoly& q = op.coeffs[static_cast<std::size_t>(j)];
        if (q.is_zero()) continue;
        IntPoly cof;
        int e = multiplicity(q, f, &cof);
        Complex c = eval_complex(cof, point.approx);
        for (int i = 0; i < e; ++i) c *= fp;
        nu[static_cast<std::size_t>(j)] = e;
        lead[static_cast<std::size_t>(j)] = c;
    }
    int m = kNone;
    for (int j = 0; j <= k; ++j)
        if (nu[static_cast<std::size_t>(j)] != kNone) m = std::min(m, nu[static_cast<std::size_t>(j)] - j);
    out.regular = nu[static_cast<std::size_t>(k)] - k == m;
    if (!out.regular) return out;
    out.ordinary = nu[static_cast<std::size_t>(k)] == 0;
    std::vector<Complex> ind(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) {
        if (nu[static_cast<std::size_t>(j)] == kNone || nu[static_cast<std::size_t>(j)] - j != m) continue;
        RatPoly ff = detail::falling_factorial(j);
        for (std::size_t i = 0; i < ff.size(); ++i) ind[i] += lead[static_cast<std::size_t>(j)] * Complex(to_real(ff[i]));
    }
    for (const auto& z : complex_roots(ind)) out.exponents.push_back({false, Rat(0), z});
    detail::sort_exponents(out.exponents);
    return out;
}

inline ExponentSet indicial_exponents_at_origin(const DiffOperator& op) {
    return indicial_exponents(op, SingularPoint::rational(Rat(0), "0"));
}

}  // namespace dcp
