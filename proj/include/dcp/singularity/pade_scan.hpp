#pragma once

/**
 * @file pade_scan.hpp
 * @brief Diagonal Padé approximants sampled on a grid, with their real poles in a window.
 */

#include "dcp/algebra/numeric.hpp"
#include "dcp/algebra/pade.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/series.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

struct PadeSample {
    double p;
    double value;        // numerator / denominator
    double denominator;  // denominator value, normalized to 1 at p = 0
};

struct PadeScanReport {
    int requested_degree = 0;
    int L = 0, M = 0;                     // degrees actually used
    std::vector<int> degenerate_degrees;  // diagonal degrees that were singular and skipped
    double lo = 0, hi = 0;
    std::vector<Complex> denominator_roots;
    std::vector<Complex> numerator_roots;
    std::vector<double> real_poles;  // denominator roots in [lo, hi] with negligible imaginary part
    std::vector<PadeSample> samples;

    // Smallest distance from x to any denominator root (complex distance); nullopt without poles.
    std::optional<double> nearest_pole_distance(double x) const {
        std::optional<double> best;
        for (const auto& z : denominator_roots) {
            double d = abs(z - Complex(Real(x))).convert_to<double>();
            if (!best || d < *best) best = d;
        }
        return best;
    }
    bool has_real_pole_in(double a, double b) const {
        for (double x : real_poles)
            if (x > a && x < b) return true;
        return false;
    }
};

namespace detail {

inline PadeApprox diagonal_pade_with_retry(const RatSeries& s, int degree, std::vector<int>& degenerate) {
    for (int d = degree; d >= 0; --d) {
        try {
            return pade(s, d, d);
        } catch (const DegeneratePade&) {
            degenerate.push_back(d);
        }
    }
    throw std::runtime_error("no non-degenerate diagonal Pade approximant up to degree " + std::to_string(degree));
}

}  // namespace detail

// Samples the [degree/degree] approximant on lo, lo + step, ..., hi. A singular linear system is retried at
// (degree-1, degree-1) and so on; every skipped degree is reported.
inline PadeScanReport pade_scan(const RatSeries& s, double lo, double hi, double step, int degree,
                                double imag_tol = 1e-12) {
    if (degree < 0) throw std::invalid_argument("Pade degree must be non-negative");
    if (s.order() < 2 * degree) throw std::invalid_argument("series order below 2 * degree");
    if (!(step > 0) || hi < lo) throw std::invalid_argument("bad scan grid");
    PadeScanReport rep;
    rep.requested_degree = degree;
    rep.lo = lo;
    rep.hi = hi;
    PadeApprox pa = detail::diagonal_pade_with_retry(s, degree, rep.degenerate_degrees);
    rep.L = pa.L;
    rep.M = pa.M;
    if (pa.denominator.degree() > 0) rep.denominator_roots = complex_roots(pa.denominator);
    if (pa.numerator.degree() > 0) rep.numerator_roots = complex_roots(pa.numerator);
    for (const auto& z : rep.denominator_roots) {
        if (abs(z.im) > Real(imag_tol) * std::max(Real(1), abs(z))) continue;
        double x = z.re.convert_to<double>();
        if (x >= lo && x <= hi) rep.real_poles.push_back(x);
    }
    std::sort(rep.real_poles.begin(), rep.real_poles.end());
    const int n = static_cast<int>((hi - lo) / step + 1e-9);
    for (int i = 0; i <= n; ++i) {
        double x = lo + i * step;
        Real xr(x);
        Real den = eval_real(pa.denominator, xr);
        Real num = eval_real(pa.numerator, xr);
        rep.samples.push_back({x, (num / den).convert_to<double>(), den.convert_to<double>()});
    }
    return rep;
}

inline std::string to_csv(const PadeScanReport& rep) {
    std::ostringstream os;
    os.precision(17);
    os << "p,value,denominator\n";
    for (const auto& s : rep.samples) {
        std::ostringstream p;
        p.precision(12);
        p << s.p;
        os << p.str() << "," << s.value << "," << s.denominator << "\n";
    }
    return os.str();
}

}  // namespace dcp
