#pragma once

/**
 * @file gamma.hpp
 * @brief Critical-exponent estimates by Dlog-Padé analysis of a series.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/numeric.hpp"
#include "dcp/algebra/pade.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/series.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dcp {

struct DlogPadeProbe {
    int L = 0, M = 0;
    double pc = 0;     // pole location (real part)
    double gamma = 0;  // minus the residue
    double imag = 0;   // imaginary part of the pole
};

struct GammaEstimate {
    bool ok = false;
    double pc = 0, gamma = 0;
    double pc_spread = 0, gamma_spread = 0;  // max - min over the approximants used
    std::vector<DlogPadeProbe> probes;
    std::vector<int> degenerate;  // diagonal degrees skipped
};

// d/dp log(s) as a series of order s.order() - 1; needs s(0) != 0.
inline RatSeries dlog_series(const RatSeries& s) {
    if (s.coeffs.empty() || sgn(s.coeffs[0]) == 0) throw std::invalid_argument("log-derivative needs s(0) != 0");
    RatSeries d = derivative(s);
    RatSeries inv = inverse(RatSeries{std::vector<Rat>(s.coeffs.begin(), s.coeffs.begin() + d.order() + 1)});
    return mul(d, inv);
}

// Pole of P/Q nearest to pc within the search radius, with residue P/Q' there.
inline std::optional<DlogPadeProbe> dlog_pole_near(const PadeApprox& pa, double pc, double radius) {
    if (pa.denominator.degree() <= 0) return std::nullopt;
    const Complex target{Real(pc)};
    std::optional<Complex> best;
    for (const auto& z : complex_roots(pa.denominator))
        if (!best || abs(z - target) < abs(*best - target)) best = z;
    if (!best || abs(*best - target) > Real(radius)) return std::nullopt;
    Complex res = eval_complex(pa.numerator, *best) / eval_complex(pa.denominator.derivative(), *best);
    return DlogPadeProbe{pa.L, pa.M, best->re.convert_to<double>(), (-res.re).convert_to<double>(),
                         best->im.convert_to<double>()};
}

// Uses the three largest diagonal approximants [n/n], [n-2/n-2], [n-4/n-4] that fit the series; singular
// systems fall back to the gcd-reduced Padé form. With S ~ A (pc - p)^(-gamma), (log S)' has residue -gamma at pc.
inline GammaEstimate critical_exponent_estimate(const RatSeries& s, const Rat& pc, double radius = 0.05,
                                                int sizes = 3) {
    if (s.order() < 40) throw std::invalid_argument("critical exponent estimate needs series order >= 40");
    RatSeries g = dlog_series(s);
    const double pcd = pc.get_d();
    GammaEstimate est;
    int n = g.order() / 2;
    while (static_cast<int>(est.probes.size()) < sizes && n >= 4) {
        std::optional<PadeApprox> pa;
        try {
            pa = pade_reduced(g, n, n);
        } catch (const DegeneratePade&) {
            est.degenerate.push_back(n);
        }
        n -= 2;
        if (!pa) continue;
        if (auto probe = dlog_pole_near(*pa, pcd, radius)) est.probes.push_back(*probe);
    }
    if (static_cast<int>(est.probes.size()) < sizes) return est;
    auto [gmin, gmax] = std::minmax_element(est.probes.begin(), est.probes.end(),
                                            [](const auto& a, const auto& b) { return a.gamma < b.gamma; });
    auto [pmin, pmax] = std::minmax_element(est.probes.begin(), est.probes.end(),
                                            [](const auto& a, const auto& b) { return a.pc < b.pc; });
    est.ok = true;
    est.gamma = est.probes.front().gamma;
    est.pc = est.probes.front().pc;
    est.gamma_spread = gmax->gamma - gmin->gamma;
    est.pc_spread = pmax->pc - pmin->pc;
    return est;
}

}  // namespace dcp
