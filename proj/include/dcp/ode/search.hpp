#pragma once

/**
 * @file search.hpp
 * @brief Minimal-ODE search over a (order, degree) schedule across primes, and exact reconstruction.
 */

#include "dcp/algebra/modular.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/ode/guess.hpp"
#include "dcp/ode/operator.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <vector>

namespace dcp {

using ModSeriesSource = std::function<ModSeries(std::uint64_t prime, int terms)>;

struct SearchSchedule {
    int min_order = 1;
    int max_order = 6;
    std::vector<int> degrees{4, 8, 12, 16, 20, 24, 28, 32, 36, 40};
    int holdout = kDefaultHoldout;
    int extra_rows = 20;  // used to over-determine a multi-dimensional kernel
    int rhs_degree = -1;
};

struct GridProbe {
    int order, degree, kernel_dim;
};

struct GuessReport {
    int order = -1, degree = -1;
    std::vector<std::uint64_t> primes;   // primes whose images were used
    std::vector<std::uint64_t> unlucky;  // primes discarded for disagreeing with the majority
    int terms = 0;                       // series terms consumed per prime
    int holdout = 0;
    std::vector<GridProbe> probes;       // kernel dimensions seen while scanning with the first prime
};

struct SearchResult {
    bool found = false;
    GuessReport report;
    std::vector<ModThetaOperator> images;
};

namespace detail {

inline int schedule_terms(const SearchSchedule& s) {
    int dmax = s.degrees.empty() ? 0 : *std::max_element(s.degrees.begin(), s.degrees.end());
    return theta_unknowns(s.max_order, dmax, s.rhs_degree) + s.holdout + s.extra_rows;
}

}  // namespace detail

// Scans k ascending and d along the schedule with the first prime. A hit of kernel dimension m at degree d is
// over-determined, then refined to the minimal degree d - m + 1 (left polynomial multiples of the minimal
// operator account for the extra dimensions). Further primes are taken at that grid point.
inline SearchResult minimal_ode_search(const ModSeriesSource& source, int nprimes, const SearchSchedule& sched,
                                       PrimeSequence& primes, std::ostream* progress = nullptr) {
    SearchResult out;
    const int h = sched.holdout;
    const std::uint64_t q0 = primes.next();
    const int L = detail::schedule_terms(sched);
    ModSeries s0 = source(q0, L);
    if (progress) *progress << "generated " << L << " terms mod " << q0 << "\n";
    int k_found = -1, d_found = -1;
    for (int k = sched.min_order; k <= sched.max_order && k_found < 0; ++k) {
        int prev_d = -1;
        for (int d : sched.degrees) {
            const int U = theta_unknowns(k, d, sched.rhs_degree);
            if (U + h > L) break;
            ModGuess g = guess_ode_mod(s0, k, d, sched.rhs_degree, h);
            out.report.probes.push_back({k, d, g.kernel_dim});
            if (progress) *progress << "  (k,d)=(" << k << "," << d << ") kernel " << g.kernel_dim << "\n";
            if (g.kernel_dim == 0) {
                prev_d = d;
                continue;
            }
            int rows = std::min(L, U + h + sched.extra_rows);
            int dim = guess_ode_mod(s0, k, d, sched.rhs_degree, h, rows).kernel_dim;
            if (dim == 0) {
                prev_d = d;
                continue;
            }
            int d0 = std::max(prev_d + 1, d - dim + 1);
            for (int dd = d0; dd <= d; ++dd) {
                ModGuess gg = guess_ode_mod(s0, k, dd, sched.rhs_degree, h);
                out.report.probes.push_back({k, dd, gg.kernel_dim});
                if (gg.kernel_dim == 0) continue;
                if (gg.status == ModGuess::kFound) {
                    k_found = k;
                    d_found = dd;
                    out.images.push_back(gg.op);
                    out.report.primes.push_back(q0);
                }
                break;
            }
            break;
        }
    }
    if (k_found < 0) return out;
    out.report.order = k_found;
    out.report.degree = d_found;
    out.report.holdout = h;
    out.report.terms = theta_unknowns(k_found, d_found, sched.rhs_degree) + h;
    const auto reference = out.images[0].support();
    while (static_cast<int>(out.images.size()) < nprimes) {
        std::uint64_t q = primes.next();
        ModSeries s = source(q, out.report.terms);
        ModGuess g = guess_ode_mod(s, k_found, d_found, sched.rhs_degree, h);
        if (g.status != ModGuess::kFound || g.op.support() != reference) {
            out.report.unlucky.push_back(q);
            continue;
        }
        out.images.push_back(g.op);
        out.report.primes.push_back(q);
        if (progress) *progress << "  image mod " << q << "\n";
    }
    out.found = true;
    return out;
}

struct ExactOde {
    DiffOperator op;
    ThetaOperator theta;
    GuessReport report;
    int verified_order = -1;
};

// Adds primes one at a time until the reconstructed operator annihilates the exact series.
inline std::optional<ExactOde> find_exact_ode(const ModSeriesSource& source, const RatSeries& exact,
                                              const SearchSchedule& sched, int max_primes,
                                              std::ostream* progress = nullptr,
                                              std::uint64_t prime_start = prime_sequence_start()) {
    PrimeSequence primes(prime_start);
    SearchResult sr = minimal_ode_search(source, 1, sched, primes, progress);
    if (!sr.found) return std::nullopt;
    const auto reference = sr.images[0].support();
    while (static_cast<int>(sr.images.size()) <= max_primes) {
        try {
            ThetaOperator t = reconstruct_theta(sr.images);
            DiffOperator op = normalize(to_d_form(t));
            Residual res = apply_operator(op, exact);
            if (res.zero()) {
                if (progress) *progress << "reconstructed with " << sr.images.size() << " primes\n";
                return ExactOde{op, t, sr.report, res.verified_order};
            }
        } catch (const ReconstructionFailure&) {
        }
        if (static_cast<int>(sr.images.size()) == max_primes) break;
        std::uint64_t q = primes.next();
        ModSeries s = source(q, sr.report.terms);
        ModGuess g = guess_ode_mod(s, sr.report.order, sr.report.degree, sched.rhs_degree, sched.holdout);
        if (g.status != ModGuess::kFound || g.op.support() != reference) {
            sr.report.unlucky.push_back(q);
            continue;
        }
        sr.images.push_back(g.op);
        sr.report.primes.push_back(q);
    }
    return std::nullopt;
}

}  // namespace dcp
