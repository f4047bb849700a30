#pragma once

/**
 * @file pipeline.hpp
 * @brief End-to-end jobs: series generation feeding the modular guessers and exact reconstruction.
 */

#include "dcp/algebra/modular.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/ode/guess.hpp"
#include "dcp/ode/recurrence.hpp"
#include "dcp/ode/search.hpp"
#include "dcp/series/generator.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace dcp {

// Exact terms used to certify a reconstructed operator: the order-4 operators of degree 33 need about 200.
inline constexpr int kCertificationOrder = 220;

inline ModSeriesSource specialized_source(const Seed& seed, const Rat& r) {
    return [seed, r](std::uint64_t q, int terms) { return specialize_mod(seed, r, terms - 1, q); };
}

struct OdeJob {
    Seed seed{1, 1};
    Rat r;
    int certification_order = kCertificationOrder;
    int max_primes = 30;
    SearchSchedule schedule{};
    std::uint64_t prime_start = prime_sequence_start();
};

// Minimal homogeneous ODE of S_{m,y}(p, r p), certified against the exact series.
inline std::optional<ExactOde> minimal_exact_ode(const OdeJob& job, std::ostream* progress = nullptr) {
    RatSeries exact = mean_size_specialized(job.seed, job.r, job.certification_order);
    if (progress) *progress << "exact series through p^" << job.certification_order << "\n";
    return find_exact_ode(specialized_source(job.seed, job.r), exact, job.schedule, job.max_primes, progress,
                          job.prime_start);
}

struct RecurrenceResult {
    PRecurrence rec;
    std::vector<ModRecurrence> images;
    int terms = 0;    // series terms consumed per prime
    int holdout = 0;  // equations beyond the number of unknowns
};

// Minimal P-recurrence from the first `terms` coefficients, reconstructed from `nprimes` images. Primes whose
// recurrence has a different shape than the first are discarded as unlucky.
inline std::optional<RecurrenceResult> recurrence_from_series(const RatSeries& s, int max_order, int max_degree,
                                                              int nprimes, std::uint64_t prime_start = prime_sequence_start(),
                                                              int holdout = kDefaultHoldout) {
    PrimeSequence primes(prime_start);
    RecurrenceResult out;
    for (int guard = 0; static_cast<int>(out.images.size()) < nprimes && guard < 4 * nprimes; ++guard) {
        std::uint64_t q = primes.next();
        auto g = guess_precurrence(reduce(s, q), max_order, max_degree, holdout);
        if (!g) {
            if (out.images.empty()) return std::nullopt;
            continue;
        }
        if (!out.images.empty() && (g->rec.order != out.images[0].order || g->rec.degree != out.images[0].degree)) continue;
        out.images.push_back(g->rec);
        out.terms = g->terms;
        out.holdout = g->holdout;
    }
    if (out.images.empty()) return std::nullopt;
    out.rec = reconstruct_precurrence(out.images);
    return out;
}

}  // namespace dcp
