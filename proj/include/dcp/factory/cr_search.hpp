#pragma once

/**
 * @file cr_search.hpp
 * @brief Brute-force search for the multiple c_r of the rational solution whose removal lowers the ODE order.
 */

#include "dcp/algebra/modular.hpp"
#include "dcp/algebra/number.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/factory/closed_form.hpp"
#include "dcp/ode/guess.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

struct CrSearchOptions {
    int order = 3;                // order the reduced equation must reach
    int degree = 24;              // theta-degree bound of the reduced equation
    int holdout = kDefaultHoldout;
    std::vector<std::uint64_t> primes{251, 241};  // every residue below each prime is tried
};

struct CrResult {
    enum Status { kFound, kNone, kMultiple, kInconsistent };
    Status status = kNone;
    Rat r;
    std::optional<Rat> c;
    std::vector<std::uint64_t> primes;
    std::vector<std::vector<std::uint64_t>> candidates;  // residues passing the kernel test, per prime
    int reduced_order = 0;

    std::string status_str() const {
        switch (status) {
            case kFound: return "FOUND";
            case kNone: return "NONE";
            case kMultiple: return "MULTIPLE";
            case kInconsistent: return "INCONSISTENT";
        }
        return "?";
    }
};

// p^2 * s as a series of the same order.
inline RatSeries shift_by_p2(const RatSeries& s) {
    RatSeries out;
    out.coeffs.assign(2, Rat(0));
    for (int i = 0; i + 2 <= s.order(); ++i) out.coeffs.push_back(s.coeffs[static_cast<std::size_t>(i)]);
    return out;
}

inline int cr_terms(const CrSearchOptions& opt) { return theta_unknowns(opt.order, opt.degree, -1) + opt.holdout; }

// Whether G = a - c b admits an operator of the requested order and degree modulo q.
inline bool lowers_order(const ModSeries& a, const ModSeries& b, std::uint64_t c, const CrSearchOptions& opt) {
    ModSeries g{a.prime, {}};
    g.coeffs.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) g.coeffs[i] = modp::sub(a.coeffs[i], modp::mul(c, b.coeffs[i], a.prime), a.prime);
    return guess_ode_mod(g, opt.order, opt.degree, -1, opt.holdout).kernel_dim > 0;
}

// Searches c with G_r = p^2 S - c p^2 R satisfying an equation of the reduced order. Every residue modulo each
// prime is tried; the residues are combined by CRT and lifted by rational reconstruction, and the lift must be
// consistent with every prime's unique candidate.
inline CrResult cr_search(const RatSeries& physical, const ClosedForm& rational, const CrSearchOptions& opt = {}) {
    if (opt.primes.empty()) throw std::invalid_argument("cr_search needs at least one prime");
    const int terms = cr_terms(opt);
    if (physical.order() + 1 < terms) throw InsufficientTerms(terms, physical.order() + 1);
    CrResult res;
    res.r = rational.r;
    res.reduced_order = opt.order;
    RatSeries a = shift_by_p2(physical);
    a.coeffs.resize(static_cast<std::size_t>(terms));
    RatSeries b = rational.shifted_series(terms - 1);
    std::vector<std::pair<Int, Int>> residues;
    for (std::uint64_t q : opt.primes) {
        ModSeries am = reduce(a, q), bm = reduce(b, q);
        std::vector<std::uint64_t> found;
        for (std::uint64_t c = 0; c < q; ++c)
            if (lowers_order(am, bm, c, opt)) found.push_back(c);
        res.primes.push_back(q);
        res.candidates.push_back(found);
        if (found.size() > 1) res.status = CrResult::kMultiple;
        if (found.size() == 1) residues.emplace_back(Int(static_cast<unsigned long>(found[0])), Int(static_cast<unsigned long>(q)));
    }
    if (res.status == CrResult::kMultiple) return res;
    if (residues.size() != opt.primes.size()) {
        res.status = CrResult::kNone;
        return res;
    }
    auto [u, M] = crt_combine(residues);
    auto c = rational_reconstruct(u, M);
    if (!c) {
        res.status = CrResult::kInconsistent;
        return res;
    }
    for (std::size_t i = 0; i < opt.primes.size(); ++i)
        if (modp::reduce(*c, opt.primes[i]) != res.candidates[i][0]) {
            res.status = CrResult::kInconsistent;
            return res;
        }
    res.c = *c;
    res.status = CrResult::kFound;
    return res;
}

}  // namespace dcp
