#pragma once

/**
 * @file guess.hpp
 * @brief Guessing P-recurrences and theta-form ODEs from series modulo a prime.
 *
 * ODE ansatz: sum_{j<=k} P_j(p) theta^j S = R(p) with deg P_j <= d (theta = p d/dp) and optional
 * deg R <= e. The coefficient of p^t gives one linear equation in the unknown coefficients; the system
 * uses (k+1)(d+1) [+ e+1] + holdout equations, so every accepted solution is checked on holdout
 * equations beyond the square part.
 */

#include "dcp/algebra/linalg.hpp"
#include "dcp/algebra/modular.hpp"
#include "dcp/algebra/number.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/ode/operator.hpp"
#include "dcp/ode/recurrence.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

inline constexpr int kDefaultHoldout = 10;

class InsufficientTerms : public std::invalid_argument {
public:
    InsufficientTerms(int required, int available)
        : std::invalid_argument("need " + std::to_string(required) + " series terms, have " + std::to_string(available)),
          required_(required) {}
    int required() const { return required_; }

private:
    int required_;
};

// Theta-form operator over F_q; entries laid out as P_{j,i} at j*(d+1)+i, followed by R_0..R_e.
struct ModThetaOperator {
    std::uint64_t prime = 0;
    int order = 0, degree = 0;
    int rhs_degree = -1;  // -1: homogeneous
    std::vector<std::uint64_t> v;

    std::uint64_t coeff(int j, int i) const { return v[static_cast<std::size_t>(j * (degree + 1) + i)]; }
    std::vector<bool> support() const {
        std::vector<bool> s;
        for (auto x : v) s.push_back(x != 0);
        return s;
    }
};

struct ModRecurrence {
    std::uint64_t prime = 0;
    int order = 0, degree = 0;
    std::vector<std::uint64_t> v;  // c_{j,i} at j*(degree+1)+i, c_j(n) = sum_i c_{j,i} n^i
};

inline int theta_unknowns(int k, int d, int rhs_degree) { return (k + 1) * (d + 1) + (rhs_degree >= 0 ? rhs_degree + 1 : 0); }

// Linear system for the theta ansatz built from the first `rows` coefficients.
inline ModMatrix theta_system(const ModSeries& s, int k, int d, int rhs_degree, int rows) {
    const std::uint64_t q = s.prime;
    const int U = theta_unknowns(k, d, rhs_degree);
    if (rows > static_cast<int>(s.coeffs.size())) throw InsufficientTerms(rows, static_cast<int>(s.coeffs.size()));
    ModMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(U), q);
    for (int t = 0; t < rows; ++t) {
        for (int i = 0; i <= d && i <= t; ++i) {
            std::uint64_t a = s.coeffs[static_cast<std::size_t>(t - i)];
            std::uint64_t n = static_cast<std::uint64_t>(t - i) % q;
            std::uint64_t pw = a;
            for (int j = 0; j <= k; ++j) {
                m(static_cast<std::size_t>(t), static_cast<std::size_t>(j * (d + 1) + i)) = pw;
                pw = modp::mul(pw, n, q);
            }
        }
        if (rhs_degree >= 0 && t <= rhs_degree)
            m(static_cast<std::size_t>(t), static_cast<std::size_t>((k + 1) * (d + 1) + t)) = q - 1;
    }
    return m;
}

struct ModGuess {
    enum Status { kFound, kNone, kAmbiguous } status = kNone;
    int kernel_dim = 0;
    int terms = 0;    // series coefficients consumed
    int holdout = 0;  // equations beyond the number of unknowns
    ModThetaOperator op;
};

namespace detail {

// Scales a kernel vector so the lowest-degree nonzero coefficient of the highest nonzero P_j is 1.
inline bool normalize_theta(ModThetaOperator& op) {
    const std::uint64_t q = op.prime;
    for (int j = op.order; j >= 0; --j)
        for (int i = 0; i <= op.degree; ++i) {
            std::uint64_t c = op.coeff(j, i);
            if (c == 0) continue;
            std::uint64_t inv = modp::inv(c, q);
            for (auto& x : op.v) x = modp::mul(x, inv, q);
            return j == op.order;
        }
    return false;
}

}  // namespace detail

// Kernel of the theta ansatz at (k, d[, e]) with the given number of equations.
inline ModGuess guess_ode_mod(const ModSeries& s, int k, int d, int rhs_degree = -1, int holdout = kDefaultHoldout,
                              int rows = -1) {
    const int U = theta_unknowns(k, d, rhs_degree);
    const int need = U + holdout;
    if (rows < 0) rows = need;
    if (rows < need || rows > static_cast<int>(s.coeffs.size()))
        throw InsufficientTerms(std::max(rows, need), static_cast<int>(s.coeffs.size()));
    auto basis = nullspace_mod(theta_system(s, k, d, rhs_degree, rows));
    ModGuess g;
    g.kernel_dim = static_cast<int>(basis.size());
    g.terms = rows;
    g.holdout = rows - U;
    if (basis.empty()) return g;
    if (basis.size() > 1) {
        g.status = ModGuess::kAmbiguous;
        return g;
    }
    g.op = ModThetaOperator{s.prime, k, d, rhs_degree, basis[0]};
    // a kernel vector with vanishing head means a lower order suffices at this degree
    g.status = detail::normalize_theta(g.op) ? ModGuess::kFound : ModGuess::kNone;
    return g;
}

// P-recurrence ansatz: rows n = s .. s+rows-1 of sum_{j,i} c_{j,i} n^i a_{n-j} = 0.
inline ModMatrix recurrence_system(const ModSeries& a, int s, int delta, int rows) {
    const std::uint64_t q = a.prime;
    const int U = (s + 1) * (delta + 1);
    ModMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(U), q);
    for (int r = 0; r < rows; ++r) {
        const int n = s + r;
        for (int j = 0; j <= s; ++j) {
            std::uint64_t val = a.coeffs[static_cast<std::size_t>(n - j)];
            for (int i = 0; i <= delta; ++i) {
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(j * (delta + 1) + i)) = val;
                val = modp::mul(val, static_cast<std::uint64_t>(n) % q, q);
            }
        }
    }
    return m;
}

struct RecurrenceGuess {
    ModRecurrence rec;
    int terms = 0;
    int holdout = 0;
};

// Minimal (order, then degree) recurrence with a one-dimensional kernel; nullopt when the grid is exhausted.
inline std::optional<RecurrenceGuess> guess_precurrence(const ModSeries& a, int max_order, int max_degree,
                                                        int holdout = kDefaultHoldout) {
    const int len = static_cast<int>(a.coeffs.size());
    const int required = (max_order + 1) * (max_degree + 2) + holdout;
    if (required > len) throw InsufficientTerms(required, len);
    for (int s = 1; s <= max_order; ++s)
        for (int delta = 0; delta <= max_degree; ++delta) {
            const int U = (s + 1) * (delta + 1);
            int rows = U + holdout;
            auto basis = nullspace_mod(recurrence_system(a, s, delta, rows));
            if (basis.size() > 1) {
                rows = len - s;  // over-determine before accepting a multi-dimensional kernel
                basis = nullspace_mod(recurrence_system(a, s, delta, rows));
            }
            if (basis.size() != 1) continue;
            ModRecurrence rec{a.prime, s, delta, basis[0]};
            std::uint64_t piv = 0;
            for (int i = 0; i <= delta && piv == 0; ++i) piv = rec.v[static_cast<std::size_t>(i)];
            if (piv == 0) continue;  // c_0 vanishes: not a valid recurrence of this order
            std::uint64_t inv = modp::inv(piv, a.prime);
            for (auto& x : rec.v) x = modp::mul(x, inv, a.prime);
            return RecurrenceGuess{rec, s + rows, rows - U};
        }
    return std::nullopt;
}

class ReconstructionFailure : public std::runtime_error {
public:
    ReconstructionFailure(int modulus_digits, int missing_digits)
        : std::runtime_error("rational reconstruction failed with a " + std::to_string(modulus_digits) +
                             "-digit modulus; roughly " + std::to_string(missing_digits) +
                             " more digits (additional primes) required"),
          missing_digits_(missing_digits) {}
    int missing_digits() const { return missing_digits_; }

private:
    int missing_digits_;
};

namespace detail {

// CRT + rational reconstruction of equally shaped residue vectors, scaled to a primitive integer vector.
inline std::vector<Int> reconstruct_integer_vector(const std::vector<std::vector<std::uint64_t>>& images,
                                                   const std::vector<std::uint64_t>& primes) {
    if (images.empty() || images.size() != primes.size()) throw std::invalid_argument("need one image per prime");
    const std::size_t n = images[0].size();
    std::vector<Int> combined(n);
    Int modulus;
    for (std::size_t e = 0; e < n; ++e) {
        std::vector<std::pair<Int, Int>> res;
        for (std::size_t p = 0; p < primes.size(); ++p) {
            if (images[p].size() != n) throw std::invalid_argument("images differ in shape");
            res.emplace_back(Int(static_cast<unsigned long>(images[p][e])), Int(static_cast<unsigned long>(primes[p])));
        }
        auto [x, M] = crt_combine(res);
        combined[e] = x;
        modulus = M;
    }
    auto rats = reconstruct_vector(combined, modulus);
    const int mod_digits = static_cast<int>(mpz_sizeinbase(modulus.get_mpz_t(), 10));
    if (!rats) {
        // the entries carry at least half the modulus in numerator and denominator together
        throw ReconstructionFailure(mod_digits, std::max(1, mod_digits / static_cast<int>(primes.size())));
    }
    Int den = 1;
    for (const auto& r : *rats) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
    std::vector<Int> out;
    Int g = 0;
    for (const auto& r : *rats) {
        out.push_back(r.get_num() * (den / r.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (sgn(g) != 0)
        for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace detail

inline PRecurrence reconstruct_precurrence(const std::vector<ModRecurrence>& images) {
    if (images.empty()) throw std::invalid_argument("no images");
    std::vector<std::vector<std::uint64_t>> vs;
    std::vector<std::uint64_t> primes;
    for (const auto& im : images) {
        if (im.order != images[0].order || im.degree != images[0].degree)
            throw std::invalid_argument("images differ in order or degree");
        vs.push_back(im.v);
        primes.push_back(im.prime);
    }
    auto ints = detail::reconstruct_integer_vector(vs, primes);
    const int s = images[0].order, delta = images[0].degree;
    PRecurrence r;
    for (int j = 0; j <= s; ++j)
        r.coeffs.emplace_back(std::vector<Int>(ints.begin() + j * (delta + 1), ints.begin() + (j + 1) * (delta + 1)));
    return normalize(r);
}

// Exact theta-form operator from images sharing (order, degree, rhs degree, support).
inline ThetaOperator reconstruct_theta(const std::vector<ModThetaOperator>& images) {
    if (images.empty()) throw std::invalid_argument("no images");
    const auto& f = images[0];
    std::vector<std::vector<std::uint64_t>> vs;
    std::vector<std::uint64_t> primes;
    for (const auto& im : images) {
        if (im.order != f.order || im.degree != f.degree || im.rhs_degree != f.rhs_degree)
            throw std::invalid_argument("images differ in shape");
        if (im.support() != f.support()) throw std::invalid_argument("images differ in support");
        vs.push_back(im.v);
        primes.push_back(im.prime);
    }
    auto ints = detail::reconstruct_integer_vector(vs, primes);
    ThetaOperator t;
    const int w = f.degree + 1;
    for (int j = 0; j <= f.order; ++j)
        t.coeffs.emplace_back(std::vector<Int>(ints.begin() + j * w, ints.begin() + (j + 1) * w));
    if (f.rhs_degree >= 0) t.rhs = IntPoly(std::vector<Int>(ints.begin() + (f.order + 1) * w, ints.end()));
    return t;
}

inline DiffOperator reconstruct_ode(const std::vector<ModThetaOperator>& images) {
    return normalize(to_d_form(reconstruct_theta(images)));
}

}  // namespace dcp
