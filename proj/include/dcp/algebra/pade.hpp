#pragma once

/**
 * @file pade.hpp
 * @brief Padé approximants of exact rational series.
 */

#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/poly_tools.hpp"
#include "dcp/algebra/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

struct PadeApprox {
    RatPoly numerator;
    RatPoly denominator;  // denominator(0) = 1
    int L = 0, M = 0;
};

class DegeneratePade : public std::runtime_error {
public:
    DegeneratePade(int L, int M)
        : std::runtime_error("degenerate Pade approximant [" + std::to_string(L) + "/" + std::to_string(M) + "]") {}
};

namespace detail {

// Solves A x = b over Q by fraction-free (Bareiss) elimination on the integer-scaled system.
// Returns false when A is singular.
inline bool solve_bareiss(std::vector<std::vector<Int>> a, std::vector<Int> b, std::vector<Rat>& x) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(a[piv][k]) == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    x.assign(n, Rat(0));
    for (std::size_t i = n; i-- > 0;) {
        Rat acc(a[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(a[i][j]) * x[j];
        x[i] = acc / Rat(a[i][i]);
    }
    return true;
}

}  // namespace detail

// [L/M] approximant: P/Q with Q(0) = 1 and Q*s - P = O(p^{L+M+1}).
inline PadeApprox pade(const RatSeries& s, int L, int M) {
    if (L < 0 || M < 0) throw std::invalid_argument("Pade degrees must be non-negative");
    if (s.order() < L + M) throw std::invalid_argument("series order below L+M");
    Int den = 1;
    for (int i = 0; i <= L + M; ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.coeffs[static_cast<std::size_t>(i)].get_den_mpz_t());
    auto si = [&](int k) -> Int {
        if (k < 0) return Int(0);
        const Rat& c = s.coeffs[static_cast<std::size_t>(k)];
        return c.get_num() * (den / c.get_den());
    };
    std::vector<Rat> q(static_cast<std::size_t>(M + 1), Rat(0));
    q[0] = 1;
    if (M > 0) {
        std::vector<std::vector<Int>> a(static_cast<std::size_t>(M), std::vector<Int>(static_cast<std::size_t>(M)));
        std::vector<Int> b(static_cast<std::size_t>(M));
        for (int r = 0; r < M; ++r) {
            int k = L + 1 + r;
            for (int j = 1; j <= M; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)] = si(k - j);
            b[static_cast<std::size_t>(r)] = -si(k);
        }
        std::vector<Rat> x;
        if (!detail::solve_bareiss(std::move(a), std::move(b), x)) throw DegeneratePade(L, M);
        for (int j = 1; j <= M; ++j) q[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j - 1)];
    }
    std::vector<Rat> p(static_cast<std::size_t>(L + 1), Rat(0));
    for (int i = 0; i <= L; ++i)
        for (int j = 0; j <= std::min(i, M); ++j)
            p[static_cast<std::size_t>(i)] += q[static_cast<std::size_t>(j)] * s.coeffs[static_cast<std::size_t>(i - j)];
    return {RatPoly(std::move(p)), RatPoly(std::move(q)), L, M};
}

// Padé form from any kernel vector of the (possibly singular) linear system, reduced by gcd(P, Q). For a
// series that is exactly a rational function of low degree this recovers that function at every (L, M) large
// enough. Throws DegeneratePade when the reduced denominator still vanishes at 0.
inline PadeApprox pade_reduced(const RatSeries& s, int L, int M) {
    try {
        return pade(s, L, M);
    } catch (const DegeneratePade&) {
    }
    // rows k = L+1 .. L+M: sum_{j=0}^{M} q_j s_{k-j} = 0
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(M), std::vector<Rat>(static_cast<std::size_t>(M + 1)));
    for (int r = 0; r < M; ++r)
        for (int j = 0; j <= M; ++j) {
            int k = L + 1 + r - j;
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = k < 0 ? Rat(0) : s.coeffs[static_cast<std::size_t>(k)];
        }
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (int c = 0; c <= M && row < a.size(); ++c) {
        std::size_t piv = row;
        while (piv < a.size() && sgn(a[piv][static_cast<std::size_t>(c)]) == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        Rat inv = 1 / a[row][static_cast<std::size_t>(c)];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || sgn(a[i][static_cast<std::size_t>(c)]) == 0) continue;
            Rat f = a[i][static_cast<std::size_t>(c)];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    int free_col = -1;
    for (int c = 0; c <= M && free_col < 0; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
    std::vector<Rat> q(static_cast<std::size_t>(M + 1), Rat(0));
    q[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        q[static_cast<std::size_t>(pivot_col[i])] = -a[i][static_cast<std::size_t>(free_col)];
    std::vector<Rat> pc(static_cast<std::size_t>(L + 1), Rat(0));
    for (int i = 0; i <= L; ++i)
        for (int j = 0; j <= std::min(i, M); ++j)
            pc[static_cast<std::size_t>(i)] += q[static_cast<std::size_t>(j)] * s.coeffs[static_cast<std::size_t>(i - j)];
    RatPoly P(std::move(pc)), Q(std::move(q));
    if (!P.is_zero()) {
        RatPoly g = gcd(P, Q);
        if (g.degree() > 0) {
            P = divmod(P, g).first;
            Q = divmod(Q, g).first;
        }
    } else {
        throw DegeneratePade(L, M);
    }
    if (sgn(Q[0]) == 0) throw DegeneratePade(L, M);
    Rat q0 = Q[0];
    return {P * (1 / q0), Q * (1 / q0), L, M};
}

}  // namespace dcp
