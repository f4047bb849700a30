#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series: exact rational (RatSeries) and prime-field (ModSeries).
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dcp {

// Coefficients 0..order inclusive.
struct RatSeries {
    std::vector<Rat> coeffs;

    RatSeries() = default;
    explicit RatSeries(std::vector<Rat> c) : coeffs(std::move(c)) {}
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rat& operator[](std::size_t i) const { return coeffs.at(i); }
    friend bool operator==(const RatSeries& a, const RatSeries& b) { return a.coeffs == b.coeffs; }

    RatSeries truncate(int order) const {
        std::vector<Rat> c(coeffs.begin(), coeffs.begin() + std::min<long>(order + 1, static_cast<long>(coeffs.size())));
        return RatSeries(std::move(c));
    }
};

struct ModSeries {
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline ModSeries reduce(const RatSeries& s, std::uint64_t q) {
    ModSeries m{q, {}};
    m.coeffs.reserve(s.coeffs.size());
    for (const auto& c : s.coeffs) m.coeffs.push_back(modp::reduce(c, q));
    return m;
}

inline RatSeries series_of(const RatPoly& p, int order) {
    std::vector<Rat> c(static_cast<std::size_t>(order + 1), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p[i];
    return RatSeries(std::move(c));
}

inline RatSeries mul(const RatSeries& a, const RatSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rat> c(static_cast<std::size_t>(n + 1), Rat(0));
    for (int i = 0; i <= n; ++i) {
        if (sgn(a.coeffs[static_cast<std::size_t>(i)]) == 0) continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
    }
    return RatSeries(std::move(c));
}

inline RatSeries inverse(const RatSeries& a) {
    if (a.coeffs.empty() || sgn(a.coeffs[0]) == 0) throw std::domain_error("series not invertible");
    const std::size_t n = a.coeffs.size();
    std::vector<Rat> b(n, Rat(0));
    Rat inv0 = 1 / a.coeffs[0];
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rat acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += a.coeffs[i] * b[k - i];
        b[k] = -acc * inv0;
    }
    return RatSeries(std::move(b));
}

// Series of num/den to the given order; den(0) must be nonzero.
inline RatSeries rational_series(const RatPoly& num, const RatPoly& den, int order) {
    return mul(series_of(num, order), inverse(series_of(den, order)));
}

inline RatSeries derivative(const RatSeries& a) {
    if (a.coeffs.size() <= 1) return RatSeries();
    std::vector<Rat> c(a.coeffs.size() - 1);
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) c[i - 1] = a.coeffs[i] * Rat(static_cast<long>(i));
    return RatSeries(std::move(c));
}

// Square root of a series with a[0] a nonzero rational square; result has positive constant term.
inline RatSeries sqrt_series(const RatSeries& a) {
    if (a.coeffs.empty()) return a;
    const Rat& a0 = a.coeffs[0];
    if (sgn(a0) <= 0 || !mpz_perfect_square_p(a0.get_num_mpz_t()) || !mpz_perfect_square_p(a0.get_den_mpz_t()))
        throw std::domain_error("constant term is not a positive rational square");
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), a0.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), a0.get_den_mpz_t());
    const std::size_t len = a.coeffs.size();
    std::vector<Rat> b(len, Rat(0));
    b[0] = make_rat(n, d);
    Rat inv2b0 = 1 / (2 * b[0]);
    for (std::size_t k = 1; k < len; ++k) {
        Rat acc = a.coeffs[k];
        for (std::size_t i = 1; i < k; ++i) acc -= b[i] * b[k - i];
        b[k] = acc * inv2b0;
    }
    return RatSeries(std::move(b));
}

}  // namespace dcp
