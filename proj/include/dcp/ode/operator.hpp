#pragma once

/**
 * @file operator.hpp
 * @brief Linear differential operators with polynomial coefficients, in D = d/dp and theta = p d/dp forms.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/series.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dcp {

// sum_j Q_j(p) D^j, optionally equal to a polynomial right-hand side.
struct DiffOperator {
    std::vector<IntPoly> coeffs;  // Q_0 .. Q_k
    std::optional<IntPoly> rhs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const IntPoly& head() const { return coeffs.back(); }
    int degree() const {
        int d = -1;
        for (const auto& c : coeffs) d = std::max(d, c.degree());
        return d;
    }
    bool homogeneous() const { return !rhs || rhs->is_zero(); }
    void validate() const {
        if (coeffs.empty() || coeffs.back().is_zero()) throw std::invalid_argument("operator head must be nonzero");
    }
    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        auto rhs_of = [](const DiffOperator& o) { return o.rhs ? *o.rhs : IntPoly{}; };
        return a.coeffs == b.coeffs && rhs_of(a) == rhs_of(b);
    }
};

// sum_j P_j(p) theta^j.
struct ThetaOperator {
    std::vector<IntPoly> coeffs;
    std::optional<IntPoly> rhs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    int degree() const {
        int d = -1;
        for (const auto& c : coeffs) d = std::max(d, c.degree());
        return d;
    }
};

namespace detail {

// S(n, k), Stirling numbers of the second kind: theta^n = sum_k S(n,k) p^k D^k.
inline std::vector<std::vector<Int>> stirling2(int n) {
    std::vector<std::vector<Int>> s(static_cast<std::size_t>(n + 1), std::vector<Int>(static_cast<std::size_t>(n + 1), Int(0)));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                k * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] +
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
    return s;
}

// Signed Stirling numbers of the first kind: x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
inline std::vector<std::vector<Int>> stirling1(int n) {
    std::vector<std::vector<Int>> s(static_cast<std::size_t>(n + 1), std::vector<Int>(static_cast<std::size_t>(n + 1), Int(0)));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                (i - 1) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
    return s;
}

}  // namespace detail

// Divides out the content of all coefficients (and rhs), a common power of p, and fixes the sign so that the
// lowest-degree nonzero coefficient of the head is positive.
inline DiffOperator normalize(DiffOperator op) {
    op.validate();
    int common_val = op.head().valuation();
    Int g = 0;
    auto absorb = [&](const IntPoly& c) {
        if (c.is_zero()) return;
        common_val = std::min(common_val, c.valuation());
        Int cc = content(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
    };
    for (const auto& c : op.coeffs) absorb(c);
    if (op.rhs) absorb(*op.rhs);
    const IntPoly& h = op.head();
    if (sgn(h[static_cast<std::size_t>(h.valuation())]) < 0) g = -g;
    auto fix = [&](IntPoly& c) {
        if (c.is_zero()) return;
        std::vector<Int> v(c.coeffs().begin() + common_val, c.coeffs().end());
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        c = IntPoly(std::move(v));
    };
    for (auto& c : op.coeffs) fix(c);
    if (op.rhs) {
        fix(*op.rhs);
        if (op.rhs->is_zero()) op.rhs.reset();
    }
    return op;
}

inline DiffOperator to_d_form(const ThetaOperator& t) {
    const int k = t.order();
    if (k < 0) throw std::invalid_argument("empty operator");
    auto s2 = detail::stirling2(k);
    DiffOperator op;
    op.coeffs.assign(static_cast<std::size_t>(k + 1), IntPoly{});
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i) {
            const Int& s = s2[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (sgn(s) == 0) continue;
            op.coeffs[static_cast<std::size_t>(i)] += (t.coeffs[static_cast<std::size_t>(j)] * s).shift_up(static_cast<std::size_t>(i));
        }
    op.rhs = t.rhs;
    return op;
}

// theta form of p^k * L (k = order); right-hand side is multiplied by p^k as well.
inline ThetaOperator to_theta_form(const DiffOperator& op) {
    const int k = op.order();
    auto s1 = detail::stirling1(k);
    ThetaOperator t;
    t.coeffs.assign(static_cast<std::size_t>(k + 1), IntPoly{});
    for (int i = 0; i <= k; ++i) {
        IntPoly lifted = op.coeffs[static_cast<std::size_t>(i)].shift_up(static_cast<std::size_t>(k - i));
        for (int j = 0; j <= i; ++j) {
            const Int& s = s1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (sgn(s) != 0) t.coeffs[static_cast<std::size_t>(j)] += lifted * s;
        }
    }
    if (op.rhs) t.rhs = op.rhs->shift_up(static_cast<std::size_t>(k));
    return t;
}

struct Residual {
    RatSeries values;        // coefficients 0 .. verified_order of L(s) - rhs
    int verified_order = -1;  // -1: series too short to verify anything
    bool zero() const {
        return verified_order >= 0 &&
               std::all_of(values.coeffs.begin(), values.coeffs.end(), [](const Rat& c) { return sgn(c) == 0; });
    }
};

struct ModResidual {
    ModSeries values;
    int verified_order = -1;
    bool zero() const {
        return verified_order >= 0 &&
               std::all_of(values.coeffs.begin(), values.coeffs.end(), [](std::uint64_t c) { return c == 0; });
    }
};

// Residual L(s) - rhs through order N - k - deg(L), the range the spec pins as verifiable.
inline Residual apply_operator(const DiffOperator& op, const RatSeries& s) {
    op.validate();
    const int N = s.order(), k = op.order();
    Residual res;
    res.verified_order = N - k - std::max(op.degree(), op.rhs ? op.rhs->degree() : -1);
    if (res.verified_order < 0) {
        res.verified_order = -1;
        return res;
    }
    const int V = res.verified_order;
    std::vector<Rat> out(static_cast<std::size_t>(V + 1), Rat(0));
    for (int j = 0; j <= k; ++j) {
        // j-th derivative coefficients
        std::vector<Rat> dj(static_cast<std::size_t>(N - j + 1));
        for (int t = 0; t + j <= N; ++t) {
            Int f = 1;
            for (int u = 1; u <= j; ++u) f *= t + u;
            dj[static_cast<std::size_t>(t)] = s.coeffs[static_cast<std::size_t>(t + j)] * Rat(f);
        }
        const IntPoly& Q = op.coeffs[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < Q.size(); ++i) {
            if (sgn(Q[i]) == 0) continue;
            Rat qi(Q[i]);
            for (int t = static_cast<int>(i); t <= V; ++t) out[static_cast<std::size_t>(t)] += qi * dj[static_cast<std::size_t>(t) - i];
        }
    }
    if (op.rhs)
        for (int t = 0; t <= V; ++t) out[static_cast<std::size_t>(t)] -= Rat((*op.rhs)[static_cast<std::size_t>(t)]);
    res.values = RatSeries(std::move(out));
    return res;
}

inline ModResidual apply_operator(const DiffOperator& op, const ModSeries& s) {
    op.validate();
    const std::uint64_t q = s.prime;
    const int N = s.order(), k = op.order();
    ModResidual res;
    res.values.prime = q;
    res.verified_order = N - k - std::max(op.degree(), op.rhs ? op.rhs->degree() : -1);
    if (res.verified_order < 0) {
        res.verified_order = -1;
        return res;
    }
    const int V = res.verified_order;
    std::vector<std::uint64_t> out(static_cast<std::size_t>(V + 1), 0);
    for (int j = 0; j <= k; ++j) {
        std::vector<std::uint64_t> dj(static_cast<std::size_t>(N - j + 1));
        for (int t = 0; t + j <= N; ++t) {
            std::uint64_t f = 1;
            for (int u = 1; u <= j; ++u) f = modp::mul(f, static_cast<std::uint64_t>(t + u) % q, q);
            dj[static_cast<std::size_t>(t)] = modp::mul(s.coeffs[static_cast<std::size_t>(t + j)], f, q);
        }
        const IntPoly& Q = op.coeffs[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < Q.size(); ++i) {
            std::uint64_t qi = modp::reduce(Q[i], q);
            if (qi == 0) continue;
            for (int t = static_cast<int>(i); t <= V; ++t)
                out[static_cast<std::size_t>(t)] =
                    modp::add(out[static_cast<std::size_t>(t)], modp::mul(qi, dj[static_cast<std::size_t>(t) - i], q), q);
        }
    }
    if (op.rhs)
        for (int t = 0; t <= V; ++t)
            out[static_cast<std::size_t>(t)] =
                modp::sub(out[static_cast<std::size_t>(t)], modp::reduce((*op.rhs)[static_cast<std::size_t>(t)], q), q);
    res.values.coeffs = std::move(out);
    return res;
}

}  // namespace dcp
