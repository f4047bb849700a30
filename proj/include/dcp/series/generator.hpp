#pragma once

/**
 * @file generator.hpp
 * @brief Mean cluster size series from the bulk / adjacent / on-wall recurrences.
 *
 * S(m,y) = m + sum over successor states of weight * S(successor), with weights
 *   bulk (y > m):   pq S(m,y+1) + pq S(m,y-1) + p^2 S(m+1,y) + q^2 S(m-1,y)
 *   adjacent (y=m): p q_w S(m,m+1) + p_w q S(m,m-1) + p p_w S(m+1,m) + q q_w S(m-1,m)
 *   on wall (y=m-1): p S(m,m) + q S(m-1,m-1)
 * where shrinking a width-1 column ends the cluster. The system is solved order by order in p:
 * a state whose p-distance from the seed is d only needs N-d coefficients, and every weight of
 * p-degree zero lowers (m, y) lexicographically, so one ascending sweep per order is a triangular solve.
 */

#include "dcp/algebra/modular.hpp"
#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/series/model.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcp {

template <class T>
bool is_zero(const Poly<T>& p) {
    return p.is_zero();
}

// Coefficient of p^n p_w^k is rows[n][k].
struct BivariateSeries {
    int order = -1;
    std::vector<IntPoly> rows;

    Int coeff(int n, int k) const {
        if (n < 0 || n > order || k < 0) return Int(0);
        return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
        return a.order == b.order && a.rows == b.rows;
    }
};

namespace detail {

enum Weight { kPQ, kP2, kQ2, kPQw, kPwQ, kPPw, kQQw, kP, kQ, kWeightCount };

struct Edge {
    Seed target;
    Weight w;
};

inline std::vector<Edge> recurrence_edges(const Seed& s) {
    const int m = s.m, y = s.y;
    std::vector<Edge> e;
    if (y > m) {
        e.push_back({Seed(m, y + 1), kPQ});
        e.push_back({Seed(m, y - 1), kPQ});
        e.push_back({Seed(m + 1, y), kP2});
        if (m > 1) e.push_back({Seed(m - 1, y), kQ2});
    } else if (y == m) {
        e.push_back({Seed(m, m + 1), kPQw});
        e.push_back({Seed(m, m - 1), kPwQ});
        e.push_back({Seed(m + 1, m), kPPw});
        if (m > 1) e.push_back({Seed(m - 1, m), kQQw});
    } else {
        e.push_back({Seed(m, m), kP});
        if (m > 1) e.push_back({Seed(m - 1, m - 1), kQ});
    }
    return e;
}

template <class C>
std::vector<C> poly_mul(const std::vector<C>& a, const std::vector<C>& b, const C& zero) {
    if (a.empty() || b.empty()) return {};
    std::vector<C> c(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

template <class C>
std::vector<C> poly_sub(const std::vector<C>& a, const std::vector<C>& b, const C& zero) {
    std::vector<C> c(std::max(a.size(), b.size()), zero);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

}  // namespace detail

// Mean size coefficients 0..N for a seed, with the wall and bulk probabilities given as polynomials in the
// grading variable (coefficients in the ring C).
template <class C>
std::vector<C> mean_size_generic(const Seed& seed, int N, const std::vector<C>& p, const std::vector<C>& pw,
                                 const C& zero, const C& one) {
    using namespace detail;
    seed.validate();
    if (N < 0) throw std::invalid_argument("series order must be >= 0");
    const std::vector<C> unit{one};
    const std::vector<C> q = poly_sub(unit, p, zero);
    const std::vector<C> qw = poly_sub(unit, pw, zero);
    std::array<std::vector<C>, kWeightCount> w;
    w[kPQ] = poly_mul(p, q, zero);
    w[kP2] = poly_mul(p, p, zero);
    w[kQ2] = poly_mul(q, q, zero);
    w[kPQw] = poly_mul(p, qw, zero);
    w[kPwQ] = poly_mul(pw, q, zero);
    w[kPPw] = poly_mul(p, pw, zero);
    w[kQQw] = poly_mul(q, qw, zero);
    w[kP] = p;
    w[kQ] = q;
    std::array<int, kWeightCount> cost{};
    for (int i = 0; i < kWeightCount; ++i) {
        cost[static_cast<std::size_t>(i)] = -1;
        const auto& v = w[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < v.size() && static_cast<int>(k) <= N; ++k)
            if (!is_zero(v[k])) {
                cost[static_cast<std::size_t>(i)] = static_cast<int>(k);
                break;
            }
    }

    // p-distance of every state reachable within order N
    std::map<Seed, int> dist;
    using Item = std::pair<int, Seed>;
    std::priority_queue<Item, std::vector<Item>, std::function<bool(const Item&, const Item&)>> pq(
        [](const Item& a, const Item& b) { return a.first > b.first; });
    dist[seed] = 0;
    pq.push({0, seed});
    while (!pq.empty()) {
        auto [d, s] = pq.top();
        pq.pop();
        if (dist[s] < d) continue;
        for (const auto& e : recurrence_edges(s)) {
            int c = cost[e.w];
            if (c < 0) continue;
            int nd = d + c;
            if (nd > N) continue;
            auto it = dist.find(e.target);
            if (it == dist.end() || nd < it->second) {
                dist[e.target] = nd;
                pq.push({nd, e.target});
            }
        }
    }

    std::vector<Seed> states;
    for (const auto& kv : dist) states.push_back(kv.first);  // std::map iterates in (m, y) order
    std::map<Seed, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
    struct Link {
        std::size_t target;
        Weight w;
    };
    std::vector<std::vector<Link>> links(states.size());
    std::vector<int> budget(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        budget[i] = N - dist[states[i]];
        for (const auto& e : recurrence_edges(states[i])) {
            if (cost[e.w] < 0) continue;
            auto it = index.find(e.target);
            if (it != index.end()) links[i].push_back({it->second, e.w});
        }
    }

    std::vector<std::vector<C>> val(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) val[i].assign(static_cast<std::size_t>(budget[i] + 1), zero);
    for (int n = 0; n <= N; ++n) {
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (n > budget[i]) continue;
            C acc = zero;
            if (n == 0)
                for (int k = 0; k < states[i].m; ++k) acc += one;
            for (const auto& l : links[i]) {
                const auto& wt = w[l.w];
                const auto& tv = val[l.target];
                for (int k = cost[l.w]; k <= n && k < static_cast<int>(wt.size()); ++k) {
                    int j = n - k;
                    if (j >= static_cast<int>(tv.size())) continue;
                    if (is_zero(wt[static_cast<std::size_t>(k)])) continue;
                    acc += wt[static_cast<std::size_t>(k)] * tv[static_cast<std::size_t>(j)];
                }
            }
            val[i][static_cast<std::size_t>(n)] = acc;
        }
    }
    return val[index.at(seed)];
}

inline BivariateSeries mean_size_series(const Seed& seed, int N) {
    const IntPoly zero, one(Int(1));
    std::vector<IntPoly> p{zero, one};
    std::vector<IntPoly> pw{IntPoly{Int(0), Int(1)}};
    BivariateSeries out;
    out.order = N;
    out.rows = mean_size_generic<IntPoly>(seed, N, p, pw, zero, one);
    return out;
}

// Coefficient of p^n after p_w -> r p: sum_k c(n-k, k) r^k.
inline RatSeries specialize(const BivariateSeries& s, const Rat& r) {
    std::vector<Rat> c(static_cast<std::size_t>(s.order + 1), Rat(0));
    for (int n = 0; n <= s.order; ++n) {
        Rat rk = 1;
        for (int k = 0; k <= n; ++k, rk *= r) c[static_cast<std::size_t>(n)] += Rat(s.coeff(n - k, k)) * rk;
    }
    return RatSeries(std::move(c));
}

// Exact series of S(p, r p), generated directly: with r = a/b, run the recurrences with p -> b x and
// p_w -> a x over the integers, then divide the x^n coefficient by b^n.
inline RatSeries mean_size_specialized(const Seed& seed, const Rat& r, int N) {
    const Int a = r.get_num(), b = r.get_den();
    std::vector<Int> p{Int(0), b};
    std::vector<Int> pw{Int(0), a};
    auto raw = mean_size_generic<Int>(seed, N, p, pw, Int(0), Int(1));
    std::vector<Rat> c;
    Int bn = 1;
    for (const auto& v : raw) {
        c.push_back(make_rat(v, bn));
        bn *= b;
    }
    return RatSeries(std::move(c));
}

// Series in p with the wall probability held at a constant value.
inline RatSeries mean_size_fixed_wall(const Seed& seed, const Rat& pw_value, int N) {
    std::vector<Rat> p{Rat(0), Rat(1)};
    std::vector<Rat> pw{pw_value};
    return RatSeries(mean_size_generic<Rat>(seed, N, p, pw, Rat(0), Rat(1)));
}

inline ModSeries specialize_mod(const Seed& seed, const Rat& r, int N, std::uint64_t prime) {
    if (!is_prime_u64(prime) || prime < 3 || prime >= (1ull << 31))
        throw std::invalid_argument("modulus must be an odd prime below 2^31");
    if (modp::reduce(r.get_den(), prime) == 0) throw std::domain_error("denominator of r vanishes modulo prime");
    const Fp zero(0, prime), one(1, prime);
    const Fp rr(modp::reduce(r, prime), prime);
    std::vector<Fp> p{zero, one};
    std::vector<Fp> pw{zero, rr};
    auto raw = mean_size_generic<Fp>(seed, N, p, pw, zero, one);
    ModSeries out{prime, {}};
    for (const auto& v : raw) out.coeffs.push_back(v.v);
    return out;
}

}  // namespace dcp
