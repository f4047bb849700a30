#pragma once

/**
 * @file enumeration.hpp
 * @brief Brute-force mean size by depth-first enumeration of cluster histories.
 *
 * Every complete history contributes (total size) * p^a q^b p_w^c q_w^d. Branches whose p-exponent
 * exceeds the order are pruned; q and q_w are expanded only at the end.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/series/generator.hpp"
#include "dcp/series/growth.hpp"
#include "dcp/series/model.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace dcp {

namespace detail {

struct EnumState {
    int order;
    std::map<std::tuple<int, int, int, int>, Int> acc;  // (a, b, c, d) -> sum of sizes

    void visit(const Column& col, const Monomial& w, long size) {
        for (const auto& step : successors(col)) {
            Monomial nw = w * step.weight;
            if (nw.p > order) continue;
            if (step.next.empty()) {
                acc[{nw.p, nw.q, nw.pw, nw.qw}] += size;
                continue;
            }
            visit(step.next, nw, size + step.next.width());
        }
    }
};

inline Int binomial(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace detail

inline BivariateSeries mean_size_enum(const Seed& seed, int N) {
    seed.validate();
    if (N < 0) throw std::invalid_argument("series order must be >= 0");
    detail::EnumState st{N, {}};
    Column c0 = Column::of(seed);
    st.visit(c0, Monomial{}, c0.width());
    // expand q = 1 - p and q_w = 1 - p_w
    std::vector<std::vector<Int>> grid(static_cast<std::size_t>(N + 1));
    for (const auto& [key, size] : st.acc) {
        auto [a, b, c, d] = key;
        for (int i = 0; a + i <= N && i <= b; ++i) {
            Int cb = detail::binomial(b, i) * size;
            if (i % 2) cb = -cb;
            auto& row = grid[static_cast<std::size_t>(a + i)];
            if (row.size() < static_cast<std::size_t>(c + d + 1)) row.resize(static_cast<std::size_t>(c + d + 1), Int(0));
            for (int j = 0; j <= d; ++j) {
                Int v = cb * detail::binomial(d, j);
                if (j % 2) v = -v;
                row[static_cast<std::size_t>(c + j)] += v;
            }
        }
    }
    BivariateSeries out;
    out.order = N;
    for (auto& row : grid) out.rows.emplace_back(std::move(row));
    return out;
}

}  // namespace dcp
