#pragma once

/**
 * @file growth.hpp
 * @brief Site-level compact growth rule: one column to the next, with its probability monomial.
 */

#include "dcp/series/model.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

// p^p q^q p_w^pw q_w^qw
struct Monomial {
    int p = 0, q = 0, pw = 0, qw = 0;

    Monomial& operator*=(const Monomial& o) {
        p += o.p;
        q += o.q;
        pw += o.pw;
        qw += o.qw;
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.p == b.p && a.q == b.q && a.pw == b.pw && a.qw == b.qw;
    }
    std::string str() const {
        std::ostringstream os;
        auto put = [&](const char* name, int e) {
            if (e == 0) return;
            if (os.tellp() > 0) os << ' ';
            os << name;
            if (e > 1) os << '^' << e;
        };
        put("p", p);
        put("q", q);
        put("p_w", pw);
        put("q_w", qw);
        return os.tellp() > 0 ? os.str() : "1";
    }
};

struct GrowthStep {
    Column next;
    Monomial weight;
};

// All successors of a nonempty column. A new site is wet with certainty when both diagonal predecessors are
// wet; with one wet predecessor it is wet with probability p in the bulk and p_w on the wall row.
inline std::vector<GrowthStep> successors(const Column& col) {
    if (col.empty()) throw std::invalid_argument("empty column has no successors");
    struct Site {
        int x;
        bool certain;
    };
    std::vector<Site> sites;
    for (int x = col.lo - 1; x <= col.hi + 1; x += 2) {
        if (x < 1) continue;
        bool below = x - 1 >= col.lo && x - 1 <= col.hi;
        bool above = x + 1 >= col.lo && x + 1 <= col.hi;
        sites.push_back({x, below && above});
    }
    std::vector<std::size_t> uncertain;
    for (std::size_t i = 0; i < sites.size(); ++i)
        if (!sites[i].certain) uncertain.push_back(i);
    std::vector<GrowthStep> out;
    for (unsigned mask = 0; mask < (1u << uncertain.size()); ++mask) {
        Monomial w;
        std::vector<bool> wet(sites.size(), true);
        for (std::size_t b = 0; b < uncertain.size(); ++b) {
            bool is_wet = (mask >> b) & 1u;
            std::size_t i = uncertain[b];
            wet[i] = is_wet;
            bool wall = sites[i].x == 1;
            if (is_wet)
                ++(wall ? w.pw : w.p);
            else
                ++(wall ? w.qw : w.q);
        }
        Column next{1, 0};
        bool any = false;
        for (std::size_t i = 0; i < sites.size(); ++i) {
            if (!wet[i]) continue;
            if (!any) next.lo = sites[i].x;
            next.hi = sites[i].x;
            any = true;
        }
        out.push_back({any ? next : Column{1, 0}, w});
    }
    return out;
}

// Product of per-column transition probabilities along a history; the last column may be empty.
inline Monomial history_weight(const std::vector<Column>& history) {
    if (history.empty()) throw std::invalid_argument("empty history");
    Monomial total;
    for (std::size_t t = 0; t + 1 < history.size(); ++t) {
        if (history[t].empty()) throw std::invalid_argument("history continues after an empty column");
        bool matched = false;
        for (const auto& s : successors(history[t])) {
            if (s.next == history[t + 1]) {
                total *= s.weight;
                matched = true;
                break;
            }
        }
        if (!matched) throw std::invalid_argument("columns " + std::to_string(t) + " and " + std::to_string(t + 1) +
                                                  " are not related by compact growth");
    }
    return total;
}

}  // namespace dcp
