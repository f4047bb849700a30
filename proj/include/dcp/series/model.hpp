#pragma once

/**
 * @file model.hpp
 * @brief Seeds and the column geometry of compact clusters next to a damp wall.
 *
 * A column of width m with midpoint y occupies lattice rows lo, lo+2, ..., hi with
 * lo = 1 + y - (m - 1) and hi = 1 + y + (m - 1); row 1 is the wall.
 */

#include <stdexcept>
#include <string>

namespace dcp {

struct Seed {
    int m = 1;
    int y = 1;

    Seed() = default;
    Seed(int width, int height) : m(width), y(height) { validate(); }

    void validate() const {
        if (m < 1) throw std::invalid_argument("seed width must be >= 1, got " + std::to_string(m));
        if (y < m - 1)
            throw std::invalid_argument("seed midpoint must satisfy y >= m-1, got m=" + std::to_string(m) +
                                        " y=" + std::to_string(y));
    }
    bool on_wall() const { return y == m - 1; }
    bool adjacent() const { return y == m; }
    bool bulk() const { return y > m; }
    friend bool operator==(const Seed& a, const Seed& b) { return a.m == b.m && a.y == b.y; }
    friend bool operator<(const Seed& a, const Seed& b) { return a.m != b.m ? a.m < b.m : a.y < b.y; }
};

struct Column {
    int lo = 0, hi = -1;  // empty when lo > hi

    static Column of(const Seed& s) { return {1 + s.y - (s.m - 1), 1 + s.y + (s.m - 1)}; }
    bool empty() const { return lo > hi; }
    int width() const { return empty() ? 0 : (hi - lo) / 2 + 1; }
    Seed seed() const { return Seed(width(), (lo + hi) / 2 - 1); }
    friend bool operator==(const Column& a, const Column& b) {
        return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
    }
};

}  // namespace dcp
