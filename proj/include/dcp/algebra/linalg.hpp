#pragma once

/**
 * @file linalg.hpp
 * @brief Dense matrices over a word-size prime field and their kernels.
 */

#include "dcp/algebra/number.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dcp {

struct ModMatrix {
    std::size_t rows = 0, cols = 0;
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> a;  // row-major

    ModMatrix() = default;
    ModMatrix(std::size_t r, std::size_t c, std::uint64_t q) : rows(r), cols(c), prime(q), a(r * c, 0) {}
    std::uint64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static ModMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows_in, std::uint64_t q) {
        if (rows_in.empty() || rows_in[0].empty()) throw std::invalid_argument("matrix dimensions must be >= 1");
        ModMatrix m(rows_in.size(), rows_in[0].size(), q);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (rows_in[i].size() != m.cols) throw std::invalid_argument("ragged matrix");
            for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows_in[i][j] % q;
        }
        return m;
    }
};

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref_mod(ModMatrix& m) {
    const std::uint64_t q = m.prime;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        std::uint64_t inv = modp::inv(m(r, c), q);
        std::uint64_t* row_r = &m.a[r * m.cols];
        for (std::size_t j = c; j < m.cols; ++j) row_r[j] = row_r[j] * inv % q;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            std::uint64_t* row_i = &m.a[i * m.cols];
            std::uint64_t f = row_i[c];
            if (f == 0) continue;
            std::uint64_t nf = q - f;
            for (std::size_t j = c; j < m.cols; ++j)
                if (row_r[j]) row_i[j] = (row_i[j] + nf * row_r[j]) % q;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Kernel basis: one vector per free column, with 1 at that column and 0 at the other free columns.
inline std::vector<std::vector<std::uint64_t>> nullspace_mod(ModMatrix m) {
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("matrix dimensions must be >= 1");
    if (!is_prime_u64(m.prime)) throw std::invalid_argument("modulus is not prime");
    if (m.prime >= (1ull << 32)) throw std::invalid_argument("modulus must be below 2^32");
    const std::uint64_t q = m.prime;
    auto pivots = rref_mod(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint64_t> v(m.cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = modp::neg(m(i, f), q);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dcp
