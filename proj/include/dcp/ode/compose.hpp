#pragma once

/**
 * @file compose.hpp
 * @brief Operator product A * B (apply B, then A) by the Leibniz rule.
 */

#include "dcp/algebra/poly.hpp"
#include "dcp/ode/operator.hpp"

#include <stdexcept>
#include <vector>

namespace dcp {

// D^i (b D^j) = sum_l C(i,l) b^(l) D^(i+j-l)
inline DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    a.validate();
    b.validate();
    if (!a.homogeneous() || !b.homogeneous()) throw std::invalid_argument("compose expects homogeneous operators");
    const int ka = a.order(), kb = b.order();
    std::vector<IntPoly> out(static_cast<std::size_t>(ka + kb + 1));
    for (int j = 0; j <= kb; ++j) {
        IntPoly deriv = b.coeffs[static_cast<std::size_t>(j)];
        for (int l = 0; l <= ka; ++l) {
            if (deriv.is_zero()) break;
            for (int i = l; i <= ka; ++i) {
                const IntPoly& ai = a.coeffs[static_cast<std::size_t>(i)];
                if (ai.is_zero()) continue;
                Int binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(l));
                out[static_cast<std::size_t>(i + j - l)] += ai * deriv * binom;
            }
            deriv = deriv.derivative();
        }
    }
    return DiffOperator{out, std::nullopt};
}

}  // namespace dcp
