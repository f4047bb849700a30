#pragma once

/**
 * @file report.hpp
 * @brief Named singular points of the damp-wall operators and comparison of their exponents with a table.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/known_results.hpp"
#include "dcp/ode/operator.hpp"
#include "dcp/singularity/indicial.hpp"
#include "dcp/singularity/points.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

// "0", "inf", "1/r", "1-1/r", "sqrt2" (both roots of 4p^2-4p-1), "P4" (all roots of P_4), or an exact rational.
inline std::vector<SingularPoint> resolve_points(const std::string& name, const Rat& r) {
    if (name == "inf" || name == "infinity") return {SingularPoint::infinity()};
    if (name == "sqrt2") {
        std::vector<SingularPoint> out;
        for (const auto& z : complex_roots(sqrt2_quadratic()))
            out.push_back(SingularPoint::algebraic(sqrt2_quadratic(), z, z.re > 0 ? "(1+sqrt2)/2" : "(1-sqrt2)/2"));
        return out;
    }
    if (name == "1/r" || name == "1-1/r") {
        if (sgn(r) == 0) throw std::invalid_argument(name + " needs r != 0");
        return {SingularPoint::rational(name == "1/r" ? Rat(1 / r) : Rat(1 - 1 / r), name)};
    }
    if (name == "P4") {
        std::vector<SingularPoint> out;
        int idx = 0;
        for (const auto& piece : p4_pieces(r)) {
            auto rr = rational_roots(piece);
            for (const auto& root : rr) out.push_back(SingularPoint::rational(root.value, "P4 root " + std::to_string(++idx)));
            if (!rr.empty()) continue;
            for (const auto& z : complex_roots(piece))
                out.push_back(SingularPoint::algebraic(piece, z, "P4 root " + std::to_string(++idx)));
        }
        return out;
    }
    return {SingularPoint::rational(parse_rational(name), name)};
}

inline std::string exponent_list(const ExponentSet& e) {
    if (!e.regular) return "IRREGULAR";
    std::string s;
    for (std::size_t i = 0; i < e.exponents.size(); ++i) s += (i ? ", " : "") + e.exponents[i].str();
    return s;
}

// Exact comparison where the exponent is exact, otherwise within tol on the real part with a negligible
// imaginary part. Both lists are sorted ascending.
inline bool exponents_match(const ExponentSet& e, const std::vector<Rat>& expected, double tol) {
    if (!e.regular || e.exponents.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const Exponent& x = e.exponents[i];
        if (x.exact) {
            if (x.value != expected[i]) return false;
            continue;
        }
        if (std::abs(x.approx.re.convert_to<double>() - expected[i].get_d()) > tol) return false;
        if (std::abs(x.approx.im.convert_to<double>()) > tol) return false;
    }
    return true;
}

struct ExponentTableRow {
    std::string point;
    std::vector<Rat> expected;
    std::vector<ExponentSet> computed;  // one entry per root of the named point
    bool match = false;
};

// Computes the exponents of op at every point of the generic table that exists for this r and compares.
inline std::vector<ExponentTableRow> compare_exponent_table(const DiffOperator& op, const Rat& r, double tol = 1e-6) {
    std::vector<ExponentTableRow> rows;
    for (const auto& row : known::q4_exponent_table()) {
        ExponentTableRow out{row.point, row.exponents, {}, true};
        for (const auto& pt : resolve_points(row.point, r)) {
            out.computed.push_back(indicial_exponents(op, pt));
            out.match = out.match && exponents_match(out.computed.back(), row.exponents, tol);
        }
        out.match = out.match && !out.computed.empty();
        rows.push_back(std::move(out));
    }
    return rows;
}

}  // namespace dcp
