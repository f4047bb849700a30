#pragma once

/**
 * @file structural.hpp
 * @brief Head polynomial of an operator and its split into r-dependent structural factors and a cofactor.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/poly_tools.hpp"
#include "dcp/ode/operator.hpp"
#include "dcp/singularity/points.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

inline IntPoly head_polynomial(const DiffOperator& op) {
    op.validate();
    return op.head();
}

struct StructuralCandidate {
    std::string name;
    IntPoly factor;  // primitive, positive leading coefficient
    int expected = 1;
};

// (1-2p)^4, (1-p), (1+4p-4p^2), (1-rp), (r-1-rp), P_4(p,rp); denominators of r cleared.
inline std::vector<StructuralCandidate> structural_candidates(const Rat& r) {
    return {
        {"(1-2p)^4", IntPoly{Int(-1), Int(2)}, 4},
        {"(1-p)", IntPoly{Int(-1), Int(1)}, 1},
        {"(1+4p-4p^2)", sqrt2_quadratic(), 1},
        {"(1-rp)", rp_linear(r), 1},
        {"(r-1-rp)", rp_shifted(r), 1},
        {"P_4(p,rp)", primitive_part(p4_polynomial(r)), 1},
    };
}

struct MatchedFactor {
    std::string name;
    IntPoly factor;
    int expected = 0;
    int found = 0;
    bool coalesced = false;  // shares a root with an earlier candidate
};

struct StructuralReport {
    int origin_power = 0;  // the p^e stripped before matching
    std::vector<MatchedFactor> factors;
    IntPoly cofactor;      // apparent-singularity polynomial
    std::vector<std::string> missing;    // candidates that failed to divide as expected
    std::vector<std::string> coalesced;  // candidates overlapping earlier ones

    bool all_divide() const { return missing.empty(); }
    IntPoly structural_part() const {
        IntPoly out = IntPoly::monomial(Int(1), static_cast<std::size_t>(origin_power));
        for (const auto& f : factors) out = out * f.factor.pow(static_cast<unsigned>(f.found));
        return out;
    }
    // p^e * prod(factor^found) * cofactor
    IntPoly product() const { return structural_part() * cofactor; }
};

// Divides out each candidate up to its expected multiplicity. A candidate that shares a root with an earlier
// one is marked coalesced and does not count as missing; a P_4 that splits is matched piece by piece.
inline StructuralReport structural_factors(const IntPoly& head, const Rat& r) {
    if (sgn(r) == 0 || r == 1) throw std::invalid_argument("structural factors need r not in {0, 1}");
    if (head.is_zero()) throw std::invalid_argument("zero head polynomial");
    StructuralReport rep;
    rep.origin_power = head.valuation();
    IntPoly rest(std::vector<Int>(head.coeffs().begin() + rep.origin_power, head.coeffs().end()));
    std::vector<IntPoly> seen;
    auto overlaps = [&](const IntPoly& f) {
        for (const auto& g : seen)
            if (gcd(f, g).degree() > 0) return true;
        return false;
    };
    auto match = [&](const std::string& name, const IntPoly& f, int expected) {
        MatchedFactor m{name, f, expected, 0, overlaps(f)};
        IntPoly q;
        while (m.found < expected && divides_exact(rest, f, &q)) {
            rest = q;
            ++m.found;
        }
        if (m.coalesced) rep.coalesced.push_back(name);
        else if (m.found < expected) rep.missing.push_back(name);
        seen.push_back(f);
        rep.factors.push_back(std::move(m));
    };
    for (const auto& c : structural_candidates(r)) {
        if (c.name == "P_4(p,rp)") {
            auto pieces = p4_pieces(r);
            if (pieces.size() > 1) {
                for (std::size_t i = 0; i < pieces.size(); ++i)
                    match(c.name + "[" + std::to_string(i + 1) + "]", pieces[i], 1);
                continue;
            }
        }
        match(c.name, c.factor, c.expected);
    }
    rep.cofactor = rest;
    return rep;
}

}  // namespace dcp
