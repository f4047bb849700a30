#pragma once

/**
 * @file verify.hpp
 * @brief Annihilation checks for the decomposition of the order-4 operator into L2 * LS and LR.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/factory/closed_form.hpp"
#include "dcp/factory/cr_search.hpp"
#include "dcp/factory/operators.hpp"
#include "dcp/ode/compose.hpp"
#include "dcp/ode/operator.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

struct IdentityCheck {
    std::string name;
    bool passed = false;
    int verified_order = -1;
    std::string note;
};

struct FactorizationReport {
    Rat r;
    int series_order = 0;
    std::optional<Rat> c;  // multiple of the rational solution removed in the last check
    std::vector<IdentityCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
    std::vector<std::string> failing() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.passed) out.push_back(c.name);
        return out;
    }
};

inline IdentityCheck annihilation_check(const std::string& name, const DiffOperator& op, const RatSeries& s) {
    Residual res = apply_operator(op, s);
    IdentityCheck c{name, res.zero(), res.verified_order, {}};
    if (!c.passed)
        for (std::size_t i = 0; i < res.values.coeffs.size(); ++i)
            if (sgn(res.values.coeffs[i]) != 0) {
                c.note = "first nonzero residual at p^" + std::to_string(i);
                break;
            }
    return c;
}

// Solutions with a p^{-2} pole are checked through p^2 * f and the operator conjugated by p^2. The last check
// needs c, the multiple of R (as built by closed_form_R(r)) that cr_search reports; without it the check fails.
inline FactorizationReport verify_factorization(const Rat& r, const DiffOperator& L4, const RatSeries& physical,
                                                std::optional<Rat> c) {
    if (r == 2) throw std::invalid_argument("r = 2 has a third-order operator; the decomposition does not apply");
    FactorizationReport rep;
    rep.r = r;
    rep.series_order = physical.order();
    rep.c = c;
    const int N = physical.order();
    ClosedForm S = closed_form_S(r), R = closed_form_R(r);
    RatSeries s2 = S.shifted_series(N), r2 = R.shifted_series(N);
    DiffOperator LS = first_order_annihilator(S), LR = first_order_annihilator(R);
    DiffOperator L2LS = compose(appendix_L2(r), LS);
    DiffOperator L2LS_shift = shift_solutions(L2LS, 2);
    DiffOperator L4_shift = shift_solutions(L4, 2);

    rep.checks.push_back(annihilation_check("LR annihilates R", shift_solutions(LR, 2), r2));
    rep.checks.push_back(annihilation_check("LS annihilates S", shift_solutions(LS, 2), s2));
    rep.checks.push_back(annihilation_check("L2*LS annihilates S", L2LS_shift, s2));

    IdentityCheck l4{"L4 annihilates S, R and the physical series", true, N, {}};
    for (const auto& sub : {annihilation_check("S", L4_shift, s2), annihilation_check("R", L4_shift, r2),
                            annihilation_check("physical", L4, physical)}) {
        l4.verified_order = std::min(l4.verified_order, sub.verified_order);
        if (!sub.passed) {
            l4.passed = false;
            l4.note += (l4.note.empty() ? "" : "; ") + sub.name + ": " + sub.note;
        }
    }
    rep.checks.push_back(l4);

    if (c) {
        RatSeries g = shift_by_p2(physical);
        for (int i = 0; i <= N; ++i) g.coeffs[static_cast<std::size_t>(i)] -= *c * r2.coeffs[static_cast<std::size_t>(i)];
        rep.checks.push_back(annihilation_check("L2*LS annihilates G_r", L2LS_shift, g));
    } else {
        rep.checks.push_back({"L2*LS annihilates G_r", false, -1, "no c_r available"});
    }
    return rep;
}

}  // namespace dcp
