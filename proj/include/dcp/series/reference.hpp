#pragma once

/**
 * @file reference.hpp
 * @brief Closed-form mean sizes for the bulk, wet-wall and dry-wall cases in the low-density region.
 *
 *   bulk:  S_m = m/(1-2p) * ((1-p)^2/(1-2p) + (m-1)/2)
 *   wet:   2 S_m = (m - 2p(1-p))/(1-2p)^2 + (2m^2 - m)/(1-2p)
 *   dry:   S_{m,y} = S_m^bulk - m p^2/(1-2p)^2 * (p/(1-p))^(y-m-1)
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/series.hpp"

#include <stdexcept>
#include <string>

namespace dcp {

// num/den with den(0) != 0.
struct RationalFunction {
    RatPoly num;
    RatPoly den;

    Rat value(const Rat& p) const {
        Rat d = den.eval(p);
        if (sgn(d) == 0) throw std::domain_error("rational function has a pole at the requested point");
        return num.eval(p) / d;
    }
    RatSeries series(int order) const { return rational_series(num, den, order); }
};

enum class ReferenceCase { kBulk, kWet, kDry };

inline ReferenceCase parse_reference_case(const std::string& name) {
    if (name == "bulk") return ReferenceCase::kBulk;
    if (name == "wet") return ReferenceCase::kWet;
    if (name == "dry") return ReferenceCase::kDry;
    throw std::invalid_argument("unknown closed form '" + name + "' (expected bulk, wet or dry)");
}

namespace detail {

inline const RatPoly& one_minus_2p() {
    static const RatPoly f{Rat(1), Rat(-2)};
    return f;
}
inline const RatPoly& one_minus_p() {
    static const RatPoly f{Rat(1), Rat(-1)};
    return f;
}

inline void require_width(int m) {
    if (m < 1) throw std::invalid_argument("seed width must be >= 1");
}

inline RationalFunction sum(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

inline RationalFunction cancel(RationalFunction f) {
    while (f.den.degree() > 0 && sgn(f.num.eval(Rat(1, 2))) == 0 && sgn(f.den.eval(Rat(1, 2))) == 0) {
        f.num = divmod(f.num, one_minus_2p()).first;
        f.den = divmod(f.den, one_minus_2p()).first;
    }
    return f;
}

}  // namespace detail

inline RationalFunction bulk_mean_size(int m) {
    detail::require_width(m);
    const Rat M(m);
    RatPoly num = detail::one_minus_p().pow(2) * M + detail::one_minus_2p() * Rat(M * (m - 1) / 2);
    return detail::cancel({num, detail::one_minus_2p().pow(2)});
}

// Seed of width m on a wet wall (adjacent wall sites not counted, so the seed sits at y = 0 of the damp model).
inline RationalFunction wet_mean_size(int m) {
    detail::require_width(m);
    const Rat M(m);
    RatPoly a = RatPoly{M, Rat(-2), Rat(2)};
    RatPoly b = detail::one_minus_2p() * Rat(2 * M * M - M);
    return detail::cancel({a + b, detail::one_minus_2p().pow(2) * Rat(2)});
}

inline RationalFunction dry_mean_size(int m, int y) {
    detail::require_width(m);
    if (y < m - 1) throw std::invalid_argument("dry closed form needs y >= m-1");
    const int e = y - m - 1;  // >= -2, so p^2 (p/(1-p))^e is a rational function regular at 0
    RatPoly num = RatPoly::monomial(Rat(-m), static_cast<std::size_t>(2 + e));
    RatPoly den = detail::one_minus_2p().pow(2);
    if (e >= 0)
        den = den * detail::one_minus_p().pow(static_cast<unsigned>(e));
    else
        num = num * detail::one_minus_p().pow(static_cast<unsigned>(-e));
    return detail::cancel(detail::sum(bulk_mean_size(m), {num, den}));
}

inline RationalFunction reference_mean_size(ReferenceCase which, int m, int y) {
    switch (which) {
        case ReferenceCase::kBulk: return bulk_mean_size(m);
        case ReferenceCase::kWet: return wet_mean_size(m);
        case ReferenceCase::kDry: return dry_mean_size(m, y);
    }
    throw std::invalid_argument("unknown closed form");
}

// Exact value at a rational point of the low-density branch.
inline Rat reference_value(ReferenceCase which, int m, int y, const Rat& p) {
    if (sgn(p) < 0 || p >= Rat(1, 2)) throw std::domain_error("closed forms cover 0 <= p < 1/2 only");
    return reference_mean_size(which, m, y).value(p);
}

}  // namespace dcp
