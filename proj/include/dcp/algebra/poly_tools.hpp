#pragma once

/**
 * @file poly_tools.hpp
 * @brief gcd, squarefree decomposition and exact rational roots of integer polynomials.
 */

#include "dcp/algebra/numeric.hpp"
#include "dcp/algebra/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcp {

inline RatPoly monic(const RatPoly& a) {
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.lead());
}

// Monic gcd over Q.
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

inline RatPoly gcd(const IntPoly& a, const IntPoly& b) { return gcd(to_rat(a), to_rat(b)); }

struct SquarefreeFactor {
    IntPoly factor;  // primitive, positive leading coefficient
    int multiplicity;
};

// Yun's algorithm; the factors multiply back to the primitive part of the input.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<SquarefreeFactor> out;
    if (f.degree() == 0) return out;
    RatPoly a = to_rat(f);
    RatPoly da = a.derivative();
    RatPoly g = gcd(a, da);
    RatPoly b = divmod(a, g).first;
    RatPoly c = divmod(da, g).first;
    RatPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        RatPoly h = gcd(b, d);
        if (h.degree() > 0) out.push_back({primitive_part(clear_denominators(h)), i});
        b = divmod(b, h).first;
        c = divmod(d, h).first;
        d = c - b.derivative();
    }
    return out;
}

inline IntPoly squarefree_part(const IntPoly& f) {
    IntPoly r(Int(1));
    for (const auto& s : squarefree_decomposition(f)) r = r * s.factor;
    return r;
}

// Largest e with g^e dividing f exactly over Z (g primitive, nonconstant).
inline int multiplicity(IntPoly f, const IntPoly& g, IntPoly* cofactor = nullptr) {
    if (f.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
    int e = 0;
    IntPoly q;
    while (divides_exact(f, g, &q)) {
        f = q;
        ++e;
    }
    if (cofactor) *cofactor = f;
    return e;
}

struct RationalRoot {
    Rat value;
    int multiplicity;
};

// Exact rational roots with multiplicity, ascending.
inline std::vector<RationalRoot> rational_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("root finding on the zero polynomial");
    std::vector<RationalRoot> out;
    for (const auto& sf : squarefree_decomposition(f)) {
        const IntPoly& g = sf.factor;
        if (g.degree() == 1) {
            out.push_back({make_rat(-g[0], g[1]), sf.multiplicity});
            continue;
        }
        const Int lc = abs(g.lead());
        const Real lcr = to_real(lc);
        std::vector<Rat> found;
        for (const auto& x : real_roots(g, 1e-40)) {
            // a root a/b in lowest terms has b | lc, so lc*x is an integer
            Real scaled = x * lcr;
            Int num;
            mpfr_get_z(num.get_mpz_t(), scaled.backend().data(), MPFR_RNDN);
            Rat cand = make_rat(num, lc);
            if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
            if (sgn(to_rat(g).eval(cand)) == 0) found.push_back(cand);
        }
        for (const auto& v : found) out.push_back({v, sf.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    return out;
}

// Integer linear factor b*p - a for the rational a/b, primitive with positive leading coefficient.
inline IntPoly linear_factor(const Rat& root) { return IntPoly{Int(-root.get_num()), Int(root.get_den())}; }

}  // namespace dcp
