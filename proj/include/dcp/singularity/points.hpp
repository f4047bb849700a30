#pragma once

/**
 * @file points.hpp
 * @brief Candidate singular points of the damp-wall operators as functions of r = p_w / p.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/numeric.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/poly_tools.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

struct SingularPoint {
    enum Kind { kRational, kAlgebraic, kInfinity };
    Kind kind = kRational;
    Rat value;                   // kRational
    IntPoly minimal_polynomial;  // kRational: linear; kAlgebraic: defining polynomial of degree >= 2
    Complex approx;              // numeric location (kRational, kAlgebraic)
    int multiplicity = 0;        // multiplicity in a head polynomial, when known
    std::string label;

    static SingularPoint rational(const Rat& v, std::string label = {}) {
        SingularPoint s;
        s.kind = kRational;
        s.value = v;
        s.minimal_polynomial = linear_factor(v);
        s.approx = Complex(to_real(v));
        s.label = label.empty() ? v.get_str() : std::move(label);
        return s;
    }
    static SingularPoint algebraic(const IntPoly& minpoly, const Complex& approx, std::string label) {
        SingularPoint s;
        s.kind = kAlgebraic;
        s.minimal_polynomial = primitive_part(minpoly);
        s.approx = approx;
        s.label = std::move(label);
        return s;
    }
    static SingularPoint infinity() {
        SingularPoint s;
        s.kind = kInfinity;
        s.label = "infinity";
        return s;
    }
    bool is_real(double tol = 1e-30) const { return kind != kInfinity && abs(approx.im) <= Real(tol); }
    std::string numeric_str(int digits = 15) const {
        if (kind == kInfinity) return "inf";
        std::ostringstream os;
        os << approx.re.str(digits);
        if (!is_real()) os << (approx.im < 0 ? " - " : " + ") << abs(approx.im).str(digits) << "i";
        return os.str();
    }
};

inline IntPoly rp_linear(const Rat& r) {  // 1 - r p, cleared
    return primitive_part(IntPoly{Int(r.get_den()), Int(-r.get_num())});
}

inline IntPoly rp_shifted(const Rat& r) {  // r - 1 - r p, cleared
    return primitive_part(IntPoly{Int(r.get_num() - r.get_den()), Int(-r.get_num())});
}

// r - 1 - 4 r^2 p^2 + 8 r^2 p^3 - 4 r^2 p^4, times den(r)^2
inline IntPoly p4_polynomial(const Rat& r) {
    const Int a = r.get_num(), b = r.get_den();
    const Int a2 = a * a;
    return IntPoly{Int((a - b) * b), Int(0), Int(-4 * a2), Int(8 * a2), Int(-4 * a2)};
}

inline IntPoly sqrt2_quadratic() { return IntPoly{Int(-1), Int(-4), Int(4)}; }  // 4p^2 - 4p - 1

// Irreducible pieces of P_4: with u = 2 r p (1 - p), P_4 = (r - 1) - u^2 splits when r - 1 is a rational square.
inline std::vector<IntPoly> p4_pieces(const Rat& r) {
    Rat rm1 = r - 1;
    if (sgn(rm1) > 0 && mpz_perfect_square_p(rm1.get_num_mpz_t()) && mpz_perfect_square_p(rm1.get_den_mpz_t())) {
        Int sn, sd;
        mpz_sqrt(sn.get_mpz_t(), rm1.get_num_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), rm1.get_den_mpz_t());
        Rat s = make_rat(sn, sd);
        RatPoly u{Rat(0), 2 * r, -2 * r};
        return {primitive_part(clear_denominators(RatPoly(s) - u)), primitive_part(clear_denominators(RatPoly(s) + u))};
    }
    return {primitive_part(p4_polynomial(r))};
}

struct SingularitySet {
    std::vector<SingularPoint> points;
    std::optional<std::size_t> nearest_origin;         // smallest modulus
    std::optional<std::size_t> nearest_positive_real;  // smallest positive real location
    std::vector<std::string> coalesced;                // labels of candidates that coincide with an earlier point
};

inline SingularitySet singular_points(const Rat& r) {
    if (sgn(r) == 0 || r == 1) throw std::invalid_argument("r = 0 and r = 1 are degenerate");
    SingularitySet set;
    auto add_rational = [&](const Rat& v, const std::string& label) {
        for (const auto& p : set.points)
            if (p.kind == SingularPoint::kRational && p.value == v) {
                set.coalesced.push_back(label + " = " + p.label);
                return;
            }
        set.points.push_back(SingularPoint::rational(v, label));
    };
    add_rational(Rat(1, 2), "1/2");
    add_rational(Rat(1), "1");
    for (const auto& z : complex_roots(sqrt2_quadratic()))
        set.points.push_back(SingularPoint::algebraic(sqrt2_quadratic(), z, z.re > 0 ? "(1+sqrt2)/2" : "(1-sqrt2)/2"));
    add_rational(1 / r, "1/r");
    add_rational(1 - 1 / r, "1-1/r");
    int idx = 0;
    for (const auto& piece : p4_pieces(r)) {
        if (piece.degree() == 1) {
            add_rational(rational_roots(piece).at(0).value, "P4 root");
            continue;
        }
        auto rr = rational_roots(piece);
        for (const auto& root : rr) add_rational(root.value, "P4 root");
        if (!rr.empty()) continue;
        for (const auto& z : complex_roots(piece))
            set.points.push_back(SingularPoint::algebraic(piece, z, "P4 root " + std::to_string(++idx)));
    }
    Real best_mod = -1, best_pos = -1;
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        const auto& p = set.points[i];
        Real m = abs(p.approx);
        if (best_mod < 0 || m < best_mod) {
            best_mod = m;
            set.nearest_origin = i;
        }
        if (p.is_real(1e-40) && p.approx.re > 0 && (best_pos < 0 || p.approx.re < best_pos)) {
            best_pos = p.approx.re;
            set.nearest_positive_real = i;
        }
    }
    return set;
}

}  // namespace dcp
