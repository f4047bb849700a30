#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Int or Rat, index = power of the variable.
 */

#include "dcp/algebra/number.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcp {

template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Poly(const T& constant) : c_{constant} { trim(); }  // NOLINT(implicit)

    static Poly monomial(const T& coeff, std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = coeff;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T lead() const { return c_.empty() ? T(0) : c_.back(); }

    // Lowest power with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!dcp::is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (dcp::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(unsigned e) const {
        Poly r(T(1)), b = *this;
        for (; e; e >>= 1, b = b * b)
            if (e & 1) r = r * b;
        return r;
    }

    Poly shift_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> c(k, T(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(c));
    }

    template <class V>
    V eval(const V& x) const {
        V acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    // p(x + a)
    Poly taylor_shift(const T& a) const {
        std::vector<T> c = c_;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
        return Poly(std::move(c));
    }

    // Substitution p(s·x) for a scalar s.
    Poly scale_arg(const T& s) const {
        std::vector<T> c = c_;
        T f(1);
        for (auto& v : c) {
            v *= f;
            f *= s;
        }
        return Poly(std::move(c));
    }

    Poly truncate(std::size_t len) const {
        if (len >= c_.size()) return *this;
        return Poly(std::vector<T>(c_.begin(), c_.begin() + static_cast<long>(len)));
    }

    std::string str(const std::string& var = "p") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (dcp::is_zero(c_[i])) continue;
            std::string s = to_string(c_[i]);
            bool negative = s[0] == '-';
            if (negative) s.erase(0, 1);
            os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
            if (i == 0 || s != "1") os << s << (i ? "*" : "");
            if (i) os << var << (i > 1 ? "^" + std::to_string(i) : "");
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && dcp::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& a) {
    std::vector<Rat> c;
    c.reserve(a.size());
    for (const auto& v : a.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

inline Int content(const IntPoly& a) {
    Int g = 0;
    for (const auto& v : a.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int g = content(a);
    if (sgn(a.lead()) < 0) g = -g;
    std::vector<Int> c(a.coeffs());
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

// Scales a rational polynomial to an integer one with content 1 (sign preserved).
inline IntPoly clear_denominators(const RatPoly& a) {
    Int l = 1;
    for (const auto& v : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Int> c;
    c.reserve(a.size());
    for (const auto& v : a.coeffs()) c.push_back(v.get_num() * (l / v.get_den()));
    IntPoly r(std::move(c));
    Int g = content(r);
    if (sgn(g) == 0) return r;
    std::vector<Int> d(r.coeffs());
    for (auto& v : d) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(d));
}

template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b);

template <>
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
    Rat inv_lead = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        Rat f = r[static_cast<std::size_t>(i)] * inv_lead;
        if (sgn(f) == 0) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

// Exact division over Z; returns false when b does not divide a in Z[p].
inline bool divides_exact(const IntPoly& a, const IntPoly& b, IntPoly* quotient) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) {
        if (quotient) *quotient = IntPoly{};
        return true;
    }
    const int db = b.degree();
    if (a.degree() < db) return false;
    std::vector<Int> r(a.coeffs());
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
    const Int& lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        Int& top = r[static_cast<std::size_t>(i)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        Int f = top / lb;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    for (const auto& v : r)
        if (sgn(v) != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

// Rational polynomial substitution p -> x(p) evaluated via Horner on polynomials.
template <class T>
Poly<T> compose(const Poly<T>& outer, const Poly<T>& inner) {
    Poly<T> acc;
    for (std::size_t i = outer.size(); i-- > 0;) acc = acc * inner + Poly<T>(outer[i]);
    return acc;
}

}  // namespace dcp
