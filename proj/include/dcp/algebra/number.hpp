#pragma once

/**
 * @file number.hpp
 * @brief Exact scalars: GMP integers and rationals, and a word-size prime field element.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcp {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

inline Rat make_rat(const Int& n, const Int& d = 1) {
    if (sgn(d) == 0) throw std::domain_error("zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

// Parses "n" or "n/d" with optional sign; floats are rejected.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    for (char c : text) {
        bool ok = (c >= '0' && c <= '9') || c == '/' || c == '-' || c == '+';
        if (!ok) throw std::invalid_argument("not an exact rational: '" + text + "'");
    }
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    Int n, d;
    if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        throw std::invalid_argument("not an exact rational: '" + text + "'");
    return make_rat(n, d);
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    auto mul = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto pw = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    for (; d % 2 == 0; d /= 2) ++s;
    // deterministic witness set for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pw(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mul(x, x);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    std::uint64_t s = a + b;
    return s >= q ? s - q : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a >= b ? a - b : a + q - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a * b % q; }
inline std::uint64_t neg(std::uint64_t a, std::uint64_t q) { return a == 0 ? 0 : q - a; }

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
    std::uint64_t r = 1 % q;
    for (a %= q; e; e >>= 1, a = mul(a, a, q))
        if (e & 1) r = mul(r, a, q);
    return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t q) {
    if (a % q == 0) throw std::domain_error("inverse of zero modulo prime");
    return pow(a, q - 2, q);
}

inline std::uint64_t reduce(const Int& a, std::uint64_t q) {
    Int r = a % static_cast<unsigned long>(q);
    if (sgn(r) < 0) r += static_cast<unsigned long>(q);
    return r.get_ui();
}

inline std::uint64_t reduce(const Rat& a, std::uint64_t q) {
    std::uint64_t d = reduce(a.get_den(), q);
    if (d == 0) throw std::domain_error("denominator vanishes modulo prime");
    return mul(reduce(a.get_num(), q), inv(d, q), q);
}

}  // namespace modp

// Element of Z/qZ; the modulus travels with the value so generic code can build zeros and ones.
// Moduli are below 2^32, so products fit in 64 bits.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t q = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), q(modulus) {}

    friend Fp operator+(Fp a, Fp b) { return {modp::add(a.v, b.v, a.q), a.q}; }
    friend Fp operator-(Fp a, Fp b) { return {modp::sub(a.v, b.v, a.q), a.q}; }
    friend Fp operator*(Fp a, Fp b) { return {modp::mul(a.v, b.v, a.q), a.q}; }
    friend Fp operator-(Fp a) { return {modp::neg(a.v, a.q), a.q}; }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    Fp inverse() const { return {modp::inv(v, q), q}; }
};

inline bool is_zero(const Fp& a) { return a.v == 0; }

}  // namespace dcp
