#pragma once

/**
 * @file modular.hpp
 * @brief Word-size primes, Chinese remaindering and rational reconstruction.
 */

#include "dcp/algebra/number.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcp {

inline constexpr std::uint64_t kDefaultPrimeStart = 2147483629ull;  // largest prime below 2^31 - 1

// Start of the prime sequence; DCP_PRIME_SEED overrides the default.
inline std::uint64_t prime_sequence_start() {
    if (const char* env = std::getenv("DCP_PRIME_SEED"); env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0' || v < 3 || v >= (1ull << 31))
            throw std::invalid_argument("DCP_PRIME_SEED must be an integer in [3, 2^31)");
        return v;
    }
    return kDefaultPrimeStart;
}

// Descending odd primes <= start.
class PrimeSequence {
public:
    explicit PrimeSequence(std::uint64_t start = prime_sequence_start()) : next_(start) {}
    std::uint64_t next() {
        while (next_ > 2 && !is_prime_u64(next_)) --next_;
        if (next_ <= 2) throw std::runtime_error("prime sequence exhausted");
        return next_--;
    }

private:
    std::uint64_t next_;
};

inline std::vector<std::uint64_t> primes_below(std::uint64_t start, std::size_t count) {
    PrimeSequence seq(start);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(seq.next());
    return out;
}

// Result lies in [0, product).
inline std::pair<Int, Int> crt_combine(const std::vector<std::pair<Int, Int>>& residues) {
    if (residues.empty()) throw std::invalid_argument("crt_combine needs at least one residue");
    std::set<Int> seen;
    for (const auto& [v, m] : residues) {
        if (m <= 1) throw std::invalid_argument("crt modulus must exceed 1");
        if (!seen.insert(m).second) throw std::invalid_argument("duplicate modulus " + m.get_str());
    }
    Int x = residues[0].first % residues[0].second, M = residues[0].second;
    if (x < 0) x += M;
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const auto& [v, m] = residues[i];
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), M.get_mpz_t(), m.get_mpz_t());
        if (g != 1) throw std::invalid_argument("moduli not coprime");
        // x + M*k ≡ v (mod m), k = (v - x)*s mod m
        Int k = ((v - x) % m) * s % m;
        if (k < 0) k += m;
        x += M * k;
        M *= m;
    }
    return {x, M};
}

// Wang's reconstruction with |n| <= num_bound, 0 < d <= den_bound; requires 2*num_bound*den_bound < modulus
// for uniqueness.
inline std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus, const Int& num_bound,
                                               const Int& den_bound) {
    if (residue < 0 || residue >= modulus) throw std::invalid_argument("residue out of range");
    Int r0 = modulus, r1 = residue, t0 = 0, t1 = 1;
    while (r1 > num_bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Int d = abs(t1);
    if (d == 0 || d > den_bound) return std::nullopt;
    Int g = gcd(r1, t1);
    if (g != 1) return std::nullopt;
    Int n = sgn(t1) < 0 ? Int(-r1) : r1;
    return make_rat(n, d);
}

inline std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus) {
    Int b;
    Int half = modulus / 2;
    mpz_sqrt(b.get_mpz_t(), half.get_mpz_t());
    return rational_reconstruct(residue, modulus, b, b);
}

// Reconstructs a vector sharing a common denominator. Each entry is scaled by the denominator found so far,
// so once the common denominator is known the remaining entries only need |n| below modulus / (2^slack_bits).
inline std::optional<std::vector<Rat>> reconstruct_vector(const std::vector<Int>& residues, const Int& modulus,
                                                          unsigned slack_bits = 40) {
    std::vector<Rat> out;
    out.reserve(residues.size());
    Int denom = 1;
    Int den_bound = Int(1) << slack_bits;
    Int sym;
    Int half = modulus / 2;
    mpz_sqrt(sym.get_mpz_t(), half.get_mpz_t());
    for (const auto& u : residues) {
        Int scaled = u * denom % modulus;
        std::optional<Rat> v;
        if (denom == 1) {
            v = rational_reconstruct(scaled, modulus);
        } else {
            Int num_bound = (modulus - 1) / (2 * den_bound);
            v = rational_reconstruct(scaled, modulus, num_bound, den_bound);
            if (!v) v = rational_reconstruct(scaled, modulus);
        }
        if (!v) return std::nullopt;
        Int d = v->get_den();
        out.push_back(*v / Rat(denom));
        denom *= d;
    }
    for (auto& x : out) x.canonicalize();
    return out;
}

}  // namespace dcp
