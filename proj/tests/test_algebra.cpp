/**
 * @file test_algebra.cpp
 * @brief Prime-field linear algebra, CRT and rational reconstruction, Padé approximants and polynomial tools.
 */

#include "catch_amalgamated.hpp"

#include "dcp/algebra/linalg.hpp"
#include "dcp/algebra/modular.hpp"
#include "dcp/algebra/pade.hpp"
#include "dcp/algebra/poly_tools.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/singularity/structural.hpp"

#include <optional>
#include <random>

using namespace dcp;

namespace {

using Vec = std::vector<std::uint64_t>;

bool annihilates(const ModMatrix& m, const Vec& v) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < m.cols; ++j) acc = modp::add(acc, modp::mul(m(i, j), v[j], m.prime), m.prime);
        if (acc != 0) return false;
    }
    return true;
}

// Exhaustive Wang search: all n/d in lowest terms with |n|, d <= bound and d*residue = n (mod modulus).
std::vector<Rat> admissible_fractions(long residue, long modulus) {
    long bound = 0;
    while ((bound + 1) * (bound + 1) <= modulus / 2) ++bound;
    std::vector<Rat> out;
    for (long d = 1; d <= bound; ++d)
        for (long n = -bound; n <= bound; ++n) {
            if (std::gcd(std::abs(n), d) != 1) continue;
            if (((d * residue - n) % modulus + modulus) % modulus == 0) out.push_back(make_rat(Int(n), Int(d)));
        }
    return out;
}

RatSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    RatSeries s;
    s.coeffs.push_back(Rat(1));
    for (int i = 1; i <= order; ++i) s.coeffs.push_back(make_rat(Int(num(rng)), Int(den(rng))));
    return s;
}

}  // namespace

TEST_CASE("nullspace_mod examples", "[algebra][nullspace]") {
    SECTION("x + y = 0 mod 5 spans (1, 4)") {
        ModMatrix m = ModMatrix::from_rows({{1, 1}}, 5);
        auto basis = nullspace_mod(m);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == Vec{4, 1});
        // (1, 4) is 4 * (4, 1) mod 5
        CHECK(Vec{modp::mul(4, basis[0][0], 5), modp::mul(4, basis[0][1], 5)} == Vec{1, 4});
    }
    SECTION("identity has an empty kernel") {
        ModMatrix m = ModMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 7);
        CHECK(nullspace_mod(m).empty());
    }
    SECTION("hand elimination of a 2x3 system") {
        ModMatrix m = ModMatrix::from_rows({{1, 0, 1}, {0, 1, 1}}, 5);
        auto basis = nullspace_mod(m);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == Vec{4, 4, 1});
    }
    SECTION("composite modulus is rejected") {
        CHECK_THROWS_AS(nullspace_mod(ModMatrix::from_rows({{1, 1}}, 6)), std::invalid_argument);
    }
}

TEST_CASE("nullspace vectors annihilate random matrices", "[algebra][nullspace][property]") {
    std::mt19937 rng(12345);
    for (std::uint64_t q : {101ull, 7919ull, 2147483629ull}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
            std::vector<Vec> a(rows, Vec(cols));
            for (auto& row : a)
                for (auto& x : row) x = rng() % 3 == 0 ? 0 : rng() % q;
            ModMatrix m = ModMatrix::from_rows(a, q);
            auto basis = nullspace_mod(m);
            ModMatrix e = m;
            std::size_t rank = rref_mod(e).size();
            CHECK(basis.size() == cols - rank);
            for (const auto& v : basis) CHECK(annihilates(m, v));
        }
    }
}

TEST_CASE("crt_combine examples", "[algebra][crt]") {
    CHECK(crt_combine({{2, 3}, {3, 5}}) == std::pair<Int, Int>(8, 15));
    CHECK(crt_combine({{0, 3}, {0, 5}}) == std::pair<Int, Int>(0, 15));
    // independent oracle: direct search over 0..104
    int found = -1;
    for (int x = 0; x < 105 && found < 0; ++x)
        if (x % 3 == 1 && x % 5 == 2 && x % 7 == 3) found = x;
    CHECK(crt_combine({{1, 3}, {2, 5}, {3, 7}}) == std::pair<Int, Int>(found, 105));
    CHECK_THROWS_AS(crt_combine({{1, 5}, {2, 5}}), std::invalid_argument);
}

TEST_CASE("rational_reconstruct examples", "[algebra][reconstruct]") {
    CHECK(rational_reconstruct(34, 101) == std::optional<Rat>(Rat(1, 3)));
    CHECK(rational_reconstruct(0, 101) == std::optional<Rat>(Rat(0)));
    // 2 * 50 = -1 (mod 101), so -1/2 lies inside the bound floor(sqrt(101/2)) = 7.
    auto admissible = admissible_fractions(50, 101);
    REQUIRE(admissible.size() == 1);
    CHECK(admissible[0] == Rat(-1, 2));
    CHECK(rational_reconstruct(50, 101) == std::optional<Rat>(Rat(-1, 2)));
    CHECK_THROWS_AS(rational_reconstruct(101, 101), std::invalid_argument);
}

TEST_CASE("rational_reconstruct agrees with exhaustive search", "[algebra][reconstruct][property]") {
    for (long q : {101L, 103L, 211L}) {
        for (long u = 0; u < q; ++u) {
            auto expected = admissible_fractions(u, q);
            auto got = rational_reconstruct(Int(u), Int(q));
            if (expected.empty()) {
                CHECK_FALSE(got.has_value());
            } else {
                REQUIRE(expected.size() == 1);
                CHECK(got == std::optional<Rat>(expected[0]));
            }
        }
    }
}

TEST_CASE("CRT followed by reconstruction recovers small rationals", "[algebra][reconstruct][property]") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    auto primes = primes_below(prime_sequence_start(), 3);
    for (int trial = 0; trial < 200; ++trial) {
        Rat x = make_rat(Int(num(rng)), Int(den(rng)));
        std::vector<std::pair<Int, Int>> residues;
        for (auto q : primes) residues.emplace_back(Int(modp::reduce(x, q)), Int(q));
        auto [v, m] = crt_combine(residues);
        CHECK(rational_reconstruct(v, m) == std::optional<Rat>(x));
    }
}

TEST_CASE("pade examples", "[algebra][pade]") {
    RatPoly one_minus_2p{Rat(1), Rat(-2)};
    SECTION("[0/1] of 1/(1-2p)") {
        PadeApprox pa = pade(rational_series(RatPoly(Rat(1)), one_minus_2p, 4), 0, 1);
        CHECK(pa.numerator == RatPoly(Rat(1)));
        CHECK(pa.denominator == one_minus_2p);
    }
    SECTION("[1/1] of (1-p)/(1-2p)") {
        RatPoly num{Rat(1), Rat(-1)};
        PadeApprox pa = pade(rational_series(num, one_minus_2p, 6), 1, 1);
        CHECK(pa.numerator == num);
        CHECK(pa.denominator == one_minus_2p);
    }
    SECTION("singular system is reported") {
        RatSeries s{{Rat(1), Rat(0), Rat(1)}};
        CHECK_THROWS_AS(pade(s, 1, 1), DegeneratePade);
    }
    SECTION("reduced form recovers a low-degree rational function at larger degrees") {
        RatPoly num{Rat(1), Rat(-1)};
        RatSeries s = rational_series(num, one_minus_2p, 20);
        PadeApprox pa = pade_reduced(s, 5, 5);
        CHECK(pa.numerator == num);
        CHECK(pa.denominator == one_minus_2p);
    }
    SECTION("order below L+M is rejected") {
        CHECK_THROWS_AS(pade(RatSeries{{Rat(1), Rat(2)}}, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("pade expansion matches the series through L+M", "[algebra][pade][property]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int L = static_cast<int>(rng() % 5), M = static_cast<int>(rng() % 5);
        RatSeries s = random_series(rng, L + M);
        PadeApprox pa;
        try {
            pa = pade(s, L, M);
        } catch (const DegeneratePade&) {
            continue;
        }
        CHECK(pa.numerator.degree() <= L);
        CHECK(pa.denominator.degree() <= M);
        CHECK(pa.denominator[0] == 1);
        CHECK(rational_series(pa.numerator, pa.denominator, L + M) == s);
    }
}

TEST_CASE("polynomial tools", "[algebra][poly]") {
    const IntPoly a{Int(1), Int(-2)}, b{Int(1), Int(-3)}, c{Int(1), Int(-1)}, d{Int(1), Int(1)};
    SECTION("roots of (1-2p)(1-3p)") {
        auto roots = rational_roots(a * b);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].value == Rat(1, 3));
        CHECK(roots[1].value == Rat(1, 2));
    }
    SECTION("gcd((1-2p)^2(1-p), (1-2p)(1+p)) is 1-2p up to a unit") {
        RatPoly g = gcd(a.pow(2) * c, a * d);
        CHECK(g == monic(to_rat(a)));
    }
    SECTION("rational roots of Q_4(p, 3p)") {
        IntPoly q4(Int(1));
        for (const auto& cand : structural_candidates(Rat(3))) q4 = q4 * cand.factor.pow(static_cast<unsigned>(cand.expected));
        std::vector<Rat> roots;
        for (const auto& r : rational_roots(q4)) roots.push_back(r.value);
        CHECK(roots == std::vector<Rat>{Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)});
        CHECK(rational_roots(q4)[1].multiplicity == 4);
    }
    SECTION("zero polynomial is rejected") {
        CHECK_THROWS_AS(rational_roots(IntPoly{}), std::invalid_argument);
    }
    SECTION("primitive part has content 1 and positive leading coefficient") {
        IntPoly f{Int(6), Int(-4), Int(-2)};
        IntPoly pp = primitive_part(f);
        CHECK(content(pp) == 1);
        CHECK(pp.lead() > 0);
        CHECK(pp * Int(-2) == f);
    }
}

TEST_CASE("gcd divides and squarefree parts multiply back", "[algebra][poly][property]") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-4, 4);
    auto random_poly = [&](int deg) {
        std::vector<Int> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(coef(rng));
        if (c.back() == 0) c.back() = 1;
        return IntPoly(std::move(c));
    };
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly common = random_poly(1 + static_cast<int>(rng() % 2));
        IntPoly f = common * random_poly(2), g = common.pow(2) * random_poly(1);
        RatPoly h = gcd(f, g);
        CHECK(divmod(to_rat(f), h).second.is_zero());
        CHECK(divmod(to_rat(g), h).second.is_zero());
        CHECK(divides_exact(f, clear_denominators(h), nullptr));

        IntPoly sq = f.pow(2) * g;
        if (sq.is_zero() || sq.degree() == 0) continue;
        IntPoly back(Int(1));
        for (const auto& sf : squarefree_decomposition(sq)) back = back * sf.factor.pow(static_cast<unsigned>(sf.multiplicity));
        CHECK(back == primitive_part(sq));
    }
}
