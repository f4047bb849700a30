/**
 * @file test_series.cpp
 * @brief Mean-size series: printed expansions, structure, the enumeration cross-oracle, wall limits and growth weights.
 */

#include "catch_amalgamated.hpp"

#include "dcp/io/json.hpp"
#include "dcp/known_results.hpp"
#include "dcp/series/enumeration.hpp"
#include "dcp/series/generator.hpp"
#include "dcp/series/growth.hpp"
#include "dcp/series/reference.hpp"

using namespace dcp;

namespace {

Int catalan(int n) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
    return c / (n + 1);
}

// Taylor coefficients of num/den by long division, independent of the series helpers.
std::vector<Rat> taylor(std::vector<Rat> num, const std::vector<Rat>& den, int order) {
    std::vector<Rat> out;
    num.resize(static_cast<std::size_t>(order + 1), Rat(0));
    for (int n = 0; n <= order; ++n) {
        Rat c = num[static_cast<std::size_t>(n)] / den[0];
        out.push_back(c);
        for (std::size_t j = 0; j < den.size() && n + static_cast<int>(j) <= order; ++j)
            num[static_cast<std::size_t>(n) + j] -= c * den[j];
    }
    return out;
}

std::vector<Rat> rats(std::initializer_list<long> v) {
    std::vector<Rat> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("printed expansion of S_{1,1}", "[series][paper]") {
    BivariateSeries s = mean_size_series(Seed(1, 1), 3);
    auto rows = known::s11_rows();
    for (int n = 0; n <= 3; ++n) CHECK(s.rows[static_cast<std::size_t>(n)] == rows[static_cast<std::size_t>(n)]);
    BivariateSeries s0 = mean_size_series(Seed(1, 1), 0);
    REQUIRE(s0.rows.size() == 1);
    CHECK(s0.rows[0] == IntPoly{Int(1), Int(1)});

    BivariateSeries s6 = mean_size_series(Seed(1, 1), 6);
    for (int n = 0; n <= 6; ++n) CHECK(s6.rows[static_cast<std::size_t>(n)] == rows[static_cast<std::size_t>(n)]);
}

TEST_CASE("structure of S_{1,1}: powers of two, Catalan numbers, p_w-degree bound", "[series][property]") {
    const int N = 14;
    BivariateSeries s = mean_size_series(Seed(1, 1), N);
    for (int n = 1; n <= N; ++n) {
        CHECK(s.coeff(n, 0) == Int(1) << (n - 1));
        CHECK(s.coeff(n, n + 1) == catalan(n + 1));
        CHECK(s.rows[static_cast<std::size_t>(n)].degree() <= n + 1);
    }
    CHECK(s.coeff(0, 1) == catalan(1));
}

TEST_CASE("generator and enumeration agree", "[series][oracle]") {
    CHECK(mean_size_series(Seed(1, 1), 2) == mean_size_enum(Seed(1, 1), 2));
    CHECK(mean_size_series(Seed(2, 3), 4) == mean_size_enum(Seed(2, 3), 4));
    for (int m = 1; m <= 3; ++m)
        for (int y = m - 1; y <= m + 2; ++y) {
            CAPTURE(m, y);
            CHECK(mean_size_series(Seed(m, y), 10) == mean_size_enum(Seed(m, y), 10));
        }
}

TEST_CASE("enumeration reproduces the printed structure", "[series][oracle]") {
    BivariateSeries e = mean_size_enum(Seed(1, 1), 6);
    std::vector<long> powers, tops;
    for (int n = 0; n <= 6; ++n) {
        powers.push_back(e.coeff(n, 0).get_si());
        tops.push_back(e.coeff(n, n + 1).get_si());
    }
    CHECK(powers == std::vector<long>{1, 1, 2, 4, 8, 16, 32});
    CHECK(tops == std::vector<long>{1, 2, 5, 14, 42, 132, 429});
}

TEST_CASE("specialization", "[series]") {
    BivariateSeries s = mean_size_series(Seed(1, 1), 13);
    SECTION("r = 2 matches the printed coefficients") {
        auto expected = known::r2_series();
        RatSeries sp = specialize(s, Rat(2));
        REQUIRE(sp.order() == 13);
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(sp.coeffs[i] == Rat(expected[i]));
    }
    SECTION("r = 0 is the Taylor series of (1-p)/(1-2p)") {
        CHECK(specialize(s, Rat(0)).coeffs == taylor(rats({1, -1}), rats({1, -2}), 13));
    }
    SECTION("r = 1 has 2 p at first order") { CHECK(specialize(s, Rat(1)).coeffs[1] == 2); }
    SECTION("definition: coefficient of p^n is sum_k c(n-k, k) r^k") {
        for (const Rat& r : {Rat(3, 2), Rat(-2, 5), Rat(7)}) {
            RatSeries sp = specialize(s, r);
            for (int n = 0; n <= 13; ++n) {
                Rat acc = 0;
                for (int k = 0; k <= n; ++k) {
                    Rat rk = 1;
                    for (int i = 0; i < k; ++i) rk *= r;
                    acc += Rat(s.coeff(n - k, k)) * rk;
                }
                CHECK(sp.coeffs[static_cast<std::size_t>(n)] == acc);
            }
        }
    }
    SECTION("direct specialized generator agrees") {
        for (const Rat& r : {Rat(0), Rat(1, 2), Rat(3, 2), Rat(3), Rat(-1, 3)})
            CHECK(mean_size_specialized(Seed(1, 1), r, 13) == specialize(s, r));
        CHECK(mean_size_specialized(Seed(2, 3), Rat(5, 4), 10) == specialize(mean_size_series(Seed(2, 3), 10), Rat(5, 4)));
    }
}

TEST_CASE("specialization modulo a prime", "[series][mod]") {
    ModSeries a = specialize_mod(Seed(1, 1), Rat(2), 6, 101);
    CHECK(a.prime == 101);
    CHECK(a.coeffs == std::vector<std::uint64_t>{1, 3, 6, 16, 30, 84, 29});  // 130 = 29 (mod 101)

    ModSeries b = specialize_mod(Seed(1, 1), Rat(3, 2), 1, 7);
    CHECK(b.coeffs[1] == 6);  // 5/2 = 5 * 4 = 6 (mod 7)

    // at p = 0 a width-m seed fills its triangle of m(m+1)/2 sites with certainty
    for (const Seed& seed : {Seed(1, 1), Seed(1, 0), Seed(2, 4), Seed(3, 2)})
        CHECK(specialize_mod(seed, Rat(0), 0, 101).coeffs ==
              std::vector<std::uint64_t>{static_cast<std::uint64_t>(seed.m * (seed.m + 1) / 2)});

    const std::uint64_t q = 2147483629;
    for (const Rat& r : {Rat(3), Rat(3, 2), Rat(-5, 7)}) {
        RatSeries exact = mean_size_specialized(Seed(1, 1), r, 40);
        CHECK(specialize_mod(Seed(1, 1), r, 40, q).coeffs == reduce(exact, q).coeffs);
    }
    CHECK_THROWS_AS(specialize_mod(Seed(1, 1), Rat(1, 7), 4, 7), std::domain_error);
    CHECK_THROWS_AS(specialize_mod(Seed(1, 1), Rat(2), 4, 100), std::invalid_argument);
}

TEST_CASE("closed-form references", "[series][reference]") {
    CHECK(dry_mean_size(1, 1).series(3).coeffs == rats({1, 1, 2, 4}));
    CHECK(wet_mean_size(1).series(4).coeffs == rats({1, 2, 5, 12, 28}));
    CHECK(wet_mean_size(1).series(10).coeffs == taylor(rats({1, -2, 1}), rats({1, -4, 4}), 10));
    CHECK(bulk_mean_size(1).value(Rat(0)) == 1);
    CHECK(reference_value(ReferenceCase::kDry, 1, 1, Rat(1, 4)) == Rat(3, 2));  // (1-p)/(1-2p)
    CHECK_THROWS_AS(reference_value(ReferenceCase::kWet, 1, 0, Rat(1, 2)), std::domain_error);
    CHECK_THROWS_AS(reference_value(ReferenceCase::kBulk, 1, 5, Rat(3, 5)), std::domain_error);
    CHECK(parse_reference_case("wet") == ReferenceCase::kWet);
    CHECK_THROWS(parse_reference_case("damp"));
}

TEST_CASE("wall limits of the generated series", "[series][reference][property]") {
    const int N = 14;
    SECTION("dry wall: p_w = 0") {
        for (const Seed& seed : {Seed(1, 1), Seed(2, 2)})
            CHECK(mean_size_specialized(seed, Rat(0), N) == dry_mean_size(seed.m, seed.y).series(N));
    }
    SECTION("wet wall: p_w = 1, seed on the wall") {
        CHECK(mean_size_fixed_wall(Seed(1, 0), Rat(1), N) == wet_mean_size(1).series(N));
    }
    SECTION("bulk horizon: the wall does not enter before order y") {
        BivariateSeries far = mean_size_series(Seed(1, N + 2), N);
        RatSeries bulk = bulk_mean_size(1).series(N);
        for (int n = 0; n <= N; ++n) {
            CHECK(far.rows[static_cast<std::size_t>(n)].degree() <= 0);
            CHECK(Rat(far.coeff(n, 0)) == bulk.coeffs[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("history weights", "[series][growth]") {
    SECTION("example cluster of size 14 from the seed (2, 4)") {
        std::vector<Column> h{{4, 6}, {3, 5}, {4, 4}, {3, 3}, {2, 4}, {1, 3}, {2, 4}, {3, 3}, {2, 2}, {1, 0}};
        CHECK(h.front() == Column::of(Seed(2, 4)));
        int size = 0;
        for (const auto& c : h) size += c.width();
        CHECK(size == 14);
        CHECK(history_weight(h) == Monomial{6, 8, 1, 2});
        CHECK(history_weight(h).str() == "p^6 q^8 p_w q_w^2");
    }
    SECTION("seed alone has weight 1") { CHECK(history_weight({Column::of(Seed(1, 1))}).str() == "1"); }
    SECTION("wall-adjacent site dying out") {
        CHECK(history_weight({Column::of(Seed(1, 1)), Column{1, 0}}) == Monomial{0, 1, 0, 1});
    }
    SECTION("incompatible columns are rejected") {
        CHECK_THROWS_AS(history_weight({Column::of(Seed(1, 1)), Column{6, 8}}), std::invalid_argument);
    }
}

TEST_CASE("seed validation", "[series]") {
    CHECK_THROWS_AS(Seed(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Seed(3, 1), std::invalid_argument);
    CHECK(Seed(3, 2).on_wall());
    CHECK(Seed(3, 3).adjacent());
    CHECK(Seed(3, 4).bulk());
}

TEST_CASE("series JSON round trips", "[series][json]") {
    BivariateSeries s = mean_size_series(Seed(1, 1), 8);
    CHECK(io::bivariate_from_json(io::to_json(s)) == s);
    RatSeries r = mean_size_specialized(Seed(1, 1), Rat(3, 2), 12);
    CHECK(io::rat_series_from_json(io::to_json(r)) == r);
    ModSeries m = specialize_mod(Seed(1, 1), Rat(3), 12, 101);
    ModSeries back = io::mod_series_from_json(io::to_json(m));
    CHECK(back.prime == m.prime);
    CHECK(back.coeffs == m.coeffs);
    CHECK(io::dump(io::to_json(s)) == io::dump(io::to_json(mean_size_series(Seed(1, 1), 8))));
    auto j = io::to_json(s);
    CHECK(j["kind"] == "bivariate");
    CHECK(j["order"] == 8);
}
