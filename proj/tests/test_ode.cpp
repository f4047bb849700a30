/**
 * @file test_ode.cpp
 * @brief Recurrence and ODE guessing modulo primes, exact reconstruction, conversions and operator application.
 */

#include "catch_amalgamated.hpp"

#include "dcp/io/json.hpp"
#include "dcp/known_results.hpp"
#include "dcp/ode/guess.hpp"
#include "dcp/ode/recurrence.hpp"
#include "dcp/ode/search.hpp"
#include "dcp/pipeline.hpp"
#include "dcp/series/reference.hpp"

using namespace dcp;

namespace {

const std::uint64_t kPrime = 2147483629;

RatSeries from_ints(const std::vector<Int>& v) {
    std::vector<Rat> c;
    for (const auto& x : v) c.emplace_back(x);
    return RatSeries(std::move(c));
}

RatSeries catalan_series(int order) {
    std::vector<Int> v;
    for (int n = 0; n <= order; ++n) {
        Int c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
        v.push_back(c / (n + 1));
    }
    return from_ints(v);
}

RatSeries geometric_series(int order) {
    std::vector<Int> v;
    for (int n = 0; n <= order; ++n) v.push_back(Int(1) << n);
    return from_ints(v);
}

// (1-p)(1-2p) D - 1
DiffOperator dry_operator() { return normalize(DiffOperator{{IntPoly{Int(-1)}, IntPoly{Int(1), Int(-3), Int(2)}}, std::nullopt}); }

PRecurrence exact_recurrence(const RatSeries& s, int max_order, int max_degree) {
    auto g = guess_precurrence(reduce(s, kPrime), max_order, max_degree);
    REQUIRE(g.has_value());
    return reconstruct_precurrence({g->rec});
}

}  // namespace

TEST_CASE("recurrence guessing", "[ode][recurrence]") {
    SECTION("geometric sequence") {
        PRecurrence r = exact_recurrence(geometric_series(40), 2, 2);
        CHECK(r.coeffs == std::vector<IntPoly>{IntPoly{Int(1)}, IntPoly{Int(-2)}});
    }
    SECTION("Catalan numbers: (n+1) a_n - (4n-2) a_{n-1} = 0") {
        PRecurrence r = exact_recurrence(catalan_series(40), 2, 2);
        CHECK(r.coeffs == std::vector<IntPoly>{IntPoly{Int(1), Int(1)}, IntPoly{Int(2), Int(-4)}});
        for (const auto& v : recurrence_residual(r, catalan_series(60).coeffs)) CHECK(sgn(v) == 0);
    }
    SECTION("50 terms of S(p, 2p) give the published recurrence") {
        RatSeries s = mean_size_specialized(Seed(1, 1), Rat(2), 49);
        auto res = recurrence_from_series(s, 6, 3, 2);
        REQUIRE(res.has_value());
        CHECK(res->rec.order() == 6);
        CHECK(res->rec.degree() == 2);
        CHECK(res->rec == normalize(known::r2_recurrence()));
        // spot check at n = 6 with a_0..a_6 = 1, 3, 6, 16, 30, 84, 130
        auto c = known::r2_recurrence().coeffs;
        std::vector<long> a{1, 3, 6, 16, 30, 84, 130};
        Int acc = 0;
        for (int j = 0; j <= 6; ++j) acc += c[static_cast<std::size_t>(j)].eval(Int(6)) * a[static_cast<std::size_t>(6 - j)];
        CHECK(acc == 0);
    }
    SECTION("insufficient terms report the required count") {
        try {
            guess_precurrence(reduce(geometric_series(10), kPrime), 3, 3);
            FAIL("expected InsufficientTerms");
        } catch (const InsufficientTerms& e) {
            CHECK(e.required() == 4 * 5 + kDefaultHoldout);
        }
    }
}

TEST_CASE("ODE guessing modulo a prime", "[ode][guess]") {
    SECTION("dry series: (1-p)(1-2p) S' - S = 0") {
        RatSeries s = dry_mean_size(1, 1).series(40);
        ModGuess g = guess_ode_mod(reduce(s, kPrime), 1, 2);
        REQUIRE(g.status == ModGuess::kFound);
        CHECK(g.holdout >= kDefaultHoldout);
        CHECK(reconstruct_ode({g.op}) == dry_operator());
    }
    SECTION("S(p, 2p) at k = 2, d = 6 with a degree-5 right-hand side") {
        std::vector<ModThetaOperator> images;
        for (auto q : primes_below(kPrime, 2)) {
            ModGuess g = guess_ode_mod(specialize_mod(Seed(1, 1), Rat(2), 60, q), 2, 6, 5);
            REQUIRE(g.status == ModGuess::kFound);
            images.push_back(g.op);
        }
        DiffOperator op = reconstruct_ode(images);
        CHECK(op == normalize(known::r2_ode()));
        CHECK(op.head() == known::r2_head());
        REQUIRE(op.rhs.has_value());
        CHECK(apply_operator(op, mean_size_specialized(Seed(1, 1), Rat(2), 100)).zero());
    }
    SECTION("term-count arithmetic") {
        CHECK(theta_unknowns(4, 33, -1) == 170);
        CHECK_THROWS_AS(guess_ode_mod(specialize_mod(Seed(1, 1), Rat(3), 100, kPrime), 4, 33), InsufficientTerms);
    }
}

TEST_CASE("reconstruction across primes", "[ode][reconstruct]") {
    SECTION("small integer operator is stable from one prime to two") {
        RatSeries s = dry_mean_size(1, 1).series(40);
        std::vector<ModThetaOperator> images;
        for (auto q : primes_below(kPrime, 2)) images.push_back(guess_ode_mod(reduce(s, q), 1, 2).op);
        CHECK(reconstruct_ode({images[0]}) == reconstruct_ode(images));
    }
    SECTION("r = 2 order-3 operator is identical from four and five primes") {
        PrimeSequence primes(kPrime);
        SearchResult res = minimal_ode_search(specialized_source(Seed(1, 1), Rat(2)), 5, SearchSchedule{}, primes);
        REQUIRE(res.found);
        REQUIRE(res.images.size() == 5);
        CHECK(res.report.order == 3);
        std::vector<ModThetaOperator> four(res.images.begin(), res.images.begin() + 4);
        DiffOperator a = reconstruct_ode(four), b = reconstruct_ode(res.images);
        CHECK(a == b);
        CHECK(apply_operator(b, mean_size_specialized(Seed(1, 1), Rat(2), 150)).zero());
    }
    SECTION("too few primes for L4(r=3) is reported") {
        PrimeSequence primes(kPrime);
        SearchResult res = minimal_ode_search(specialized_source(Seed(1, 1), Rat(3)), 1, SearchSchedule{}, primes);
        REQUIRE(res.found);
        CHECK_THROWS_AS(reconstruct_ode(res.images), ReconstructionFailure);
    }
}

TEST_CASE("minimal ODE search for r = 3", "[ode][search]") {
    OdeJob job;
    job.r = Rat(3);
    auto a = minimal_exact_ode(job);
    REQUIRE(a.has_value());
    CHECK(a->report.order == 4);
    CHECK(a->report.degree == 33);
    CHECK(a->report.terms >= 170 + kDefaultHoldout);
    CHECK(a->report.primes.size() <= 10);
    CHECK(a->verified_order >= 100);

    SECTION("no operator of order below 4 on the scanned grid") {
        bool saw_order3_top = false;
        for (const auto& probe : a->report.probes) {
            if (probe.order >= 4) continue;
            CHECK(probe.kernel_dim == 0);
            saw_order3_top = saw_order3_top || (probe.order == 3 && probe.degree == 40);
        }
        CHECK(saw_order3_top);
    }
    SECTION("the exact operator does not depend on the primes") {
        OdeJob other = job;
        other.prime_start = 2147000000;
        auto b = minimal_exact_ode(other);
        REQUIRE(b.has_value());
        CHECK(b->report.primes != a->report.primes);
        CHECK(b->op == a->op);
    }
}

TEST_CASE("special orders", "[ode][search]") {
    for (auto [r, order] : {std::pair{Rat(2), 3}, std::pair{Rat(0), 1}, std::pair{Rat(1), 1}}) {
        OdeJob job;
        job.r = r;
        auto res = minimal_exact_ode(job);
        REQUIRE(res.has_value());
        CHECK(res->op.order() == order);
    }
}

TEST_CASE("operator application", "[ode][apply]") {
    const int N = 30;
    Residual res = apply_operator(dry_operator(), dry_mean_size(1, 1).series(N));
    CHECK(res.zero());
    CHECK(res.verified_order == N - 3);

    Residual wrong = apply_operator(dry_operator(), wet_mean_size(1).series(N));
    CHECK_FALSE(wrong.zero());

    CHECK_THROWS_AS(apply_operator(DiffOperator{{IntPoly{Int(1)}, IntPoly{}}, std::nullopt}, dry_mean_size(1, 1).series(N)),
                    std::invalid_argument);
    Residual short_series = apply_operator(dry_operator(), dry_mean_size(1, 1).series(2));
    CHECK(short_series.verified_order == -1);
    CHECK_FALSE(short_series.zero());

    ModResidual mres = apply_operator(dry_operator(), reduce(dry_mean_size(1, 1).series(N), kPrime));
    CHECK(mres.zero());
    CHECK(mres.verified_order == N - 3);
}

TEST_CASE("recurrence and ODE conversion", "[ode][convert]") {
    SECTION("a_n - 2 a_{n-1} = 0 gives (1-2p) S' - 2 S = 0") {
        PRecurrence r{{IntPoly{Int(1)}, IntPoly{Int(-2)}}, -1};
        RatSeries s = geometric_series(30);
        DiffOperator op = homogenize(recurrence_to_ode(r, s));
        CHECK(op == normalize(DiffOperator{{IntPoly{Int(-2)}, IntPoly{Int(1), Int(-2)}}, std::nullopt}));
        CHECK(apply_operator(op, s).zero());
        CHECK(apply_operator(recurrence_to_ode(r, s), s).zero());
    }
    SECTION("the published recurrence gives an operator annihilating S(p, 2p)") {
        RatSeries s = mean_size_specialized(Seed(1, 1), Rat(2), 120);
        DiffOperator inhom = recurrence_to_ode(known::r2_recurrence(), s);
        Residual res = apply_operator(inhom, s);
        CHECK(res.zero());
        CHECK(res.verified_order > 100);
        CHECK(apply_operator(homogenize(inhom), s).zero());
    }
    SECTION("ODE to recurrence round trip") {
        PRecurrence r = ode_to_recurrence(dry_operator());
        for (const auto& v : recurrence_residual(r, dry_mean_size(1, 1).series(40).coeffs)) CHECK(sgn(v) == 0);
        PRecurrence r2 = ode_to_recurrence(normalize(known::r2_ode()));
        DiffOperator back = recurrence_to_ode(r2);
        CHECK(apply_operator(homogenize(normalize(known::r2_ode())), mean_size_specialized(Seed(1, 1), Rat(2), 80)).zero());
        CHECK(back.order() >= 2);
    }
    SECTION("degenerate recurrences are rejected") {
        CHECK_THROWS_AS(recurrence_to_theta(PRecurrence{{IntPoly{Int(1)}}, -1}), std::invalid_argument);
        CHECK_THROWS_AS(recurrence_to_theta(PRecurrence{{IntPoly{Int(1)}, IntPoly{}}, -1}), std::invalid_argument);
    }
}

TEST_CASE("operator JSON round trips", "[ode][json]") {
    DiffOperator op = normalize(known::r2_ode());
    auto j = io::to_json(op, 120, {kPrime});
    CHECK(j["order"] == 2);
    CHECK(j["verified_order"] == 120);
    CHECK(io::ode_from_json(j) == op);

    DiffOperator hom = dry_operator();
    auto jh = io::to_json(hom);
    CHECK(jh["rhs"].is_null());
    CHECK(io::ode_from_json(jh) == hom);

    PRecurrence rec = normalize(known::r2_recurrence());
    CHECK(io::recurrence_from_json(io::to_json(rec, {kPrime})) == rec);

    std::vector<ModThetaOperator> images;
    for (auto q : primes_below(kPrime, 2))
        images.push_back(guess_ode_mod(specialize_mod(Seed(1, 1), Rat(2), 60, q), 2, 6, 5).op);
    auto back = io::theta_images_from_json(io::to_json(images));
    REQUIRE(back.size() == 2);
    CHECK(reconstruct_ode(back) == reconstruct_ode(images));
    CHECK_THROWS_AS(io::ode_from_json(io::json::parse(R"({"order": 1})")), io::FormatError);
}
