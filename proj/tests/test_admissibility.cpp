#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stardisc/admissibility.hpp"
#include "stardisc/discrepancy.hpp"
#include "stardisc/error.hpp"

using namespace stardisc;

TEST_CASE("make_scale partitions the index set") {
    const auto sc = make_scale(3.0, 2);
    CHECK(sc.N == 9);
    CHECK(sc.n0 == 3);
    CHECK(sc.s0 == -3.0);
    CHECK(sc.integer_exact);
    for (std::size_t i : {1u, 2u, 3u}) CHECK(sc.in_A0(i));
    for (std::size_t i : {4u, 5u, 6u}) CHECK(sc.in_A1(i));
    for (std::size_t i : {7u, 8u, 9u}) CHECK(sc.in_A2(i));

    const auto small = make_scale(3.0, 1);
    CHECK(small.N == 3);
    CHECK(small.n0 == 1);
    CHECK(small.s0 == -1.0);
    CHECK(small.in_A0(1));
    CHECK(small.in_A1(2));
    CHECK(small.in_A2(3));

    for (int t : {5, 8, 12}) {
        const auto big = make_scale(3.0, t);
        CHECK(big.N == static_cast<std::size_t>(std::llround(std::pow(3.0, t))));
        CHECK(big.s0 < 0.0);
        CHECK(big.s0 > -big.a_pow_t());
    }

    const auto real = make_scale(3.5, 2);
    CHECK(real.N == 12);
    CHECK(real.n0 == 3);
    CHECK_FALSE(real.integer_exact);
    CHECK(real.s0 == doctest::Approx(-5.25));

    CHECK_THROWS_AS(make_scale(2.9, 2), Error);
    CHECK_THROWS_AS(make_scale(3.8, 2), Error);
    CHECK_THROWS_AS(make_scale(3.0, 0), Error);
}

TEST_CASE("build_f on the smallest scale") {
    const auto sc = make_scale(3.0, 1);
    const auto ps = make_point_set({0.5, 0.2, 0.8});
    const auto f = build_f(ps, sc);
    CHECK(f(0.0) == 0.0);
    CHECK(std::abs(f(1.0)) < 1e-12);
    CHECK(jump_at(f, 0.2) >= 1.0 - 1e-12);
    CHECK(std::abs(f(0.5)) < 1e-12);  // D3(.5) = D1(.5) = -0.5
    CHECK_THROWS_AS(build_f(make_point_set({0.1, 0.2}), sc), Error);
}

TEST_CASE("build_f equals max over A2 minus max over A0") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t : {1, 2, 3}) {
        const auto sc = make_scale(3.0, t);
        for (int trial = 0; trial < 20; ++trial) {
            const auto pts = oracle::uniform_points(rng, sc.N);
            const auto f = build_f(make_point_set(pts), sc);
            for (int i = 0; i < 1000; ++i) {
                const double x = u(rng);
                const double want = oracle::max_discrepancy(pts, sc.N - sc.n0 + 1, sc.N, x) -
                                    oracle::max_discrepancy(pts, 1, sc.n0, x);
                CHECK(std::abs(f(x) - want) <= 1e-12 * std::max(1.0, std::abs(want)) + 1e-12);
            }
        }
    }
}

TEST_CASE("slopes of f lie between -a^t and s0") {
    std::mt19937_64 rng(32);
    const auto sc = make_scale(3.0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = build_f(make_point_set(oracle::uniform_points(rng, sc.N)), sc);
        for (double s : f.slopes()) {
            CHECK(s >= -9.0);
            CHECK(s <= -3.0);
        }
    }
}

TEST_CASE("random point sets yield functions passing every clause") {
    std::mt19937_64 rng(33);
    for (int t : {1, 2, 3}) {
        const auto sc = make_scale(3.0, t);
        const int trials = t == 3 ? 200 : 1000;
        for (int trial = 0; trial < trials; ++trial) {
            const auto ps = make_point_set(oracle::uniform_points(rng, sc.N));
            const auto f = build_f(ps, sc);
            const auto r = check_properties(f, sc, ps);
            CHECK(r.all_pass());
            for (const char* id : {"i", "ii", "iii", "iv", "v", "vi", "continuity_x1"}) CHECK(r.passed(id));
        }
    }
}

TEST_CASE("non-integer scales skip the cardinality clauses") {
    std::mt19937_64 rng(34);
    const auto sc = make_scale(3.5, 2);
    const auto ps = make_point_set(oracle::uniform_points(rng, sc.N));
    const auto r = check_properties(build_f(ps, sc), sc, ps);
    CHECK(r.find("iv")->status == ClauseStatus::skipped);
    CHECK(r.find("v")->status == ClauseStatus::skipped);
    CHECK(r.all_pass());
}

TEST_CASE("constructed violations are reported with witnesses") {
    const auto sc = make_scale(3.0, 2);
    std::mt19937_64 rng(35);
    const auto ps = make_point_set(oracle::uniform_points(rng, sc.N));

    SUBCASE("negative jump") {
        PiecewiseLinearFn g({0.0, 0.5, 1.0}, {0.0, 0.0}, {0.0, -1.0}, 0.0);
        const auto r = check_properties(g, sc, ps);
        const auto* c = r.find("iii");
        REQUIRE(c != nullptr);
        CHECK(c->status == ClauseStatus::fail);
        REQUIRE(c->witness);
        CHECK(c->witness->x == 0.5);
        CHECK(c->witness->value == -1.0);
    }
    SUBCASE("slope steeper than -a^t") {
        PiecewiseLinearFn g({0.0, 0.5, 1.0}, {-10.0, -3.0}, {0.0, 6.5}, 0.0);
        const auto r = check_properties(g, sc, ps);
        CHECK_FALSE(r.passed("iv"));
        CHECK(r.find("iv")->witness->threshold == -9.0);
    }
    SUBCASE("slope change beyond a^(t-1) on a continuous stretch") {
        PiecewiseLinearFn g({0.0, 0.5, 1.0}, {-9.0, -3.0}, {0.0, 0.0}, 6.0);
        CHECK_FALSE(check_properties(g, sc, ps).passed("v"));
    }
    SUBCASE("missing unit jump at an A1 point") {
        const auto small = make_scale(3.0, 1);
        const auto tiny = make_point_set({0.5, 0.2, 0.8});
        const auto r = check_properties(PiecewiseLinearFn::linear(0.0, 0.0), small, tiny);
        const auto* c = r.find("vi");
        CHECK(c->status == ClauseStatus::fail);
        CHECK(c->witness->x == 0.2);
    }
    SUBCASE("endpoint value") {
        CHECK_FALSE(check_properties(PiecewiseLinearFn::linear(0.0, -1.0), sc, ps).passed("i"));
    }
}

TEST_CASE("bend condition holds on random point sets") {
    std::mt19937_64 rng(36);
    for (int t : {2, 3}) {
        const auto sc = make_scale(3.0, t);
        const int trials = t == 2 ? 1000 : 200;
        std::size_t checked = 0;
        for (int trial = 0; trial < trials; ++trial) {
            const auto ps = make_point_set(oracle::uniform_points(rng, sc.N));
            const auto f = build_f(ps, sc);
            for (std::size_t j : bend_eligible_indices(f, sc, ps)) {
                CHECK(check_bend_condition(f, sc, ps, j).all_pass());
                ++checked;
            }
        }
        CHECK(checked > static_cast<std::size_t>(trials));
    }
}

TEST_CASE("hand-built bend-condition cases") {
    const auto sc = make_scale(3.0, 2);
    // x_7 = 0.5 with neighbours 0.4 and 0.6
    const auto ps = make_point_set({0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.5, 0.8, 0.9});

    SUBCASE("steep right branch never fires the hypothesis") {
        PiecewiseLinearFn g({0.0, 0.5, 1.0}, {-9.0, -9.0}, {0.0, 9.0}, 0.0);
        CHECK(check_bend_condition(g, sc, ps, 7).all_pass());
    }
    SUBCASE("shallow right branch with a low left branch violates it") {
        PiecewiseLinearFn g({0.0, 0.5, 1.0}, {-9.0, -3.0}, {0.0, 6.0}, 0.0);
        const auto r = check_bend_condition(g, sc, ps, 7);
        CHECK_FALSE(r.all_pass());
        const auto& w = *r.clauses.front().witness;
        CHECK(w.x >= 0.4);
        CHECK(w.x <= 0.5);
        REQUIRE(w.x_other);
        CHECK(*w.x_other >= 0.5);
        CHECK(*w.x_other <= 0.6);
        CHECK(w.value < w.threshold);
    }
    SUBCASE("errors") {
        PiecewiseLinearFn g({0.0, 0.5, 1.0}, {-9.0, -9.0}, {0.0, 9.0}, 0.0);
        CHECK_THROWS_AS(check_bend_condition(g, sc, ps, 4), Error);
        CHECK_THROWS_AS(check_bend_condition(g, sc, ps, 8), Error);  // no jump at x_8
    }
}

TEST_CASE("f is strictly admissible with the induced Gamma sets") {
    std::mt19937_64 rng(37);
    for (int t : {2, 3}) {
        const auto sc = make_scale(3.0, t);
        for (int trial = 0; trial < (t == 2 ? 300 : 100); ++trial) {
            const auto ps = make_point_set(oracle::uniform_points(rng, sc.N));
            const auto f = build_f(ps, sc);
            const auto gs = gamma_sets_from(ps, sc);
            CHECK(gs.gamma.size() == sc.N - 1);
            CHECK(gs.gamma1.size() == sc.N - 2 * sc.n0);
            CHECK(gs.gamma2.size() == sc.n0 - 1);
            CHECK(check_strict_admissibility(f, sc, gs).all_pass());
        }
    }
}

TEST_CASE("strict admissibility violations") {
    const auto sc = make_scale(3.0, 1);
    const GammaSets gs{{0.3, 0.6}, {0.3}, {}};

    SUBCASE("jump outside Gamma") {
        PiecewiseLinearFn g({0.0, 0.3, 0.9, 1.0}, {-3.0, -3.0, -3.0}, {0.0, 1.0, 2.0}, 0.0);
        const auto r = check_strict_admissibility(g, sc, gs);
        CHECK_FALSE(r.passed("vi'.a"));
        CHECK(r.find("vi'.a")->witness->x == 0.9);
        CHECK(r.passed("vi'.b"));
    }
    SUBCASE("Gamma1 jump below one") {
        PiecewiseLinearFn g({0.0, 0.3, 1.0}, {-1.0, -1.0}, {0.0, 0.5}, 0.5);
        const auto r = check_strict_admissibility(g, sc, gs);
        CHECK_FALSE(r.passed("vi'.b"));
        CHECK(r.find("vi'.b")->witness->value == 0.5);
    }
    SUBCASE("malformed sets") {
        const auto g = PiecewiseLinearFn();
        CHECK_THROWS_AS(check_strict_admissibility(g, sc, {{0.3}, {0.3}, {}}), Error);
        CHECK_THROWS_AS(check_strict_admissibility(g, sc, {{0.3, 0.6}, {0.7}, {}}), Error);
        CHECK_THROWS_AS(check_strict_admissibility(g, sc, {{0.3, 0.3}, {0.3}, {}}), Error);
        const auto sc2 = make_scale(3.0, 2);
        const GammaSets overlap{{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}, {0.1, 0.2, 0.3}, {0.3, 0.4}};
        CHECK_THROWS_AS(check_strict_admissibility(g, sc2, overlap), Error);
    }
}
