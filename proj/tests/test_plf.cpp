#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stardisc/error.hpp"
#include "stardisc/plf.hpp"

using namespace stardisc;

namespace {

PiecewiseLinearFn random_plf(std::mt19937_64& rng, int segments) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> b{0.0};
    for (int i = 0; i + 1 < segments; ++i) b.push_back(u(rng));
    b.push_back(1.0);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    std::vector<double> slopes, jumps;
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
        slopes.push_back(8.0 * u(rng) - 4.0);
        jumps.push_back(u(rng) < 0.5 ? 0.0 : 2.0 * u(rng) - 1.0);
    }
    return {b, slopes, jumps, 2.0 * u(rng) - 1.0};
}

}  // namespace

TEST_CASE("evaluation is left-continuous") {
    PiecewiseLinearFn g({0.0, 0.5, 1.0}, {-2.0, -2.0}, {0.0, 2.0}, 0.0);
    CHECK(g(0.0) == 0.0);
    CHECK(g(0.5) == doctest::Approx(-1.0));  // left limit
    CHECK(g(0.5 + 1e-12) == doctest::Approx(1.0));
    CHECK(g(1.0) == doctest::Approx(0.0));
    CHECK(g.right_value(1) == doctest::Approx(1.0));
}

TEST_CASE("malformed breakpoints are rejected") {
    CHECK_THROWS_AS(PiecewiseLinearFn({0.0, 0.6, 0.4, 1.0}, {0, 0, 0}, {0, 0, 0}, 0.0), Error);
    CHECK_THROWS_AS(PiecewiseLinearFn({0.1, 1.0}, {0}, {0}, 0.0), Error);
    CHECK_THROWS_AS(PiecewiseLinearFn({0.0, 1.0}, {0, 1}, {0}, 0.0), Error);
}

TEST_CASE("integral_abs examples") {
    CHECK(integral_abs(PiecewiseLinearFn()) == 0.0);
    CHECK(integral_abs(PiecewiseLinearFn::linear(1.0, -2.0)) == doctest::Approx(0.5).epsilon(1e-15));
    // 0 -> -1 on [0, .5], jump +2, 1 -> 0 on (.5, 1]: two triangles of area 1/4
    PiecewiseLinearFn g({0.0, 0.5, 1.0}, {-2.0, -2.0}, {0.0, 2.0}, 0.0);
    CHECK(integral_abs(g) == doctest::Approx(0.5).epsilon(1e-15));
    // with anchor 1 the same slopes give 1 -> 0, jump to 2, 2 -> 1: area 1/4 + 3/4
    PiecewiseLinearFn h({0.0, 0.5, 1.0}, {-2.0, -2.0}, {0.0, 2.0}, 1.0);
    CHECK(integral_abs(h) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("integral_abs agrees with quadrature on random functions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = random_plf(rng, 7);
        const double q = oracle::midpoint_quadrature([&](double x) { return std::abs(g(x)); }, 200000);
        CHECK(std::abs(integral_abs(g) - q) <= 1e-4);  // jumps cost O(h) in the midpoint rule
    }
}

TEST_CASE("integral_abs is invariant under breakpoint refinement") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_plf(rng, 6);
        std::vector<double> extra(5);
        for (auto& x : extra) x = u(rng);
        const auto r = g.refined(extra);
        CHECK(r.segment_count() >= g.segment_count());
        CHECK(integral_abs(r) == doctest::Approx(integral_abs(g)).epsilon(1e-12));
        for (double x : extra) CHECK(r(x) == doctest::Approx(g(x)).epsilon(1e-12));
    }
}

TEST_CASE("envelopes and differences match pointwise arithmetic") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_plf(rng, 5);
        const auto g = random_plf(rng, 5);
        const auto hi = upper_envelope(f, g);
        const auto lo = lower_envelope(f, g);
        const auto d = f - g;
        const auto s = f + g;
        for (int i = 0; i < 100; ++i) {
            const double x = u(rng);
            CHECK(hi(x) == doctest::Approx(std::max(f(x), g(x))).epsilon(1e-12));
            CHECK(lo(x) == doctest::Approx(std::min(f(x), g(x))).epsilon(1e-12));
            CHECK(d(x) == doctest::Approx(f(x) - g(x)).epsilon(1e-12));
            CHECK(s(x) == doctest::Approx(f(x) + g(x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("envelope of a family") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<PiecewiseLinearFn> fs;
    for (int i = 0; i < 9; ++i) fs.push_back(random_plf(rng, 4));
    const auto hi = upper_envelope(fs);
    const auto lo = lower_envelope(fs);
    for (int i = 0; i < 500; ++i) {
        const double x = u(rng);
        double want_hi = -1e300, want_lo = 1e300;
        for (const auto& f : fs) {
            want_hi = std::max(want_hi, f(x));
            want_lo = std::min(want_lo, f(x));
        }
        CHECK(hi(x) == doctest::Approx(want_hi).epsilon(1e-12));
        CHECK(lo(x) == doctest::Approx(want_lo).epsilon(1e-12));
    }
    CHECK_THROWS_AS(upper_envelope(std::span<const PiecewiseLinearFn>{}), Error);
}

TEST_CASE("nearly coincident crossing keeps the right winner") {
    // f and g meet one ulp right of 0.5; g dominates on the rest of the segment
    const double x0 = 0.5;
    PiecewiseLinearFn f({0.0, x0, 1.0}, {0.0, -1.0}, {0.0, 0.0}, 0.0);
    PiecewiseLinearFn g({0.0, 1.0}, {-1.0e-17}, {0.0}, 0.0);
    const auto hi = upper_envelope(f, g);
    CHECK(hi(0.75) == doctest::Approx(g(0.75)));
}

TEST_CASE("signed jumps are representable and detectable") {
    PiecewiseLinearFn g({0.0, 0.5, 1.0}, {0.0, 0.0}, {0.0, -1.0}, 0.0);
    CHECK_FALSE(g.has_nonnegative_jumps());
    CHECK(PiecewiseLinearFn().has_nonnegative_jumps());
}
