#include "stardisc/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "stardisc/discrepancy.hpp"
#include "stardisc/error.hpp"

namespace stardisc {

namespace {

// Values of f are O(N); allow for accumulated rounding in envelope arithmetic.
constexpr double kCheckTol = 1e-9;

ClauseResult pass(std::string id) { return {std::move(id), ClauseStatus::pass, std::nullopt}; }
ClauseResult skipped(std::string id) { return {std::move(id), ClauseStatus::skipped, std::nullopt}; }
ClauseResult fail(std::string id, Witness w) { return {std::move(id), ClauseStatus::fail, w}; }

ClauseResult check_endpoints(const PiecewiseLinearFn& f) {
    const auto b = f.breakpoints();
    const double at0 = f.anchor();
    const double at1 = f.left_value(b.size() - 1);
    if (std::abs(at0) > kCheckTol) return fail("i", {0.0, at0, 0.0, std::nullopt});
    if (std::abs(at1) > kCheckTol) return fail("i", {1.0, at1, 0.0, std::nullopt});
    return pass("i");
}

ClauseResult check_magnitude(const PiecewiseLinearFn& f, const ScaleParams& sc) {
    const double cap = sc.a_pow_t();
    const auto b = f.breakpoints();
    for (std::size_t k = 0; k < b.size(); ++k)
        for (double v : {f.left_value(k), f.right_value(k)})
            if (std::abs(v) > cap + kCheckTol) return fail("ii", {b[k], v, cap, std::nullopt});
    return pass("ii");
}

ClauseResult check_jump_signs(const PiecewiseLinearFn& f) {
    const auto b = f.breakpoints();
    const auto j = f.jumps();
    for (std::size_t k = 0; k < j.size(); ++k)
        if (j[k] < -kCheckTol) return fail("iii", {b[k], j[k], 0.0, std::nullopt});
    return pass("iii");
}

ClauseResult check_slope_range(const PiecewiseLinearFn& f, const ScaleParams& sc) {
    if (!sc.integer_exact) return skipped("iv");
    const auto b = f.breakpoints();
    const auto s = f.slopes();
    const double steepest = -sc.a_pow_t();
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < steepest - kCheckTol) return fail("iv", {b[k], s[k], steepest, std::nullopt});
        if (s[k] > sc.s0 + kCheckTol) return fail("iv", {b[k], s[k], sc.s0, std::nullopt});
    }
    return pass("iv");
}

ClauseResult check_slope_variation(const PiecewiseLinearFn& f, const ScaleParams& sc) {
    if (!sc.integer_exact) return skipped("v");
    const auto b = f.breakpoints();
    const auto s = f.slopes();
    const auto j = f.jumps();
    const double cap = sc.a_pow_t1();
    double lo = s[0];
    double hi = s[0];
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (std::abs(j[k]) > kCheckTol) {
            lo = hi = s[k];
            continue;
        }
        lo = std::min(lo, s[k]);
        hi = std::max(hi, s[k]);
        if (hi - lo > cap + kCheckTol) return fail("v", {b[k], hi - lo, cap, std::nullopt});
    }
    return pass("v");
}

std::vector<ClauseResult> generic_clauses(const PiecewiseLinearFn& f, const ScaleParams& sc) {
    return {check_endpoints(f), check_magnitude(f, sc), check_jump_signs(f), check_slope_range(f, sc),
            check_slope_variation(f, sc)};
}

// Back-line test shared by the bend condition and clause (vi'.c).
//
// If some x_bar in (center, right) sits on a segment with slope > s0 - index,
// then every x_low in [left, center) must satisfy
//   f(x_low) >= f(x_bar) - s0 (x_bar - x_low),
// i.e. u(x_low) >= u(x_bar) with u(x) = f(x) - s0 x. Both sides are affine per
// segment, so comparing the extreme one-sided limits and midpoints is exact.
//
// At x_low == left the right limit is used: the left-continuous value there
// sits before the jump at `left`, which the inequality does not cover.
ClauseResult back_line_test(const std::string& id, const PiecewiseLinearFn& f, double s0, double index,
                            double left, double center, double right) {
    const double pts[] = {left, center, right};
    const auto g = f.refined(pts);
    const auto b = g.breakpoints();
    const auto s = g.slopes();
    auto u = [s0](double x, double v) { return v - s0 * x; };

    const double threshold = s0 - index;
    double u_max = -std::numeric_limits<double>::infinity();
    double x_bar = center;
    double f_bar = 0.0;
    auto consider_bar = [&](double x, double v) {
        if (u(x, v) > u_max) {
            u_max = u(x, v);
            x_bar = x;
            f_bar = v;
        }
    };
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (b[k] < center || b[k + 1] > right) continue;
        if (!(s[k] > threshold + kCheckTol)) continue;
        const double v0 = g.right_value(k);
        const double mid = 0.5 * (b[k] + b[k + 1]);
        consider_bar(b[k], v0);
        consider_bar(mid, v0 + s[k] * (mid - b[k]));
        consider_bar(b[k + 1], g.left_value(k + 1));
    }
    if (u_max == -std::numeric_limits<double>::infinity()) return pass(id);  // hypothesis never fires

    double u_min = std::numeric_limits<double>::infinity();
    double x_low = left;
    double f_low = 0.0;
    auto consider_low = [&](double x, double v) {
        if (u(x, v) < u_min) {
            u_min = u(x, v);
            x_low = x;
            f_low = v;
        }
    };
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (b[k] < left || b[k + 1] > center) continue;
        const double v0 = g.right_value(k);
        const double mid = 0.5 * (b[k] + b[k + 1]);
        consider_low(b[k], v0);
        consider_low(mid, v0 + s[k] * (mid - b[k]));
        consider_low(b[k + 1], g.left_value(k + 1));
    }
    if (u_min >= u_max - kCheckTol) return pass(id);
    return fail(id, {x_low, f_low, f_bar - s0 * (x_bar - x_low), x_bar});
}

void require_integer_structure(const ScaleParams& sc) {
    if (sc.N < 2 * sc.n0) throw Error(ErrorKind::malformed, "scale has overlapping A0/A2");
}

}  // namespace

double ScaleParams::a_pow_t() const { return std::pow(a, t); }
double ScaleParams::a_pow_t1() const { return std::pow(a, t - 1); }

ScaleParams make_scale(double a, int t) {
    if (!(a >= 3.0 && a <= 3.7)) throw Error(ErrorKind::out_of_range, "a must lie in [3, 3.7]");
    if (t < 1) throw Error(ErrorKind::out_of_range, "t must be at least 1");
    ScaleParams sc;
    sc.a = a;
    sc.t = t;
    // nudge guards against pow returning k - ulp for exact integer powers
    sc.N = static_cast<std::size_t>(std::floor(std::pow(a, t) * (1.0 + 1e-14)));
    sc.n0 = static_cast<std::size_t>(std::floor(std::pow(a, t - 1) * (1.0 + 1e-14)));
    sc.abs_s0 = std::pow(a, t - 1) * (a - 2.0);
    sc.s0 = -sc.abs_s0;
    sc.integer_exact = a == 3.0;
    return sc;
}

bool PropertyReport::all_pass() const {
    return std::none_of(clauses.begin(), clauses.end(),
                        [](const ClauseResult& c) { return c.status == ClauseStatus::fail; });
}

const ClauseResult* PropertyReport::find(const std::string& id) const {
    auto it = std::find_if(clauses.begin(), clauses.end(), [&](const ClauseResult& c) { return c.id == id; });
    return it == clauses.end() ? nullptr : &*it;
}

bool PropertyReport::passed(const std::string& id) const {
    const auto* c = find(id);
    return c != nullptr && c->status == ClauseStatus::pass;
}

double jump_at(const PiecewiseLinearFn& g, double x) {
    const auto b = g.breakpoints();
    auto it = std::lower_bound(b.begin(), b.end(), x);
    if (it == b.end() || *it != x || it == b.end() - 1) return 0.0;
    return g.jumps()[static_cast<std::size_t>(it - b.begin())];
}

PiecewiseLinearFn build_f(const PointSet& ps, const ScaleParams& sc) {
    if (ps.size() != sc.N)
        throw Error(ErrorKind::size_mismatch,
                    "expected " + std::to_string(sc.N) + " points, got " + std::to_string(ps.size()));
    require_integer_structure(sc);
    std::vector<PiecewiseLinearFn> low;
    std::vector<PiecewiseLinearFn> high;
    for (std::size_t n = 1; n <= sc.N; ++n) {
        if (sc.in_A0(n)) low.push_back(discrepancy_function(ps, n).values);
        if (sc.in_A2(n)) high.push_back(discrepancy_function(ps, n).values);
    }
    return upper_envelope(high) - upper_envelope(low);
}

PropertyReport check_properties(const PiecewiseLinearFn& f, const ScaleParams& sc, const PointSet& ps) {
    PropertyReport report{generic_clauses(f, sc)};

    ClauseResult vi = pass("vi");
    for (std::size_t i = 1; i <= ps.size() && i <= sc.N; ++i) {
        if (!sc.in_A1(i)) continue;
        const double h = jump_at(f, ps[i - 1]);
        if (h < 1.0 - kCheckTol) {
            vi = fail("vi", {ps[i - 1], h, 1.0, std::nullopt});
            break;
        }
    }
    report.clauses.push_back(vi);

    const double h1 = jump_at(f, ps[0]);
    report.clauses.push_back(std::abs(h1) <= kCheckTol ? pass("continuity_x1")
                                                       : fail("continuity_x1", {ps[0], h1, 0.0, std::nullopt}));
    return report;
}

std::vector<std::size_t> bend_eligible_indices(const PiecewiseLinearFn& f, const ScaleParams& sc,
                                               const PointSet& ps) {
    std::vector<std::size_t> out;
    for (std::size_t j = sc.N - sc.n0 + 1; j <= sc.N && j <= ps.size(); ++j)
        if (jump_at(f, ps[j - 1]) > kCheckTol) out.push_back(j);
    return out;
}

PropertyReport check_bend_condition(const PiecewiseLinearFn& f, const ScaleParams& sc, const PointSet& ps,
                                    std::size_t j) {
    if (!sc.in_A2(j) || j > ps.size())
        throw Error(ErrorKind::out_of_range, "index " + std::to_string(j) + " is not in A2");
    const double xj = ps[j - 1];
    if (!(jump_at(f, xj) > kCheckTol))
        throw Error(ErrorKind::malformed, "f has no discontinuity at x_" + std::to_string(j));
    double left = 0.0;
    double right = 1.0;
    for (double v : ps.values()) {
        if (v < xj) left = std::max(left, v);
        if (v > xj) right = std::min(right, v);
    }
    const double k = static_cast<double>(j - (sc.N - sc.n0));
    return {{back_line_test("bend", f, sc.s0, k, left, xj, right)}};
}

GammaSets gamma_sets_from(const PointSet& ps, const ScaleParams& sc) {
    if (ps.size() != sc.N) throw Error(ErrorKind::size_mismatch, "point set does not match scale");
    GammaSets gs;
    for (std::size_t i = 2; i <= sc.N; ++i) gs.gamma.push_back(ps[i - 1]);
    for (std::size_t i = 1; i <= sc.N; ++i)
        if (sc.in_A1(i)) gs.gamma1.push_back(ps[i - 1]);
    for (std::size_t k = 1; k < sc.n0; ++k) gs.gamma2.push_back(ps[sc.N - sc.n0 + k - 1]);
    return gs;
}

PropertyReport check_strict_admissibility(const PiecewiseLinearFn& g, const ScaleParams& sc,
                                          const GammaSets& gs) {
    require_integer_structure(sc);
    if (gs.gamma.size() != sc.N - 1 || gs.gamma1.size() != sc.N - 2 * sc.n0 || gs.gamma2.size() != sc.n0 - 1)
        throw Error(ErrorKind::malformed, "Gamma cardinalities do not match the scale");
    std::vector<double> gamma = gs.gamma;
    std::sort(gamma.begin(), gamma.end());
    if (std::adjacent_find(gamma.begin(), gamma.end()) != gamma.end())
        throw Error(ErrorKind::malformed, "Gamma has repeated points");
    if (!gamma.empty() && (gamma.front() < 0.0 || gamma.back() >= 1.0))
        throw Error(ErrorKind::malformed, "Gamma must lie in [0,1)");
    auto in_gamma = [&](double x) { return std::binary_search(gamma.begin(), gamma.end(), x); };
    std::set<double> seen;
    for (const auto* part : {&gs.gamma1, &gs.gamma2})
        for (double x : *part) {
            if (!in_gamma(x)) throw Error(ErrorKind::malformed, "Gamma1/Gamma2 point outside Gamma");
            if (!seen.insert(x).second) throw Error(ErrorKind::malformed, "Gamma1 and Gamma2 overlap");
        }

    PropertyReport report{generic_clauses(g, sc)};

    ClauseResult a = pass("vi'.a");
    const auto b = g.breakpoints();
    const auto jumps = g.jumps();
    for (std::size_t k = 0; k < jumps.size(); ++k)
        if (std::abs(jumps[k]) > kCheckTol && !in_gamma(b[k])) {
            a = fail("vi'.a", {b[k], jumps[k], 0.0, std::nullopt});
            break;
        }
    report.clauses.push_back(a);

    ClauseResult bb = pass("vi'.b");
    for (double x : gs.gamma1) {
        const double h = jump_at(g, x);
        if (h < 1.0 - kCheckTol) {
            bb = fail("vi'.b", {x, h, 1.0, std::nullopt});
            break;
        }
    }
    report.clauses.push_back(bb);

    ClauseResult c = pass("vi'.c");
    for (std::size_t n = 1; n <= gs.gamma2.size(); ++n) {
        const double xi = gs.gamma2[n - 1];
        auto it = std::lower_bound(gamma.begin(), gamma.end(), xi);
        const double left = it == gamma.begin() ? 0.0 : *(it - 1);
        const double right = it + 1 == gamma.end() ? 1.0 : *(it + 1);
        auto r = back_line_test("vi'.c", g, sc.s0, static_cast<double>(n), left, xi, right);
        if (r.status == ClauseStatus::fail) {
            c = r;
            break;
        }
    }
    report.clauses.push_back(c);
    return report;
}

}  // namespace stardisc
