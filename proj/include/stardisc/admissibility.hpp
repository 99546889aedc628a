#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stardisc/plf.hpp"
#include "stardisc/point_set.hpp"

namespace stardisc {

// Two-scale parameters: N = floor(a^t) points, the first n0 = floor(a^(t-1))
// indices form A0, the last n0 form A2, the rest A1. Indices are 1-based.
struct ScaleParams {
    double a = 3.0;
    int t = 1;
    std::size_t N = 0;
    std::size_t n0 = 0;
    double s0 = 0.0;      // -a^(t-1)(a-2), the shallow slope threshold
    double abs_s0 = 0.0;  // a^(t-1)(a-2)
    bool integer_exact = false;

    double a_pow_t() const;
    double a_pow_t1() const;
    bool in_A0(std::size_t i) const { return i >= 1 && i <= n0; }
    bool in_A2(std::size_t i) const { return i > N - n0 && i <= N; }
    bool in_A1(std::size_t i) const { return i > n0 && i <= N - n0; }
};

// Throws Error{out_of_range} unless 3 <= a <= 3.7 and t >= 1.
ScaleParams make_scale(double a, int t);

// Jump-location structure of a strictly admissible function. gamma2 is
// ordered: gamma2[n-1] is the point carrying bend index n.
struct GammaSets {
    std::vector<double> gamma;
    std::vector<double> gamma1;
    std::vector<double> gamma2;
};

enum class ClauseStatus { pass, fail, skipped };

struct Witness {
    double x = 0.0;
    double value = 0.0;
    double threshold = 0.0;
    std::optional<double> x_other;  // x-bar for bend-condition violations
};

struct ClauseResult {
    std::string id;
    ClauseStatus status = ClauseStatus::pass;
    std::optional<Witness> witness;
};

struct PropertyReport {
    std::vector<ClauseResult> clauses;

    bool all_pass() const;
    const ClauseResult* find(const std::string& id) const;
    bool passed(const std::string& id) const;
};

// max_{n in A2} D_n - max_{n in A0} D_n. Throws Error{size_mismatch}.
PiecewiseLinearFn build_f(const PointSet& ps, const ScaleParams& sc);

// Clauses i, ii, iii, iv, v, vi and continuity at x_1. Clauses iv and v use
// integer cardinalities and are skipped outside integer-exact mode.
PropertyReport check_properties(const PiecewiseLinearFn& f, const ScaleParams& sc, const PointSet& ps);

// Bend condition at x_j for j in A2 (1-based). Throws Error{out_of_range}
// when j is not in A2 and Error{malformed} when f does not jump at x_j.
PropertyReport check_bend_condition(const PiecewiseLinearFn& f, const ScaleParams& sc, const PointSet& ps,
                                    std::size_t j);

// Indices j in A2 at which f jumps.
std::vector<std::size_t> bend_eligible_indices(const PiecewiseLinearFn& f, const ScaleParams& sc,
                                               const PointSet& ps);

// Throws Error{malformed} on wrong cardinalities, overlaps or stray points.
PropertyReport check_strict_admissibility(const PiecewiseLinearFn& g, const ScaleParams& sc,
                                          const GammaSets& gs);

// Gamma = {x_2..x_N}, Gamma1 = A1 points, Gamma2 = x_{N-n0+k}, k = 1..n0-1.
GammaSets gamma_sets_from(const PointSet& ps, const ScaleParams& sc);

// Height of the jump of g at x (0 when x is not a breakpoint).
double jump_at(const PiecewiseLinearFn& g, double x);

}  // namespace stardisc
