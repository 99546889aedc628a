#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace stardisc {

enum class IntervalType { Q0, Q1, Q2 };

// Lower bound for the absolute integral over one zero-delimited interval of
// the given type and length. `n` is required for Q2 (1 <= n <= a^(t-1)-1)
// and must be absent otherwise.
double per_interval_bound(IntervalType type, double a, int t, double L, std::optional<long> n = std::nullopt);

// Brute-force minimum of the absolute integral over single-jump shapes on
// [0, L] that vanish at both ends, have slopes in [-a^t, s0], and satisfy the
// bend condition with index n. Jump positions step by L/grid.
double q2_shape_sweep(double a, int t, long n, double L, int grid);

// Separable quadratic program over interval-length profiles:
//   minimise count0*A0*chi0^2 + count1*chi1(4 - m chi1)/16 + sum_n w_n A_n chi2_n^2
//   subject to count0*chi0 + count1*chi1 + sum_n w_n chi2_n = 1,
//              chi0, chi2_n >= 0, chi_min <= chi1 <= chi_max,
// with m = a^(t-1), count0 = m, count1 = m(a-2). For non-integer m the Q2
// family has ceil(m-1) members and the last carries fractional weight.
struct ProfileProblem {
    double a = 3.0;
    int t = 1;
    double m = 1.0;
    double count0 = 0.0;
    double count1 = 0.0;
    double A0 = 0.0;
    std::vector<double> An;
    std::vector<double> weights;
    double chi_min = 0.0;
    double chi_max = 0.0;
};

ProfileProblem make_profile_problem(double a, int t);

struct ProfileLengths {
    double chi0 = 0.0;
    double chi1 = 0.0;
    std::vector<double> chi2;
    double objective = 0.0;
};

double profile_objective(const ProfileProblem& p, double chi0, double chi1, const std::vector<double>& chi2);
double constraint_residual(const ProfileProblem& p, const ProfileLengths& x);

// Closed-form KKT solution: equal A-weighted lengths, then a 1-D convex
// minimisation in chi1 over its box (grid search if the reduced quadratic is
// not convex).
ProfileLengths solve_kkt(const ProfileProblem& p);

// Diagonally scaled projected-gradient descent from a random feasible start.
ProfileLengths solve_projected_gradient(const ProfileProblem& p, std::uint64_t seed, int max_iter = 20000);

struct ProfileSolution {
    ProfileLengths kkt;
    std::vector<double> pgd_objectives;  // one per random start
    double max_disagreement = 0.0;
};

ProfileLengths solve_profile_qp(double a, int t);
ProfileSolution solve_profile_qp_checked(double a, int t, int starts = 3, std::uint64_t seed = 1);

struct GapRecord {
    int t = 0;
    double oracle = 0.0;
    double closed_form = 0.0;
    double gap = 0.0;
};

std::vector<GapRecord> qp_gap_report(double a, int t_lo, int t_hi);

}  // namespace stardisc
