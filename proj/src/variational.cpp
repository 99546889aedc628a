#include "stardisc/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "stardisc/bounds.hpp"
#include "stardisc/error.hpp"

namespace stardisc {

namespace {

void require(bool ok, ErrorKind kind, const char* what) {
    if (!ok) throw Error(kind, what);
}

double q2_coefficient(double abs_s0, double n) { return abs_s0 * (n + abs_s0) / (2.0 * (n + 2.0 * abs_s0)); }

// One candidate shape on [0, L]: slope -left on [0, gamma], then slope -r1 on
// (gamma, brk] and -r2 on (brk, L], with the jump sized so that g(L) = 0.
struct Shape {
    double gamma;
    double brk;
    double left;
    double r1;
    double r2;
};

// Absolute integral of a shape, or +inf when it violates the bend condition.
// u(x) = g(x) + |s0| x must not dip, on [0, gamma), below its value at any
// x_bar right of the jump whose slope is shallower than s0 - n.
double shape_cost(const Shape& sh, double L, double abs_s0, double n) {
    const double len1 = sh.brk - sh.gamma;
    const double len2 = L - sh.brk;
    const double h2 = sh.r2 * len2;       // g at brk
    const double h1 = h2 + sh.r1 * len1;  // g just right of gamma
    const double trigger = abs_s0 + n;
    constexpr double eps = 1e-12;

    double u_bar = -std::numeric_limits<double>::infinity();
    if (len1 > 0.0 && sh.r1 < trigger - eps) u_bar = std::max({u_bar, h1 + abs_s0 * sh.gamma, h2 + abs_s0 * sh.brk});
    if (len2 > 0.0 && sh.r2 < trigger - eps) u_bar = std::max({u_bar, h2 + abs_s0 * sh.brk, abs_s0 * L});
    if (u_bar > -std::numeric_limits<double>::infinity()) {
        // u on the left branch is affine: (|s0| - left) x on [0, gamma)
        const double u_low = std::min(0.0, (abs_s0 - sh.left) * sh.gamma);
        if (u_low < u_bar - eps) return std::numeric_limits<double>::infinity();
    }
    const double left_area = 0.5 * sh.left * sh.gamma * sh.gamma;
    const double right_area = 0.5 * (h1 + h2) * len1 + 0.5 * h2 * len2;
    return left_area + right_area;
}

}  // namespace

double per_interval_bound(IntervalType type, double a, int t, double L, std::optional<long> n) {
    require(a >= 3.0 && a <= 3.7, ErrorKind::out_of_range, "a must lie in [3, 3.7]");
    require(t >= 1, ErrorKind::out_of_range, "t must be at least 1");
    require(L >= 0.0, ErrorKind::out_of_range, "interval length must be nonnegative");
    const double m = std::pow(a, t - 1);
    const double abs_s0 = m * (a - 2.0);
    switch (type) {
        case IntervalType::Q0:
            require(!n, ErrorKind::malformed, "Q0 takes no index");
            return L * L * abs_s0 / 4.0;
        case IntervalType::Q1:
            require(!n, ErrorKind::malformed, "Q1 takes no index");
            return L * (4.0 - m * L) / 16.0;
        case IntervalType::Q2:
            require(n.has_value(), ErrorKind::malformed, "Q2 requires an index");
            require(*n >= 1 && static_cast<double>(*n) <= m - 1.0 + 1e-9, ErrorKind::out_of_range,
                    "Q2 index must lie in 1..a^(t-1)-1");
            return L * L * q2_coefficient(abs_s0, static_cast<double>(*n));
    }
    return 0.0;
}

double q2_shape_sweep(double a, int t, long n, double L, int grid) {
    require(a >= 3.0 && a <= 3.7, ErrorKind::out_of_range, "a must lie in [3, 3.7]");
    require(t >= 1, ErrorKind::out_of_range, "t must be at least 1");
    require(grid >= 100, ErrorKind::out_of_range, "grid must be at least 100");
    require(n >= 1, ErrorKind::out_of_range, "bend index must be positive");
    require(L >= 0.0, ErrorKind::invalid_domain, "interval length must be nonnegative");
    if (L == 0.0) return 0.0;

    const double m = std::pow(a, t - 1);
    const double abs_s0 = m * (a - 2.0);
    const double steep = std::pow(a, t);
    const double dn = static_cast<double>(n);

    // slope magnitudes: a uniform ladder over [|s0|, a^t] plus the trigger value
    constexpr int kLadder = 12;
    std::vector<double> mags;
    for (int i = 0; i <= kLadder; ++i) mags.push_back(abs_s0 + (steep - abs_s0) * i / kLadder);
    if (abs_s0 + dn <= steep) mags.push_back(abs_s0 + dn);
    std::sort(mags.begin(), mags.end());
    mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
    const double break_fracs[] = {0.0, 0.25, 0.5, 0.75};

    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i < grid; ++i) {
        const double gamma = L * i / grid;
        for (double left : mags)
            for (double frac : break_fracs) {
                const double brk = gamma + frac * (L - gamma);
                for (double r1 : mags)
                    for (double r2 : mags) {
                        if (frac == 0.0 && r1 != r2) continue;
                        if (std::abs(r1 - r2) > m + 1e-12) continue;  // slope change on a continuous stretch
                        best = std::min(best, shape_cost({gamma, brk, left, r1, r2}, L, abs_s0, dn));
                    }
            }
    }
    return best;
}

ProfileProblem make_profile_problem(double a, int t) {
    require(a >= 3.0 && a <= 3.7, ErrorKind::out_of_range, "a must lie in [3, 3.7]");
    require(t >= 1, ErrorKind::out_of_range, "t must be at least 1");
    ProfileProblem p;
    p.a = a;
    p.t = t;
    p.m = std::pow(a, t - 1);
    const double abs_s0 = p.m * (a - 2.0);
    p.count0 = p.m;
    p.count1 = abs_s0;
    p.A0 = abs_s0 / 4.0;
    const double members = p.m - 1.0;
    const auto whole = static_cast<long>(std::ceil(members - 1e-9));
    for (long n = 1; n <= whole; ++n) {
        p.An.push_back(q2_coefficient(abs_s0, static_cast<double>(n)));
        p.weights.push_back(std::min(1.0, members - static_cast<double>(n - 1)));
    }
    const auto box = chi_bounds(a, t);
    p.chi_min = box.chi_min;
    p.chi_max = box.chi_max;
    if (p.count1 * p.chi_max >= 1.0) throw Error(ErrorKind::invalid_domain, "chi1 box is infeasible");
    return p;
}

double profile_objective(const ProfileProblem& p, double chi0, double chi1, const std::vector<double>& chi2) {
    double v = p.count0 * p.A0 * chi0 * chi0 + p.count1 * chi1 * (4.0 - p.m * chi1) / 16.0;
    for (std::size_t n = 0; n < chi2.size(); ++n) v += p.weights[n] * p.An[n] * chi2[n] * chi2[n];
    return v;
}

double constraint_residual(const ProfileProblem& p, const ProfileLengths& x) {
    double total = p.count0 * x.chi0 + p.count1 * x.chi1;
    for (std::size_t n = 0; n < x.chi2.size(); ++n) total += p.weights[n] * x.chi2[n];
    return total - 1.0;
}

ProfileLengths solve_kkt(const ProfileProblem& p) {
    double denom = p.count0;
    for (std::size_t n = 0; n < p.An.size(); ++n) denom += p.weights[n] * p.A0 / p.An[n];

    // reduced objective in chi1: A0 (1 - count1 chi1)^2 / denom + count1 chi1 (4 - m chi1) / 16
    auto reduced = [&](double c) {
        const double r = 1.0 - p.count1 * c;
        return p.A0 * r * r / denom + p.count1 * c * (4.0 - p.m * c) / 16.0;
    };
    const double lead = p.A0 * p.count1 * p.count1 / denom - p.count1 * p.m / 16.0;
    const double lin = -2.0 * p.A0 * p.count1 / denom + p.count1 / 4.0;
    double chi1;
    if (lead > 0.0) {
        chi1 = std::clamp(-lin / (2.0 * lead), p.chi_min, p.chi_max);
    } else {
        constexpr int kSteps = 10000;
        chi1 = p.chi_min;
        for (int i = 1; i <= kSteps; ++i) {
            const double c = p.chi_min + (p.chi_max - p.chi_min) * i / kSteps;
            if (reduced(c) < reduced(chi1)) chi1 = c;
        }
    }

    ProfileLengths x;
    x.chi1 = chi1;
    x.chi0 = (1.0 - p.count1 * chi1) / denom;
    x.chi2.resize(p.An.size());
    for (std::size_t n = 0; n < p.An.size(); ++n) x.chi2[n] = p.A0 * x.chi0 / p.An[n];
    x.objective = profile_objective(p, x.chi0, x.chi1, x.chi2);
    return x;
}

ProfileLengths solve_projected_gradient(const ProfileProblem& p, std::uint64_t seed, int max_iter) {
    // variables: [chi0, chi1, chi2_1 .. chi2_M]
    const std::size_t dim = 2 + p.An.size();
    std::vector<double> w(dim), curv(dim), lo(dim, 0.0), hi(dim, std::numeric_limits<double>::infinity());
    w[0] = p.count0;
    w[1] = p.count1;
    curv[0] = 2.0 * p.count0 * p.A0;
    curv[1] = 2.0 * p.count1 * p.m / 16.0;  // |second derivative| of the concave Q1 term
    lo[1] = p.chi_min;
    hi[1] = p.chi_max;
    for (std::size_t n = 0; n < p.An.size(); ++n) {
        w[2 + n] = p.weights[n];
        curv[2 + n] = 2.0 * p.weights[n] * p.An[n];
    }

    auto objective = [&](const std::vector<double>& x) {
        return profile_objective(p, x[0], x[1], std::vector<double>(x.begin() + 2, x.end()));
    };
    auto gradient = [&](const std::vector<double>& x) {
        std::vector<double> g(dim);
        g[0] = 2.0 * p.count0 * p.A0 * x[0];
        g[1] = p.count1 * (4.0 - 2.0 * p.m * x[1]) / 16.0;
        for (std::size_t n = 0; n < p.An.size(); ++n) g[2 + n] = 2.0 * p.weights[n] * p.An[n] * x[2 + n];
        return g;
    };
    // projection in the curv-weighted metric: x_i = clamp(y_i - lambda w_i / curv_i)
    auto project = [&](const std::vector<double>& y) {
        auto at = [&](double lambda, std::vector<double>& x) {
            double total = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                x[i] = std::clamp(y[i] - lambda * w[i] / curv[i], lo[i], hi[i]);
                total += w[i] * x[i];
            }
            return total;
        };
        std::vector<double> x(dim);
        double l_lo = -1.0;
        double l_hi = 1.0;
        while (at(l_lo, x) < 1.0) l_lo *= 2.0;
        while (at(l_hi, x) > 1.0) l_hi *= 2.0;
        for (int it = 0; it < 200 && l_hi - l_lo > 1e-300; ++it) {
            const double mid = 0.5 * (l_lo + l_hi);
            if (mid == l_lo || mid == l_hi) break;
            if (at(mid, x) > 1.0) l_lo = mid;
            else l_hi = mid;
        }
        at(0.5 * (l_lo + l_hi), x);
        return x;
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = unit(rng) / static_cast<double>(dim);
    x[1] = p.chi_min + unit(rng) * (p.chi_max - p.chi_min);
    x = project(x);
    double fx = objective(x);

    for (int iter = 0; iter < max_iter; ++iter) {
        const auto g = gradient(x);
        double step = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
            std::vector<double> y(dim);
            for (std::size_t i = 0; i < dim; ++i) y[i] = x[i] - step * g[i] / curv[i];
            auto cand = project(y);
            double decrease = 0.0;
            for (std::size_t i = 0; i < dim; ++i) decrease += g[i] * (x[i] - cand[i]);
            const double fc = objective(cand);
            if (fc <= fx - 1e-4 * decrease) {
                moved = fc < fx;
                const double gain = fx - fc;
                x = std::move(cand);
                fx = fc;
                if (gain <= 1e-16 * std::max(1.0, std::abs(fx))) moved = false;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }

    ProfileLengths out;
    out.chi0 = x[0];
    out.chi1 = x[1];
    out.chi2.assign(x.begin() + 2, x.end());
    out.objective = fx;
    return out;
}

ProfileLengths solve_profile_qp(double a, int t) { return solve_kkt(make_profile_problem(a, t)); }

ProfileSolution solve_profile_qp_checked(double a, int t, int starts, std::uint64_t seed) {
    const auto p = make_profile_problem(a, t);
    ProfileSolution out;
    out.kkt = solve_kkt(p);
    for (int s = 0; s < starts; ++s) {
        const auto r = solve_projected_gradient(p, seed + static_cast<std::uint64_t>(s));
        out.pgd_objectives.push_back(r.objective);
        out.max_disagreement = std::max(out.max_disagreement, std::abs(r.objective - out.kkt.objective));
    }
    return out;
}

std::vector<GapRecord> qp_gap_report(double a, int t_lo, int t_hi) {
    require(t_lo >= 1 && t_lo <= t_hi, ErrorKind::out_of_range, "invalid t range");
    std::vector<GapRecord> out;
    const double closed = strict_bound(a);
    for (int t = t_lo; t <= t_hi; ++t) {
        const auto sol = solve_profile_qp(a, t);
        out.push_back({t, sol.objective, closed, sol.objective - closed});
    }
    return out;
}

}  // namespace stardisc
