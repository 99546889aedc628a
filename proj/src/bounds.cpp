#include "stardisc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stardisc/error.hpp"

namespace stardisc {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::out_of_range, what);
}

void require_strict_domain(double a) { require(a >= 3.0 && a <= 3.7, "a must lie in [3, 3.7]"); }

double strict_numerator(double a) {
    const double L = log_tail(a);
    return (a - 2.0) * (12.0 * a + 9.0 + (a - 2.0) * (4.0 * a - 3.0) * L);
}

double strict_denominator_tail(double a) { return (a - 0.5) * (a - 0.5) * (3.0 + (a - 2.0) * log_tail(a)); }

double constant(Family family, double a) { return family_bound(family, a) / (2.0 * std::log(a)); }

constexpr int kScanPoints = 512;

}  // namespace

const char* to_string(Family f) { return f == Family::strong ? "strong" : "strict"; }

double log_tail(double a) { return std::log1p(1.0 / (a - 2.0)); }

double strong_bound(double a) {
    require(a >= 3.0 && a <= 4.0, "a must lie in [3, 4]");
    const double d = 1.0 - 2.0 * a;
    return (a - 2.0) * (8.0 * a + 3.0) / (8.0 * d * d);
}

double strict_bound(double a) {
    require_strict_domain(a);
    return strict_numerator(a) / (16.0 * strict_denominator_tail(a));
}

double strict_bound_prefactor_a(double a) {
    require_strict_domain(a);
    return strict_numerator(a) / (a * strict_denominator_tail(a));
}

double family_bound(Family family, double a) {
    return family == Family::strong ? strong_bound(a) : strict_bound(a);
}

double q_function(double a) {
    require_strict_domain(a);
    return 3.0 * a - 9.0 - (a - 1.0) * (a - 2.0) * log_tail(a);
}

ChiBounds chi_bounds(double a, int t) {
    require_strict_domain(a);
    require(t >= 1, "t must be at least 1");
    const double scale = std::pow(a, 1 - t);
    const double L = log_tail(a);
    const double denom = 29.0 + 8.0 * a * (a - 4.0) - (a - 2.0) * L;
    if (!(denom > 0.0)) throw Error(ErrorKind::invalid_domain, "chi_crit denominator is not positive");
    return {scale / (a - 0.5), scale / (a - 1.5), scale * 2.0 * (4.0 * a - 11.0 - (a - 2.0) * L) / denom};
}

double p_function(double a, int t, double chi1) {
    require_strict_domain(a);
    require(t >= 1, "t must be at least 1");
    require(chi1 >= 0.0, "chi1 must be nonnegative");
    const double m = std::pow(a, t - 1);
    const double r = 1.0 - m * (a - 2.0) * chi1;
    return (a - 2.0) * r * r / (2.0 * (3.0 + (a - 2.0) * log_tail(a))) + m * (a - 2.0) * chi1 * (4.0 - m * chi1) / 16.0;
}

double p_leading_coefficient(double a, int t) {
    require_strict_domain(a);
    const double m = std::pow(a, t - 1);
    const double s = m * (a - 2.0);
    return (a - 2.0) * s * s / (2.0 * (3.0 + (a - 2.0) * log_tail(a))) - s * m / 16.0;
}

HarmonicTail harmonic_tail_bound_check(double a, int t) {
    require_strict_domain(a);
    require(t >= 2, "t must be at least 2");
    const auto m = static_cast<long>(std::floor(std::pow(a, t - 1) * (1.0 + 1e-14)));
    const auto s = static_cast<long>(std::floor(std::pow(a, t - 1) * (a - 2.0) * (1.0 + 1e-14)));
    HarmonicTail out;
    // smallest terms first
    for (long n = m - 1 + s; n >= s + 1; --n) out.sum += 1.0 / static_cast<double>(n);
    out.bound = log_tail(a);
    return out;
}

double coefficient_A(double a, int t, long n) {
    require_strict_domain(a);
    require(t >= 1, "t must be at least 1");
    const double m = std::pow(a, t - 1);
    const double s = m * (a - 2.0);
    if (n == 0) return s / 4.0;
    require(n >= 1 && static_cast<double>(n) <= m - 1.0 + 1e-9, "n must be 0 or in 1..a^(t-1)-1");
    const double dn = static_cast<double>(n);
    return s * (dn + s) / (2.0 * (dn + 2.0 * s));
}

BoundReport bound_report(double a) {
    BoundReport r;
    r.a = a;
    r.strong_bound = strong_bound(a);
    r.strict_bound = strict_bound(a);
    r.c_strong = r.strong_bound / (2.0 * std::log(a));
    r.c_strict = r.strict_bound / (2.0 * std::log(a));
    return r;
}

Optimum optimize_constant(Family family, double a_lo, double a_hi, double tol) {
    const double dom_hi = family == Family::strong ? 4.0 : 3.7;
    if (!(a_lo >= 3.0 && a_hi <= dom_hi && a_lo <= a_hi))
        throw Error(ErrorKind::out_of_range, std::string("invalid interval for the ") + to_string(family) + " family");
    if (!(tol > 0.0)) throw Error(ErrorKind::out_of_range, "tolerance must be positive");
    if (a_lo == a_hi) return {a_lo, constant(family, a_lo), true};

    std::vector<double> xs(kScanPoints);
    std::vector<double> ys(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) {
        xs[i] = a_lo + (a_hi - a_lo) * i / (kScanPoints - 1);
        ys[i] = constant(family, xs[i]);
    }
    int local_maxima = 0;
    for (int i = 0; i < kScanPoints; ++i) {
        const bool up_left = i == 0 || ys[i] > ys[i - 1];
        const bool up_right = i == kScanPoints - 1 || ys[i] >= ys[i + 1];
        if (up_left && up_right) ++local_maxima;
    }
    const auto best = static_cast<int>(std::max_element(ys.begin(), ys.end()) - ys.begin());

    auto golden = [&](double lo, double hi) {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = constant(family, x1);
        double f2 = constant(family, x2);
        while (hi - lo > tol) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = constant(family, x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = constant(family, x1);
            }
        }
        return 0.5 * (lo + hi);
    };

    Optimum out;
    out.unimodal = local_maxima == 1;
    double lo = xs[std::max(best - 1, 0)];
    double hi = xs[std::min(best + 1, kScanPoints - 1)];
    if (!out.unimodal) {
        // refine the grid around the best sample until the bracket is tight enough
        // for a local golden-section pass
        for (int round = 0; round < 4; ++round) {
            double top = lo;
            double top_v = constant(family, lo);
            for (int i = 0; i <= 64; ++i) {
                const double x = lo + (hi - lo) * i / 64.0;
                const double v = constant(family, x);
                if (v > top_v) {
                    top = x;
                    top_v = v;
                }
            }
            const double w = (hi - lo) / 64.0;
            lo = std::max(a_lo, top - w);
            hi = std::min(a_hi, top + w);
        }
    }
    out.a_star = golden(lo, hi);
    out.c_star = constant(family, out.a_star);
    // endpoint maxima: golden section never evaluates the bracket ends
    for (double edge : {a_lo, a_hi}) {
        const double v = constant(family, edge);
        if (v > out.c_star) {
            out.a_star = edge;
            out.c_star = v;
        }
    }
    return out;
}

}  // namespace stardisc
