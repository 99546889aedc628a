#pragma once

namespace stardisc {

enum class Family { strong, strict };

const char* to_string(Family f);

// Lower bound for the absolute integral over strongly admissible functions,
// (a-2)(8a+3) / (8(1-2a)^2). Domain [3, 4].
double strong_bound(double a);

// Lower bound over strictly admissible functions. Domain [3, 3.7].
double strict_bound(double a);

// The same expression with prefactor a in place of 16. Not a valid bound;
// kept only to pin which transcription reproduces the headline constant.
double strict_bound_prefactor_a(double a);

double family_bound(Family family, double a);

// log(1 + 1/(a-2)), the bound on the harmonic tail.
double log_tail(double a);

// 3a - 9 - (a-1)(a-2) log(1 + 1/(a-2)). Domain [3, 3.7].
double q_function(double a);

struct ChiBounds {
    double chi_min = 0.0;
    double chi_max = 0.0;
    double chi_crit = 0.0;
};

// Box for the Q1 length and the critical point of p. Domain a in [3, 3.7], t >= 1.
ChiBounds chi_bounds(double a, int t);

// p(chi1), the reduced objective after the harmonic sum has been replaced by
// its logarithmic bound.
double p_function(double a, int t, double chi1);

// Coefficient of chi1^2 in p.
double p_leading_coefficient(double a, int t);

struct HarmonicTail {
    double sum = 0.0;    // sum_{n=|s0|+1}^{n0-1+|s0|} 1/n
    double bound = 0.0;  // log(1 + 1/(a-2))
};

// Uses floor(a^(t-1)) and floor(|s0|) when a is not 3. Requires t >= 2.
HarmonicTail harmonic_tail_bound_check(double a, int t);

// n = 0: a^(t-1)(a-2)/4; 1 <= n <= a^(t-1)-1: |s0|(n+|s0|) / (2(n+2|s0|)).
double coefficient_A(double a, int t, long n);

struct BoundReport {
    double a = 0.0;
    double strong_bound = 0.0;
    double strict_bound = 0.0;
    double c_strong = 0.0;
    double c_strict = 0.0;
};

BoundReport bound_report(double a);

struct Optimum {
    double a_star = 0.0;
    double c_star = 0.0;
    bool unimodal = true;  // grid pre-scan found a single local maximum
};

// Maximises family_bound(a) / (2 ln a) over [a_lo, a_hi].
Optimum optimize_constant(Family family, double a_lo, double a_hi, double tol = 1e-10);

}  // namespace stardisc
