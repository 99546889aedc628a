#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stardisc/point_set.hpp"

namespace stardisc {

// Radical inverse of n in the given base.
double radical_inverse(unsigned long long n, unsigned base);

// Points n = 1..count of the van der Corput sequence.
PointSet van_der_corput(unsigned base, std::size_t count);

inline const double kGoldenAlpha = 0.6180339887498948482;

// Points n = 1..count of {n alpha}.
PointSet kronecker(double alpha, std::size_t count);

struct TrajectoryRecord {
    std::size_t N = 0;
    double dstar = 0.0;
    double scaled = 0.0;                // N * dstar
    std::optional<double> normalized;   // N * dstar / ln N, absent for N = 1
    std::optional<double> running_max;  // max of normalized so far
};

enum class Stride { all, dyadic, custom };

// Checkpoints: every N, powers of two, or the given list (sorted, clipped to |ps|).
std::vector<TrajectoryRecord> trajectory(const PointSet& ps, Stride stride,
                                         const std::vector<std::size_t>& custom = {});

}  // namespace stardisc
