#pragma once

#include <cstddef>

#include "stardisc/plf.hpp"
#include "stardisc/point_set.hpp"

namespace stardisc {

// #{i <= n : x_i < x}
std::size_t counting_function(const PointSet& ps, std::size_t n, double x);

// D_n(x) = #{i <= n : x_i < x} - n x as an exact piecewise-linear function:
// slope -n, a jump of height equal to the multiplicity at each distinct point.
struct DiscrepancyProfile {
    std::size_t n = 0;
    PiecewiseLinearFn values;
};

DiscrepancyProfile discrepancy_function(const PointSet& ps, std::size_t n);

// Exact D*_n of the length-n prefix via the sorted-points closed form.
double star_discrepancy(const PointSet& ps, std::size_t n);
double star_discrepancy(const PointSet& ps);

// Integral over [0,1] of max_n D_n - min_n D_n, n = 0..N (D_0 = 0).
double range_integral(const PointSet& ps);

}  // namespace stardisc
