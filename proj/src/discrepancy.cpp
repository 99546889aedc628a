#include "stardisc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stardisc/error.hpp"

namespace stardisc {

namespace {

void require_prefix(const PointSet& ps, std::size_t n) {
    if (n < 1 || n > ps.size())
        throw Error(ErrorKind::out_of_range,
                    "prefix length " + std::to_string(n) + " outside 1.." + std::to_string(ps.size()));
}

}  // namespace

std::size_t counting_function(const PointSet& ps, std::size_t n, double x) {
    require_prefix(ps, n);
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::out_of_range, "x outside [0,1]");
    const auto p = ps.prefix(n);
    return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [x](double v) { return v < x; }));
}

DiscrepancyProfile discrepancy_function(const PointSet& ps, std::size_t n) {
    require_prefix(ps, n);
    std::vector<double> sorted(ps.prefix(n).begin(), ps.prefix(n).end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<double> breaks{0.0};
    std::vector<double> jumps{0.0};
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double mult = static_cast<double>(j - i);
        if (sorted[i] == 0.0) {
            jumps[0] += mult;
        } else {
            breaks.push_back(sorted[i]);
            jumps.push_back(mult);
        }
        i = j;
    }
    breaks.push_back(1.0);
    std::vector<double> slopes(breaks.size() - 1, -static_cast<double>(n));
    return {n, PiecewiseLinearFn(std::move(breaks), std::move(slopes), std::move(jumps), 0.0)};
}

double star_discrepancy(const PointSet& ps, std::size_t n) {
    require_prefix(ps, n);
    std::vector<double> y(ps.prefix(n).begin(), ps.prefix(n).end());
    std::sort(y.begin(), y.end());
    // 1/(2n) + max_i |y_(i) - (2i-1)/(2n)|, exact on centered lattices
    const double twice_n = 2.0 * static_cast<double>(n);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        dev = std::max(dev, std::abs(y[i] - (2.0 * static_cast<double>(i) + 1.0) / twice_n));
    return 1.0 / twice_n + dev;
}

double star_discrepancy(const PointSet& ps) { return star_discrepancy(ps, ps.size()); }

double range_integral(const PointSet& ps) {
    std::vector<PiecewiseLinearFn> family;
    family.reserve(ps.size() + 1);
    family.emplace_back();
    for (std::size_t n = 1; n <= ps.size(); ++n) family.push_back(discrepancy_function(ps, n).values);
    return integral_abs(upper_envelope(family) - lower_envelope(family));
}

}  // namespace stardisc
