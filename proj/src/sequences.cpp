#include "stardisc/sequences.hpp"

#include <algorithm>
#include <cmath>

#include "stardisc/discrepancy.hpp"
#include "stardisc/error.hpp"

namespace stardisc {

double radical_inverse(unsigned long long n, unsigned base) {
    if (base < 2) throw Error(ErrorKind::out_of_range, "base must be at least 2");
    // accumulate the reversed digits as an integer so that short expansions are exact
    unsigned long long reversed = 0;
    unsigned long long denom = 1;
    while (n > 0) {
        reversed = reversed * base + n % base;
        denom *= base;
        n /= base;
    }
    return static_cast<double>(reversed) / static_cast<double>(denom);
}

PointSet van_der_corput(unsigned base, std::size_t count) {
    if (base < 2) throw Error(ErrorKind::out_of_range, "base must be at least 2");
    if (count < 1) throw Error(ErrorKind::empty, "count must be at least 1");
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = radical_inverse(i + 1, base);
    return PointSet::make(std::move(v));
}

PointSet kronecker(double alpha, std::size_t count) {
    if (count < 1) throw Error(ErrorKind::empty, "count must be at least 1");
    if (!std::isfinite(alpha)) throw Error(ErrorKind::invalid_domain, "alpha must be finite");
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = static_cast<double>(i + 1) * alpha;
        double frac = x - std::floor(x);
        if (frac >= 1.0) frac = 0.0;
        v[i] = frac;
    }
    return PointSet::make(std::move(v));
}

std::vector<TrajectoryRecord> trajectory(const PointSet& ps, Stride stride, const std::vector<std::size_t>& custom) {
    std::vector<std::size_t> checkpoints;
    switch (stride) {
        case Stride::all:
            for (std::size_t n = 1; n <= ps.size(); ++n) checkpoints.push_back(n);
            break;
        case Stride::dyadic:
            for (std::size_t n = 1; n <= ps.size(); n *= 2) checkpoints.push_back(n);
            break;
        case Stride::custom:
            for (std::size_t n : custom)
                if (n >= 1 && n <= ps.size()) checkpoints.push_back(n);
            std::sort(checkpoints.begin(), checkpoints.end());
            checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
            break;
    }

    std::vector<TrajectoryRecord> out;
    out.reserve(checkpoints.size());
    std::optional<double> best;
    for (std::size_t n : checkpoints) {
        TrajectoryRecord r;
        r.N = n;
        r.dstar = star_discrepancy(ps, n);
        r.scaled = static_cast<double>(n) * r.dstar;
        if (n >= 2) {
            r.normalized = r.scaled / std::log(static_cast<double>(n));
            best = best ? std::max(*best, *r.normalized) : *r.normalized;
        }
        r.running_max = best;
        out.push_back(r);
    }
    return out;
}

}  // namespace stardisc
