#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace stardisc {

// Ordered finite sequence in [0,1). Order matters: prefixes define D_n.
class PointSet {
public:
    // Throws Error{empty} or Error{invalid_domain, index}.
    static PointSet make(std::vector<double> values);

    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    std::span<const double> values() const noexcept { return points_; }
    std::span<const double> prefix(std::size_t n) const { return std::span<const double>(points_).first(n); }

private:
    explicit PointSet(std::vector<double> values) : points_(std::move(values)) {}
    std::vector<double> points_;
};

inline PointSet make_point_set(std::vector<double> values) { return PointSet::make(std::move(values)); }

}  // namespace stardisc
