#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace stardisc {

inline constexpr double kTol = 1e-12;

// Left-continuous piecewise-linear function on [0,1].
//
// Segment k is (b_k, b_{k+1}] with slope slopes[k]. jumps[k] is the
// right-sided jump at b_k, so jumps[0] is a jump immediately right of 0 and
// the value at a breakpoint is always the left limit. Jumps are signed so
// that differences of envelopes and deliberately malformed test functions can
// be represented; admissibility checks decide whether a sign is acceptable.
class PiecewiseLinearFn {
public:
    PiecewiseLinearFn();  // g == 0

    // breakpoints must start at 0, end at 1 and increase strictly;
    // slopes.size() == jumps.size() == breakpoints.size() - 1.
    PiecewiseLinearFn(std::vector<double> breakpoints, std::vector<double> slopes,
                      std::vector<double> jumps, double anchor);

    static PiecewiseLinearFn linear(double anchor, double slope);

    std::size_t segment_count() const noexcept { return slopes_.size(); }
    std::span<const double> breakpoints() const noexcept { return breaks_; }
    std::span<const double> slopes() const noexcept { return slopes_; }
    std::span<const double> jumps() const noexcept { return jumps_; }
    double anchor() const noexcept { return anchor_; }

    // Left limit at breakpoint k (value there), and right limit.
    double left_value(std::size_t k) const { return left_[k]; }
    double right_value(std::size_t k) const { return left_[k] + (k < jumps_.size() ? jumps_[k] : 0.0); }

    double operator()(double x) const;

    // Index of the segment containing x, i.e. b_k < x <= b_{k+1}; x == 0 maps to 0.
    std::size_t segment_of(double x) const;

    // Same function with additional (redundant) breakpoints.
    PiecewiseLinearFn refined(std::span<const double> extra) const;

    bool has_nonnegative_jumps(double tol = kTol) const;

private:
    void rebuild();

    std::vector<double> breaks_;
    std::vector<double> slopes_;
    std::vector<double> jumps_;
    double anchor_ = 0.0;
    std::vector<double> left_;  // cached left limits at every breakpoint
};

// Exact integral of |g| over [0,1], splitting segments at zero crossings.
double integral_abs(const PiecewiseLinearFn& g);

PiecewiseLinearFn operator-(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);
PiecewiseLinearFn operator+(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);

// Pointwise max / min, with crossings inside segments turned into breakpoints.
PiecewiseLinearFn upper_envelope(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);
PiecewiseLinearFn lower_envelope(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);
PiecewiseLinearFn upper_envelope(std::span<const PiecewiseLinearFn> fs);
PiecewiseLinearFn lower_envelope(std::span<const PiecewiseLinearFn> fs);

}  // namespace stardisc
