#include "stardisc/plf.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "stardisc/error.hpp"

namespace stardisc {

namespace {

// Values of one function sampled on a (finer) merged breakpoint grid.
struct Sampled {
    std::vector<double> left;   // left limit at grid[j]
    std::vector<double> right;  // right limit at grid[j]
    std::vector<double> slope;  // slope on (grid[j], grid[j+1]]
};

Sampled sample_on(const PiecewiseLinearFn& f, std::span<const double> grid) {
    Sampled s;
    const auto b = f.breakpoints();
    const auto slopes = f.slopes();
    s.left.resize(grid.size());
    s.right.resize(grid.size());
    s.slope.resize(grid.size() - 1);
    std::size_t k = 0;
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        const double x = grid[j];
        while (k + 2 < b.size() && b[k + 1] <= x) ++k;
        if (b[k] == x) {
            s.left[j] = f.left_value(k);
            s.right[j] = f.right_value(k);
        } else {
            const double v = f.right_value(k) + slopes[k] * (x - b[k]);
            s.left[j] = v;
            s.right[j] = v;
        }
        s.slope[j] = slopes[k];
    }
    s.left.back() = f.left_value(b.size() - 1);
    s.right.back() = s.left.back();
    return s;
}

std::vector<double> merge_breaks(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <class Op>
PiecewiseLinearFn combine(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, Op op, double sign) {
    const auto grid = merge_breaks(f.breakpoints(), g.breakpoints());
    const auto sf = sample_on(f, grid);
    const auto sg = sample_on(g, grid);
    std::vector<double> slopes(grid.size() - 1);
    std::vector<double> jumps(grid.size() - 1);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        slopes[j] = op(sf.slope[j], sign * sg.slope[j]);
        jumps[j] = op(sf.right[j], sign * sg.right[j]) - op(sf.left[j], sign * sg.left[j]);
    }
    return {grid, std::move(slopes), std::move(jumps), op(f.anchor(), sign * g.anchor())};
}

PiecewiseLinearFn envelope(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, bool upper) {
    const auto grid = merge_breaks(f.breakpoints(), g.breakpoints());
    const auto sf = sample_on(f, grid);
    const auto sg = sample_on(g, grid);
    auto pick = [upper](double u, double v) { return upper ? std::max(u, v) : std::min(u, v); };
    // true when f is the envelope member on an open stretch starting at value
    // difference d and slope difference ds
    auto f_wins = [upper](double d, double ds) {
        if (d != 0.0) return upper ? d > 0.0 : d < 0.0;
        return upper ? ds >= 0.0 : ds <= 0.0;
    };

    std::vector<double> breaks{0.0};
    std::vector<double> slopes;
    std::vector<double> jumps;
    double anchor = pick(sf.left[0], sg.left[0]);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        const double len = grid[j + 1] - grid[j];
        const double d0 = sf.right[j] - sg.right[j];
        const double ds = sf.slope[j] - sg.slope[j];
        const double d1 = d0 + ds * len;
        const double prev_left = j == 0 ? anchor : pick(sf.left[j], sg.left[j]);
        jumps.push_back(pick(sf.right[j], sg.right[j]) - prev_left);
        bool first = f_wins(d0, ds);
        if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0)) {
            const double cross = grid[j] + d0 / -ds;
            if (cross > grid[j] && cross < grid[j + 1]) {
                slopes.push_back(first ? sf.slope[j] : sg.slope[j]);
                breaks.push_back(cross);
                jumps.push_back(0.0);
                slopes.push_back(first ? sg.slope[j] : sf.slope[j]);
                breaks.push_back(grid[j + 1]);
                continue;
            }
            // crossing rounded onto the left end: the right-end order holds throughout
            if (cross <= grid[j]) first = !first;
        }
        slopes.push_back(first ? sf.slope[j] : sg.slope[j]);
        breaks.push_back(grid[j + 1]);
    }
    return {std::move(breaks), std::move(slopes), std::move(jumps), anchor};
}

template <bool Upper>
PiecewiseLinearFn fold(std::span<const PiecewiseLinearFn> fs) {
    if (fs.empty()) throw Error(ErrorKind::empty, "envelope of an empty family");
    // Pairwise tree reduction keeps intermediate breakpoint sets balanced.
    std::vector<PiecewiseLinearFn> level(fs.begin(), fs.end());
    while (level.size() > 1) {
        std::vector<PiecewiseLinearFn> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(envelope(level[i], level[i + 1], Upper));
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return std::move(level.front());
}

}  // namespace

PiecewiseLinearFn::PiecewiseLinearFn() : breaks_{0.0, 1.0}, slopes_{0.0}, jumps_{0.0} { rebuild(); }

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<double> breakpoints, std::vector<double> slopes,
                                     std::vector<double> jumps, double anchor)
    : breaks_(std::move(breakpoints)), slopes_(std::move(slopes)), jumps_(std::move(jumps)), anchor_(anchor) {
    if (breaks_.size() < 2 || breaks_.front() != 0.0 || breaks_.back() != 1.0)
        throw Error(ErrorKind::malformed, "breakpoints must run from 0 to 1");
    for (std::size_t k = 1; k < breaks_.size(); ++k)
        if (!(breaks_[k] > breaks_[k - 1]))
            throw Error(ErrorKind::malformed, "breakpoints must increase strictly", k);
    if (slopes_.size() != breaks_.size() - 1 || jumps_.size() != breaks_.size() - 1)
        throw Error(ErrorKind::malformed, "one slope and one jump per segment required");
    rebuild();
}

PiecewiseLinearFn PiecewiseLinearFn::linear(double anchor, double slope) {
    return {{0.0, 1.0}, {slope}, {0.0}, anchor};
}

void PiecewiseLinearFn::rebuild() {
    left_.assign(breaks_.size(), 0.0);
    left_[0] = anchor_;
    for (std::size_t k = 0; k < slopes_.size(); ++k)
        left_[k + 1] = left_[k] + jumps_[k] + slopes_[k] * (breaks_[k + 1] - breaks_[k]);
}

std::size_t PiecewiseLinearFn::segment_of(double x) const {
    if (x <= 0.0) return 0;
    // first breakpoint >= x closes the segment containing x
    auto it = std::lower_bound(breaks_.begin() + 1, breaks_.end(), x);
    if (it == breaks_.end()) return slopes_.size() - 1;
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

double PiecewiseLinearFn::operator()(double x) const {
    if (x <= 0.0) return anchor_;
    const std::size_t k = segment_of(x);
    if (x == breaks_[k + 1]) return left_[k + 1];
    return right_value(k) + slopes_[k] * (x - breaks_[k]);
}

PiecewiseLinearFn PiecewiseLinearFn::refined(std::span<const double> extra) const {
    std::vector<double> add;
    for (double x : extra)
        if (x > 0.0 && x < 1.0) add.push_back(x);
    std::sort(add.begin(), add.end());
    const auto grid = merge_breaks(breaks_, add);
    const auto s = sample_on(*this, grid);
    std::vector<double> jumps(grid.size() - 1);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) jumps[j] = s.right[j] - s.left[j];
    return {grid, s.slope, std::move(jumps), anchor_};
}

bool PiecewiseLinearFn::has_nonnegative_jumps(double tol) const {
    return std::all_of(jumps_.begin(), jumps_.end(), [tol](double j) { return j >= -tol; });
}

double integral_abs(const PiecewiseLinearFn& g) {
    const auto b = g.breakpoints();
    const auto s = g.slopes();
    double total = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double len = b[k + 1] - b[k];
        const double v0 = g.right_value(k);
        const double v1 = v0 + s[k] * len;
        if ((v0 >= 0.0 && v1 >= 0.0) || (v0 <= 0.0 && v1 <= 0.0)) {
            total += 0.5 * std::abs(v0 + v1) * len;
        } else {
            // zero crossing splits the trapezoid into two triangles
            const double z = len * std::abs(v0) / (std::abs(v0) + std::abs(v1));
            total += 0.5 * std::abs(v0) * z + 0.5 * std::abs(v1) * (len - z);
        }
    }
    return total;
}

PiecewiseLinearFn operator-(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
    return combine(f, g, std::plus<>{}, -1.0);
}

PiecewiseLinearFn operator+(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
    return combine(f, g, std::plus<>{}, 1.0);
}

PiecewiseLinearFn upper_envelope(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
    return envelope(f, g, true);
}

PiecewiseLinearFn lower_envelope(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
    return envelope(f, g, false);
}

PiecewiseLinearFn upper_envelope(std::span<const PiecewiseLinearFn> fs) { return fold<true>(fs); }

PiecewiseLinearFn lower_envelope(std::span<const PiecewiseLinearFn> fs) { return fold<false>(fs); }

}  // namespace stardisc
