#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stardisc/admissibility.hpp"
#include "stardisc/bounds.hpp"
#include "stardisc/discrepancy.hpp"
#include "stardisc/error.hpp"
#include "stardisc/io.hpp"
#include "stardisc/sequences.hpp"
#include "stardisc/variational.hpp"

using namespace stardisc;

namespace {

enum class Format { human, records };

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) { return format_number(v); }

std::filesystem::path default_output(const std::string& name) {
    const char* dir = std::getenv("STARDISC_OUT_DIR");
    return std::filesystem::path(dir && *dir ? dir : ".") / name;
}

// "5" or "3..8"
std::pair<int, int> parse_t_range(const std::string& text) {
    try {
        std::size_t used = 0;
        if (auto dots = text.find(".."); dots != std::string::npos) {
            const int lo = std::stoi(text.substr(0, dots), &used);
            if (used != dots) throw UsageError("bad t range: " + text);
            const std::string rest = text.substr(dots + 2);
            const int hi = std::stoi(rest, &used);
            if (used != rest.size()) throw UsageError("bad t range: " + text);
            return {lo, hi};
        }
        const int t = std::stoi(text, &used);
        if (used != text.size()) throw UsageError("bad t value: " + text);
        return {t, t};
    } catch (const std::logic_error&) {
        throw UsageError("bad t value: " + text);
    }
}

struct BoundArgs {
    std::optional<double> a;
    std::optional<std::string> family;
    bool optimize = false;
    std::optional<double> a_lo;
    std::optional<double> a_hi;
    double tol = 1e-10;
};

int run_bound(const BoundArgs& args, Format format) {
    if (args.optimize) {
        const Family family = args.family.value_or("strict") == "strong" ? Family::strong : Family::strict;
        const double lo = args.a_lo.value_or(family == Family::strict ? 3.0001 : 3.0);
        const double hi = args.a_hi.value_or(family == Family::strict ? 3.7 : 3.8);
        const auto opt = optimize_constant(family, lo, hi, args.tol);
        if (format == Format::records)
            std::cout << "family=" << to_string(family) << " a_star=" << fmt(opt.a_star) << " c_star=" << fmt(opt.c_star)
                      << " unimodal=" << (opt.unimodal ? "true" : "false") << '\n';
        else
            std::cout << to_string(family) << " family on [" << fmt(lo) << ", " << fmt(hi) << "]: a* = " << fmt(opt.a_star)
                      << ", c* = " << fmt(opt.c_star) << '\n';
        return kOk;
    }
    if (!args.a) throw UsageError("bound needs --a or --optimize");
    const double a = *args.a;
    if (args.family) {
        const Family family = *args.family == "strong" ? Family::strong : Family::strict;
        const double b = family_bound(family, a);
        const double c = b / (2.0 * std::log(a));
        if (format == Format::records)
            std::cout << "a=" << fmt(a) << " family=" << to_string(family) << " bound=" << fmt(b) << " c=" << fmt(c) << '\n';
        else
            std::cout << to_string(family) << " bound at a = " << fmt(a) << ": " << fmt(b) << ", c = " << fmt(c) << '\n';
        return kOk;
    }
    const auto r = bound_report(a);
    if (format == Format::records) {
        std::cout << format_bound_record(r) << '\n';
    } else {
        std::cout << "a = " << fmt(r.a) << '\n'
                  << "strong bound " << fmt(r.strong_bound) << ", c = " << fmt(r.c_strong) << '\n'
                  << "strict bound " << fmt(r.strict_bound) << ", c = " << fmt(r.c_strict) << '\n';
    }
    return kOk;
}

int run_discrepancy(const std::string& path, std::optional<std::size_t> n, Format format) {
    const auto ps = read_point_set_file(path);
    const std::size_t m = n.value_or(ps.size());
    const double d = star_discrepancy(ps, m);
    if (format == Format::records)
        std::cout << "n=" << m << " dstar=" << fmt(d) << '\n';
    else
        std::cout << fmt(d) << '\n';
    return kOk;
}

void render(const PropertyReport& r, Format format) {
    if (format == Format::records) {
        write_property_report(std::cout, r);
        return;
    }
    for (const auto& c : r.clauses) {
        std::cout << c.id << ": " << to_string(c.status);
        if (c.witness) {
            std::cout << " at x = " << fmt(c.witness->x);
            if (c.witness->x_other) std::cout << ", x_bar = " << fmt(*c.witness->x_other);
            std::cout << " (value " << fmt(c.witness->value) << ", threshold " << fmt(c.witness->threshold) << ")";
        }
        std::cout << '\n';
    }
}

int run_check(const std::string& path, double a, int t, Format format) {
    const auto ps = read_point_set_file(path);
    const auto sc = make_scale(a, t);
    if (ps.size() != sc.N)
        throw Error(ErrorKind::size_mismatch,
                    "expected " + std::to_string(sc.N) + " points, file has " + std::to_string(ps.size()));
    const auto f = build_f(ps, sc);
    const auto props = check_properties(f, sc, ps);
    bool ok = props.all_pass();
    render(props, format);
    for (std::size_t j : bend_eligible_indices(f, sc, ps)) {
        auto bend = check_bend_condition(f, sc, ps, j);
        for (auto& c : bend.clauses) c.id += "@" + std::to_string(j);
        ok = ok && bend.all_pass();
        render(bend, format);
    }
    if (format == Format::human) std::cout << (ok ? "all checks pass" : "checks failed") << '\n';
    return ok ? kOk : kFailed;
}

int run_qp(double a, const std::string& t_text, Format format) {
    const auto [lo, hi] = parse_t_range(t_text);
    const auto rows = qp_gap_report(a, lo, hi);
    if (format == Format::records) {
        write_gap_report(std::cout, rows);
    } else {
        for (const auto& r : rows)
            std::cout << "t = " << r.t << ": oracle " << fmt(r.oracle) << ", closed form " << fmt(r.closed_form)
                      << ", gap " << fmt(r.gap) << '\n';
    }
    return kOk;
}

struct SequenceArgs {
    std::string kind;
    unsigned base = 2;
    double alpha = kGoldenAlpha;
    std::size_t count = 1024;
    std::string stride = "dyadic";
    std::optional<std::string> output;
};

int run_sequence(const SequenceArgs& args, Format format) {
    const PointSet ps = args.kind == "vdc" ? van_der_corput(args.base, args.count) : kronecker(args.alpha, args.count);
    const auto rows = trajectory(ps, args.stride == "all" ? Stride::all : Stride::dyadic);
    const double best = rows.back().running_max.value_or(0.0);

    const std::string target = args.output.value_or(default_output(args.kind + "_trajectory.csv").string());
    if (target == "-") {
        write_trajectory(std::cout, rows);
        return kOk;
    }
    std::ofstream out(target);
    if (!out) throw Error(ErrorKind::io, "cannot write " + target);
    write_trajectory(out, rows);
    if (format == Format::records)
        std::cout << "file=" << target << " records=" << rows.size() << " running_max=" << fmt(best) << '\n';
    else
        std::cout << "wrote " << rows.size() << " records to " << target << "; max N*D*_N/ln N = " << fmt(best) << '\n';
    return kOk;
}

int run_random(std::size_t count, std::uint64_t seed, const std::optional<std::string>& output) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(count);
    for (auto& x : v) x = u(rng);
    const auto ps = make_point_set(std::move(v));
    if (!output || *output == "-") {
        write_point_set(std::cout, ps);
        return kOk;
    }
    std::ofstream out(*output);
    if (!out) throw Error(ErrorKind::io, "cannot write " + *output);
    write_point_set(out, ps);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star discrepancy lower-bound toolkit"};
    app.require_subcommand(1);

    std::string format_name = "human";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"human", "records"}))
        ->capture_default_str();

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Evaluate or optimise the closed-form lower bounds");
    bound_cmd->add_option("--a", bound.a, "Scale parameter");
    bound_cmd->add_option("--family", bound.family, "Admissibility family")->check(CLI::IsMember({"strong", "strict"}));
    bound_cmd->add_flag("--optimize", bound.optimize, "Maximise bound / (2 ln a) over an interval");
    bound_cmd->add_option("--a-lo", bound.a_lo, "Lower end of the search interval");
    bound_cmd->add_option("--a-hi", bound.a_hi, "Upper end of the search interval");
    bound_cmd->add_option("--tol", bound.tol, "Optimiser tolerance")->capture_default_str();

    std::string disc_path;
    std::optional<std::size_t> disc_n;
    auto* disc_cmd = app.add_subcommand("discrepancy", "Star discrepancy of a point file");
    disc_cmd->add_option("file", disc_path, "Point file")->required();
    disc_cmd->add_option("--n", disc_n, "Prefix length (default: all points)");

    std::string check_path;
    double check_a = 3.0;
    int check_t = 2;
    auto* check_cmd = app.add_subcommand("check", "Admissibility checks on f built from a point file");
    check_cmd->add_option("file", check_path, "Point file")->required();
    check_cmd->add_option("--a", check_a, "Scale parameter")->capture_default_str();
    check_cmd->add_option("--t", check_t, "Scale exponent")->capture_default_str();

    double qp_a = 3.0;
    std::string qp_t = "3..8";
    auto* qp_cmd = app.add_subcommand("qp", "Profile QP against the closed-form strict bound");
    qp_cmd->add_option("--a", qp_a, "Scale parameter")->capture_default_str();
    qp_cmd->add_option("--t", qp_t, "Scale exponent or range lo..hi")->capture_default_str();

    SequenceArgs seq;
    auto* seq_cmd = app.add_subcommand("sequence", "Discrepancy trajectory of a low-discrepancy sequence");
    seq_cmd->add_option("kind", seq.kind, "Generator")->required()->check(CLI::IsMember({"vdc", "kronecker"}));
    seq_cmd->add_option("--base", seq.base, "van der Corput base")->capture_default_str();
    seq_cmd->add_option("--alpha", seq.alpha, "Kronecker rotation")->capture_default_str();
    seq_cmd->add_option("--count", seq.count, "Number of points")->capture_default_str();
    seq_cmd->add_option("--stride", seq.stride, "Checkpoints")
        ->check(CLI::IsMember({"all", "dyadic"}))
        ->capture_default_str();
    seq_cmd->add_option("--output", seq.output, "Trajectory file, - for stdout (default: $STARDISC_OUT_DIR)");

    std::size_t rand_count = 9;
    std::uint64_t rand_seed = 1;
    std::optional<std::string> rand_output;
    auto* rand_cmd = app.add_subcommand("random", "Seeded uniform random point file");
    rand_cmd->add_option("--count", rand_count, "Number of points")->capture_default_str();
    rand_cmd->add_option("--seed", rand_seed, "Generator seed")->capture_default_str();
    rand_cmd->add_option("--output", rand_output, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const Format format = format_name == "records" ? Format::records : Format::human;
    try {
        if (*bound_cmd) return run_bound(bound, format);
        if (*disc_cmd) return run_discrepancy(disc_path, disc_n, format);
        if (*check_cmd) return run_check(check_path, check_a, check_t, format);
        if (*qp_cmd) return run_qp(qp_a, qp_t, format);
        if (*seq_cmd) return run_sequence(seq, format);
        if (*rand_cmd) return run_random(rand_count, rand_seed, rand_output);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
