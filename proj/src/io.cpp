#include "stardisc/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "stardisc/error.hpp"

namespace stardisc {

std::string format_number(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

PointSet read_point_set(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double v;
        if (!(fields >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw Error(ErrorKind::malformed, "line " + std::to_string(lineno) + ": not a number");
        }
        std::string rest;
        if (fields >> rest) throw Error(ErrorKind::malformed, "line " + std::to_string(lineno) + ": trailing text");
        values.push_back(v);
    }
    return PointSet::make(std::move(values));
}

PointSet read_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io, "cannot open " + path);
    return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& ps) {
    for (double v : ps.values()) out << format_number(v, 17) << '\n';
}

const char* to_string(ClauseStatus s) {
    switch (s) {
        case ClauseStatus::pass: return "pass";
        case ClauseStatus::fail: return "fail";
        case ClauseStatus::skipped: return "skipped";
    }
    return "unknown";
}

void write_property_report(std::ostream& out, const PropertyReport& r) {
    for (const auto& c : r.clauses) {
        out << "property=" << c.id << " status=" << to_string(c.status);
        if (c.witness) {
            out << " x=" << format_number(c.witness->x) << " value=" << format_number(c.witness->value)
                << " threshold=" << format_number(c.witness->threshold);
            if (c.witness->x_other) out << " x_bar=" << format_number(*c.witness->x_other);
        }
        out << '\n';
    }
}

std::string format_bound_record(const BoundReport& r) {
    return "a=" + format_number(r.a) + " strong_bound=" + format_number(r.strong_bound) +
           " strict_bound=" + format_number(r.strict_bound) + " c_strong=" + format_number(r.c_strong) +
           " c_strict=" + format_number(r.c_strict);
}

void write_gap_report(std::ostream& out, const std::vector<GapRecord>& rows, char delim) {
    out << "t" << delim << "oracle" << delim << "closed_form" << delim << "gap\n";
    for (const auto& r : rows)
        out << r.t << delim << format_number(r.oracle) << delim << format_number(r.closed_form) << delim
            << format_number(r.gap) << '\n';
}

void write_trajectory(std::ostream& out, const std::vector<TrajectoryRecord>& rows, char delim) {
    out << "N" << delim << "dstar" << delim << "scaled" << delim << "normalized" << delim << "running_max\n";
    for (const auto& r : rows) {
        out << r.N << delim << format_number(r.dstar) << delim << format_number(r.scaled) << delim;
        if (r.normalized) out << format_number(*r.normalized);
        out << delim;
        if (r.running_max) out << format_number(*r.running_max);
        out << '\n';
    }
}

}  // namespace stardisc
