#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stardisc/admissibility.hpp"
#include "stardisc/bounds.hpp"
#include "stardisc/point_set.hpp"
#include "stardisc/sequences.hpp"
#include "stardisc/variational.hpp"

namespace stardisc {

// %.{digits}g
std::string format_number(double v, int digits = 9);

// One real per line; '#' starts a comment, blank lines are ignored.
PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);
// Round-trip precision.
void write_point_set(std::ostream& out, const PointSet& ps);

const char* to_string(ClauseStatus s);

// property=<id> status=<pass|fail|skipped> [x=.. value=.. threshold=.. [x_bar=..]]
void write_property_report(std::ostream& out, const PropertyReport& r);

// a=.. strong_bound=.. strict_bound=.. c_strong=.. c_strict=..
std::string format_bound_record(const BoundReport& r);

// t,oracle,closed_form,gap
void write_gap_report(std::ostream& out, const std::vector<GapRecord>& rows, char delim = ',');

// N,dstar,scaled,normalized,running_max (empty fields where undefined)
void write_trajectory(std::ostream& out, const std::vector<TrajectoryRecord>& rows, char delim = ',');

}  // namespace stardisc
