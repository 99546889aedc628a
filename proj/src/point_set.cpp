#include "stardisc/point_set.hpp"

#include <string>

#include "stardisc/error.hpp"

namespace stardisc {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::empty: return "empty";
        case ErrorKind::invalid_domain: return "invalid-domain";
        case ErrorKind::out_of_range: return "out-of-range";
        case ErrorKind::size_mismatch: return "size-mismatch";
        case ErrorKind::malformed: return "malformed";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

PointSet PointSet::make(std::vector<double> values) {
    if (values.empty()) throw Error(ErrorKind::empty, "point set is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (!(v >= 0.0 && v < 1.0))
            throw Error(ErrorKind::invalid_domain,
                        "point " + std::to_string(i) + " = " + std::to_string(v) + " is outside [0,1)", i);
    }
    return PointSet(std::move(values));
}

}  // namespace stardisc
