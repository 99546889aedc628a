#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace stardisc {

enum class ErrorKind {
    empty,
    invalid_domain,
    out_of_range,
    size_mismatch,
    malformed,
    io,
};

const char* to_string(ErrorKind kind);

// Thrown for contract violations on inputs. `index` identifies the offending
// element when the violation is positional.
class Error : public std::invalid_argument {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::invalid_argument(what), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

}  // namespace stardisc
