#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wreath {

enum class ErrorKind {
    invalid_parameter,
    incompatible_elements,
    invalid_symbol,
    shift_out_of_range,
    empty_permutation,
    invalid_cycles,
    parse_error,
    invalid_k,
    domain_error,
    excluded_input,
    too_large,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::incompatible_elements: return "incompatible-elements";
        case ErrorKind::invalid_symbol: return "invalid-symbol";
        case ErrorKind::shift_out_of_range: return "shift-out-of-range";
        case ErrorKind::empty_permutation: return "empty-permutation";
        case ErrorKind::invalid_cycles: return "invalid-cycles";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::invalid_k: return "invalid-k";
        case ErrorKind::domain_error: return "domain-error";
        case ErrorKind::excluded_input: return "excluded-input";
        case ErrorKind::too_large: return "too-large";
    }
    return "unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures also report the character offset where the input went wrong.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::parse_error, "at offset " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) throw Error(kind, what);
}

}  // namespace detail
}  // namespace wreath
