#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msok {

/// Raised when an exact (exponential) search would exceed a configured size
/// or round limit. The message names the limit and how to raise it.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph, formula or kernel document. Line and column are 1-based;
/// column is 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace msok
