#pragma once

#include <stdexcept>
#include <string>

namespace netcoh {

/// Malformed input data (edge-list syntax, bad tokens). Carries a line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    long line() const noexcept { return line_; }

private:
    long line_;
};

/// Structural problems: empty graphs, disconnected input where connectivity
/// is required, out-of-range vertex ids.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical failures: eigensolver non-convergence, route disagreement,
/// diverging simulations.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace netcoh
