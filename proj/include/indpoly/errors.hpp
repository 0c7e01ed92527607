#pragma once

#include <stdexcept>
#include <string>

namespace indpoly {

/// The recursion node budget ran out. Raised instead of truncating a result.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A combinatorial-explosion guard was hit (brute-force vertex cap,
/// induced-matching edge bound, standard-monomial bound).
struct GuardExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed. `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

}  // namespace indpoly
