#pragma once

#include <stdexcept>
#include <string>

namespace cprefix {

// Malformed instance text. `line` is 1-based; 0 when the problem is not
// tied to a specific line (e.g. a missing section).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Structural invariant violation: not a tree, duplicate label, not a star,
// bad parameter. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Infeasible solution object: a permutation that does not match its label
// set, a chain whose restricted neighborhoods are not nested, an incomplete
// biclique.
class FeasibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance exceeds a solver size guard. The message names the measured
// quantity and the configured limit. The CLI maps this to exit code 2.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cprefix
