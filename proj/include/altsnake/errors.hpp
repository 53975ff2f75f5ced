#pragma once

#include <stdexcept>
#include <string>

namespace altsnake {

/// Input that does not satisfy an operation's preconditions (malformed
/// interval, rank mismatch, index out of range, schema violation).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input on which an operation declines to compute because the
/// underlying identity is not asserted there (non-stable snake, rank too small).
class MathRefusal : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two independent computations disagreed. Never expected; signals a bug.
class OracleMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace altsnake
