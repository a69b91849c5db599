#pragma once

#include <stdexcept>
#include <string>

namespace josephus {

/// Invalid game parameters (n, k or lives out of range, label out of range).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operation on a ring or game that is in the wrong state (empty, finished).
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A simulation mode that is not defined for the requested configuration.
struct UnsupportedModeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A closed form was called outside the hypothesis it is valid under.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Checked integer arithmetic would have wrapped.
struct ArithmeticError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// A configured work ceiling was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace josephus
