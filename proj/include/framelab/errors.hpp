#pragma once

#include <stdexcept>
#include <string>

namespace framelab {

/// The truncation window is too small for the requested computation (no valid
/// cell, no admissible radius, ...).
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an algorithm does not hold on the data.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace framelab
