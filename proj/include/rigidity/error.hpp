#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

/// Malformed or out-of-range input (edge-list syntax, bad vertex sets, bad parameters).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exponential-cost routine refused because the instance exceeds its size guard.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical routine did not converge within its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for the given graph.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace rigidity
