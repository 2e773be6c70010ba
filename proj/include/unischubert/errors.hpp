#pragma once

#include <stdexcept>
#include <string>

namespace unischubert {

/// Bad input in the mathematical sense: not a permutation, a rank profile
/// that is not increasing, a diagram that does not fit, and so on.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identity that must hold failed, or an internal algebraic invariant
/// (exact division, unitriangular elimination) was violated.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace unischubert
