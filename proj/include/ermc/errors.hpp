#pragma once

#include <stdexcept>
#include <string>

namespace ermc {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters: out-of-range arguments, degree mismatches, length mismatches.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A vector that must be a basis (or a matrix that must be invertible) is not.
class SingularBasisError : public Error {
  public:
    using Error::Error;
};

/// An operation requiring char(F) > d was invoked with p <= d.
class CharTooSmallError : public Error {
  public:
    using Error::Error;
};

/// An enumeration exceeds the configured budget.
class BudgetExceededError : public Error {
  public:
    using Error::Error;
};

/// Decoding failed: error outside radius, inconsistent syndromes, or a
/// reconstructed codeword that fails the final membership verification.
class DecodingFailure : public Error {
  public:
    using Error::Error;
};

} // namespace ermc
