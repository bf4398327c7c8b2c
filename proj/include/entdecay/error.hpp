#pragma once

#include <stdexcept>

namespace entdecay {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input fails a numeric validity requirement: non-Hermitian matrix,
/// negative spectrum, parameter out of range, zero axis vector.
struct ValidationError : Error {
  using Error::Error;
};

/// State lacks the structure an operation requires, e.g. it is not
/// Bell diagonal or has too many significant Bell weights.
struct StructureError : Error {
  using Error::Error;
};

/// A ratio's denominator is numerically indistinguishable from zero.
struct DegenerateDenominatorError : Error {
  using Error::Error;
};

}  // namespace entdecay
