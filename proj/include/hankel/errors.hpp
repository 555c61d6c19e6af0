#pragma once

#include <stdexcept>

namespace hankel {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// series
struct DivisionByVanishingConstantTerm : Error {
  using Error::Error;
};
struct CompositionWithNonvanishingInnerConstant : Error {
  using Error::Error;
};
struct SqrtOfNonpositiveConstantTerm : Error {
  using Error::Error;
};

// classes
struct SubordinationTargetInvalid : Error {
  using Error::Error;
};

// optimize
struct BoundViolation : Error {
  using Error::Error;
};
struct SharpnessGap : Error {
  using Error::Error;
};

// cli
struct ConfigInvalid : Error {
  using Error::Error;
};
struct IoFailure : Error {
  using Error::Error;
};

}  // namespace hankel
