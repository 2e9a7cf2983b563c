#pragma once

#include <stdexcept>
#include <string>

namespace euclid {

/// Base class for every failure raised by the construction engine.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  /// Stable error name, e.g. "DegenerateInput".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define EUCLID_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  }

// number
EUCLID_DEFINE_ERROR(DivisionByZero);
EUCLID_DEFINE_ERROR(NegativeRadicand);
EUCLID_DEFINE_ERROR(ParseError);

// geom
EUCLID_DEFINE_ERROR(DegenerateInput);
EUCLID_DEFINE_ERROR(Coincident);
EUCLID_DEFINE_ERROR(SuperpositionMismatch);

// elements
EUCLID_DEFINE_ERROR(PreconditionViolated);
EUCLID_DEFINE_ERROR(TriangleInequalityViolated);
EUCLID_DEFINE_ERROR(StrategyInapplicable);
EUCLID_DEFINE_ERROR(NotSimple);
EUCLID_DEFINE_ERROR(HypothesisNotSatisfied);
EUCLID_DEFINE_ERROR(PostconditionFailed);
EUCLID_DEFINE_ERROR(NoSuchIntersection);

// verify / render
EUCLID_DEFINE_ERROR(UnknownProposition);
EUCLID_DEFINE_ERROR(NothingToRender);

#undef EUCLID_DEFINE_ERROR

}  // namespace euclid
