#pragma once

#include <stdexcept>
#include <string>

namespace relcheck {

/// Base of every error raised by the library. The CLI maps these onto its
/// exit-code contract: input and precondition problems exit with code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RELCHECK_ERROR_TYPE(Name)                              \
  struct Name : Error {                                        \
    explicit Name(const std::string& msg) : Error(msg) {}      \
  }

// field
RELCHECK_ERROR_TYPE(DivisionByZero);
RELCHECK_ERROR_TYPE(NegativeInput);
RELCHECK_ERROR_TYPE(NotEuclidean);

// geometry
RELCHECK_ERROR_TYPE(DegenerateLine);
RELCHECK_ERROR_TYPE(NotOnCone);
RELCHECK_ERROR_TYPE(VertexInput);
RELCHECK_ERROR_TYPE(NotOutside);
RELCHECK_ERROR_TYPE(PreconditionViolated);

// worldview
RELCHECK_ERROR_TYPE(NotAnObserver);
RELCHECK_ERROR_TYPE(SuperluminalBoost);

// axioms
RELCHECK_ERROR_TYPE(NotApplicable);

// noftl
RELCHECK_ERROR_TYPE(NotFTL);
RELCHECK_ERROR_TYPE(BadHypothesis);

// scene / cli
RELCHECK_ERROR_TYPE(ParseError);
RELCHECK_ERROR_TYPE(SchemaError);

#undef RELCHECK_ERROR_TYPE

}  // namespace relcheck
