#pragma once

#include <stdexcept>
#include <string>

namespace tropline {

// Domain error with a stable machine-readable type tag. The tag is what the
// CLI reports in structured error JSON and what tests match on.
class Error : public std::runtime_error {
 public:
  Error(std::string type, const std::string& message)
      : std::runtime_error(type + ": " + message), type_(std::move(type)) {}
  const std::string& type() const noexcept { return type_; }

 private:
  std::string type_;
};

#define TROPLINE_DEFINE_ERROR(Name)                         \
  class Name : public Error {                               \
   public:                                                  \
    explicit Name(const std::string& message)               \
        : Error(#Name, message) {}                          \
  }

TROPLINE_DEFINE_ERROR(DivisionByZero);
TROPLINE_DEFINE_ERROR(NotInvertible);
TROPLINE_DEFINE_ERROR(ContextMismatch);
TROPLINE_DEFINE_ERROR(SingularSystem);
TROPLINE_DEFINE_ERROR(ZeroPolynomial);
TROPLINE_DEFINE_ERROR(DegenerateSupport);
TROPLINE_DEFINE_ERROR(DimensionMismatch);
TROPLINE_DEFINE_ERROR(IndexOutOfRange);
TROPLINE_DEFINE_ERROR(RankDeficient);
TROPLINE_DEFINE_ERROR(CancellationRisk);
TROPLINE_DEFINE_ERROR(IdenticalSubstitutions);
TROPLINE_DEFINE_ERROR(EqualPoints);
TROPLINE_DEFINE_ERROR(RetryLimitExceeded);
TROPLINE_DEFINE_ERROR(IncidenceCheckFailed);
TROPLINE_DEFINE_ERROR(ParseError);
TROPLINE_DEFINE_ERROR(ValidationError);
TROPLINE_DEFINE_ERROR(EmptyScene);
TROPLINE_DEFINE_ERROR(InvalidArgument);

#undef TROPLINE_DEFINE_ERROR

}  // namespace tropline
