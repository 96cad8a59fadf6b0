#pragma once

#include <stdexcept>
#include <string>

namespace etainv {

// Base class for every error raised by the library. The CLI maps
// InvalidParams to exit status 1 and AffinityViolation to exit status 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define ETAINV_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

ETAINV_DEFINE_ERROR(DivisionByZero);
ETAINV_DEFINE_ERROR(ParseError);
ETAINV_DEFINE_ERROR(VariableMismatch);
ETAINV_DEFINE_ERROR(NonUnitConstantTerm);
ETAINV_DEFINE_ERROR(NonzeroConstantInner);
ETAINV_DEFINE_ERROR(NotReversible);
ETAINV_DEFINE_ERROR(OrderExceeded);
ETAINV_DEFINE_ERROR(SpecMismatch);
ETAINV_DEFINE_ERROR(NonNilpotentArgument);
ETAINV_DEFINE_ERROR(InsufficientOrder);
ETAINV_DEFINE_ERROR(InvalidParams);
ETAINV_DEFINE_ERROR(AffinityViolation);
ETAINV_DEFINE_ERROR(RangeError);

#undef ETAINV_DEFINE_ERROR

} // namespace etainv
