#pragma once

#include <stdexcept>
#include <string>

namespace besico {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BESICO_DEFINE_ERROR(Name)                   \
  class Name : public Error {                       \
   public:                                          \
    explicit Name(const std::string& what)          \
        : Error(std::string(#Name ": ") + what) {}  \
  }

BESICO_DEFINE_ERROR(NotPrimePower);
BESICO_DEFINE_ERROR(DivisionByZero);
BESICO_DEFINE_ERROR(FieldMismatch);
BESICO_DEFINE_ERROR(LengthMismatch);
BESICO_DEFINE_ERROR(OutOfRange);
BESICO_DEFINE_ERROR(TooLarge);
BESICO_DEFINE_ERROR(NegativeResult);
BESICO_DEFINE_ERROR(NegativeCellCount);
BESICO_DEFINE_ERROR(DuplicateLine);
BESICO_DEFINE_ERROR(IdentityViolation);
BESICO_DEFINE_ERROR(PhiMismatch);
BESICO_DEFINE_ERROR(ParseError);

#undef BESICO_DEFINE_ERROR

}  // namespace besico
