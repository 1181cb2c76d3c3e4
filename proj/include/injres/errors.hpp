#pragma once

#include <stdexcept>
#include <string>

namespace injres {

// Every failure the library reports derives from Error so callers can catch broadly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define INJRES_ERROR(Name)                                        \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

INJRES_ERROR(FieldMismatch);
INJRES_ERROR(UnsupportedCharacteristic);
INJRES_ERROR(DivisionByZero);
INJRES_ERROR(NotDivisible);
INJRES_ERROR(DegenerateResultant);
INJRES_ERROR(NotUnit);
INJRES_ERROR(UnfactoredDenominator);
INJRES_ERROR(ParseError);
INJRES_ERROR(NotSystemOfParameters);
INJRES_ERROR(MatrixMismatch);
INJRES_ERROR(BadDenominator);
INJRES_ERROR(NotApplicable);
INJRES_ERROR(BadLocus);
INJRES_ERROR(NotInEZW);
INJRES_ERROR(NotMonomial);
INJRES_ERROR(DegreeMismatch);
INJRES_ERROR(BadIdeal);
INJRES_ERROR(UnsupportedIndex);
INJRES_ERROR(InvariantViolation);
INJRES_ERROR(TruncationTooSmall);
INJRES_ERROR(BoundExceeded);

#undef INJRES_ERROR

}  // namespace injres
