#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace osbc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OSBC_ERROR(Name)                         \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(#Name ": " + what) {}            \
  }

OSBC_ERROR(NotInSpan);
OSBC_ERROR(NotAComplex);
OSBC_ERROR(DimensionError);
OSBC_ERROR(ZeroForm);
OSBC_ERROR(DuplicateHyperplane);
OSBC_ERROR(TooManyHyperplanes);
OSBC_ERROR(CircuitCapExceeded);
OSBC_ERROR(ColoringInvalid);
OSBC_ERROR(KunnethViolation);
OSBC_ERROR(InternalCommutativityFailure);
OSBC_ERROR(NotTame);
OSBC_ERROR(CodimTooSmall);
OSBC_ERROR(NotIrreducible);
OSBC_ERROR(NotGood);
OSBC_ERROR(NotExact);
OSBC_ERROR(NotLambdaExact);
OSBC_ERROR(NotMuExact);
OSBC_ERROR(InvalidComposition);
OSBC_ERROR(NotProjective);

#undef OSBC_ERROR

// parse errors carry a position
class ParseError : public Error {
 public:
  ParseError(const std::string& kind, std::size_t line, std::size_t col,
             const std::string& what)
      : Error(kind + " at " + std::to_string(line) + ":" + std::to_string(col) +
              ": " + what),
        kind_(kind), line_(line), col_(col) {}
  const std::string& kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::string kind_;
  std::size_t line_;
  std::size_t col_;
};

}  // namespace osbc
