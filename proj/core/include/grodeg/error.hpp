#ifndef GRODEG_ERROR_HPP
#define GRODEG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grodeg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing QQ with Fp, or two different primes.
struct FieldMismatchError : Error {
  using Error::Error;
};

// Variable-count mismatch, or a variety of unexpected dimension.
struct DimensionError : Error {
  using Error::Error;
};

// Leading term of zero, division by zero, and similar domain violations.
struct DomainError : Error {
  using Error::Error;
};

// A stated operation precondition does not hold for the given input.
struct PreconditionError : Error {
  using Error::Error;
};

// A self-check on a computed result failed; indicates a bug or bad input
// presented as verified.
struct InternalConsistencyError : Error {
  using Error::Error;
};

// Degree ceiling, size bound or candidate budget exceeded.
struct BudgetError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& file, int line, int column, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
              ": " + what),
        file(file), line(line), column(column) {}
  ParseError(const std::string& file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file(file), line(line), column(0) {}
  ParseError(const std::string& file, const std::string& what)
      : Error(file + ": " + what), file(file), line(0), column(0) {}
  std::string file;
  int line;
  int column;
};

}  // namespace grodeg

#endif
