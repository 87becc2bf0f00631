#pragma once

#include <stdexcept>
#include <string>

namespace sextactica {

// Base class for everything thrown by the library. The CLI maps these to
// exit code 2 (internal arithmetic error).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero in K") {}
};

struct DegreeMismatch : Error {
  DegreeMismatch(int a, int b)
      : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct BadDimension : Error {
  using Error::Error;
};

struct DegreeTooLow : Error {
  DegreeTooLow(int got, int need)
      : Error("degree " + std::to_string(got) + " too low, need >= " + std::to_string(need)) {}
};

struct DuplicatePoints : Error {
  DuplicatePoints() : Error("conic_through: points are not pairwise distinct") {}
};

struct NonBinomial : Error {
  using Error::Error;
};

struct GeneratorSearchFailed : Error {
  GeneratorSearchFailed() : Error("no valid level-6 generator pair found") {}
};

struct ParseError : Error {
  using Error::Error;
};

struct UnknownTarget : Error {
  using Error::Error;
};

}  // namespace sextactica
