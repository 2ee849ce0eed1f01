#pragma once

#include <stdexcept>
#include <string>

namespace sosf {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidField : Error {
  explicit InvalidField(const std::string& w) : Error(w) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& w) : Error(w) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error(w) {}
};

struct NoSquareRootOfMinusOne : Error {
  explicit NoSquareRootOfMinusOne(const std::string& w) : Error(w) {}
};

struct NonIntegralCoefficient : Error {
  explicit NonIntegralCoefficient(const std::string& w) : Error(w) {}
};

struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& w) : Error(w) {}
};

struct GramMismatch : Error {
  explicit GramMismatch(const std::string& w) : Error(w) {}
};

struct ConfigTooLarge : Error {
  explicit ConfigTooLarge(const std::string& w) : Error(w) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w) : Error(w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(w) {}
};

}  // namespace sosf
