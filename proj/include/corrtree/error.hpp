#pragma once

#include <stdexcept>
#include <string>

namespace corrtree {

// Base of every data-dependent failure raised by the library. The CLI maps
// anything derived from Error to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed delimited input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SchemaError : public Error {
  using Error::Error;
};

class AlignmentError : public Error {
  using Error::Error;
};

class DomainError : public Error {
  using Error::Error;
};

class DegenerateAssetError : public Error {
 public:
  explicit DegenerateAssetError(std::string asset)
      : Error("degenerate asset '" + asset + "': zero variance"), asset_(std::move(asset)) {}
  const std::string& asset() const noexcept { return asset_; }

 private:
  std::string asset_;
};

class InsufficientDataError : public Error {
  using Error::Error;
};

class LookupError : public Error {
  using Error::Error;
};

class ShapeError : public Error {
  using Error::Error;
};

class SizeError : public Error {
  using Error::Error;
};

class ComparisonError : public Error {
  using Error::Error;
};

class SpecError : public Error {
  using Error::Error;
};

}  // namespace corrtree
