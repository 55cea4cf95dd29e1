#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hanzi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based; `column` is 1-based or 0 when
/// the position within the line is not meaningful.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input whose content violates a data invariant (cycles,
/// out-of-range coordinates, unknown characters).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A requested computation needs an ingested layer that is absent.
class MissingLayerError : public Error {
 public:
  using Error::Error;
};

/// Non-fatal per-line problem reported by the line-oriented loaders.
struct Warning {
  std::size_t line = 0;
  std::string message;
};

}  // namespace hanzi
