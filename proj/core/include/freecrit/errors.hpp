#pragma once

#include <stdexcept>
#include <string>

namespace freecrit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different fields (or a document declares another field).
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or expression; `position` is a byte offset when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotArtinian : public Error {
 public:
  using Error::Error;
};

class DependentModM2 : public Error {
 public:
  using Error::Error;
};

class NotLocal : public Error {
 public:
  using Error::Error;
};

class NotWellDefined : public Error {
 public:
  using Error::Error;
};

/// A graded computation would need information above the truncation degree.
class TruncationInsufficient : public Error {
 public:
  using Error::Error;
};

class NotChainMap : public Error {
 public:
  using Error::Error;
};

class NotInvertibleModM : public Error {
 public:
  using Error::Error;
};

class RelationFailsOnHomology : public Error {
 public:
  using Error::Error;
};

class NotIso : public Error {
 public:
  using Error::Error;
};

}  // namespace freecrit
