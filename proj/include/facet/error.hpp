#pragma once

#include <stdexcept>
#include <string>

namespace facet {

enum class ErrorKind {
  InvalidArgument,
  Io,
  BadMagic,
  VersionMismatch,
  Truncated,
  Corrupt,
  MismatchedMatrices,
  UnknownTerm,
  NoSeeds,
  UnknownCategory,
  InsufficientSeeds,
  OutOfRange,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace facet
