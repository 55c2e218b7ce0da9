#include "facet/error.hpp"

namespace facet {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return "invalid argument";
    case ErrorKind::Io:
      return "i/o";
    case ErrorKind::BadMagic:
      return "bad magic";
    case ErrorKind::VersionMismatch:
      return "version mismatch";
    case ErrorKind::Truncated:
      return "truncated";
    case ErrorKind::Corrupt:
      return "corrupt";
    case ErrorKind::MismatchedMatrices:
      return "mismatched matrices";
    case ErrorKind::UnknownTerm:
      return "unknown term";
    case ErrorKind::NoSeeds:
      return "no seeds";
    case ErrorKind::UnknownCategory:
      return "unknown category";
    case ErrorKind::InsufficientSeeds:
      return "insufficient seeds";
    case ErrorKind::OutOfRange:
      return "out of range";
  }
  return "unknown";
}

}  // namespace facet
