#include "topohopf/errors.hpp"

namespace topohopf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotPacked: return "NotPacked";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::UnknownOperation: return "UnknownOperation";
  }
  return "Unknown";
}

}  // namespace topohopf
