#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace topohopf {

enum class ErrorKind {
  NotReflexive,
  NotTransitive,
  NotPacked,
  NotPermutation,
  CapExceeded,
  SizeMismatch,
  EmptyInput,
  Parse,
  UnknownOperation,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by make_topology when transitivity fails; carries the 1-based
/// triple (i, j, k) with i <= j, j <= k but not i <= k.
class NotTransitiveError : public Error {
 public:
  NotTransitiveError(std::array<std::size_t, 3> witness, const std::string& what)
      : Error(ErrorKind::NotTransitive, what), witness_(witness) {}

  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::size_t, 3> witness_;
};

}  // namespace topohopf
