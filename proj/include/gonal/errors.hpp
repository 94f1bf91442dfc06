#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gonal {

enum class ErrorKind {
  invalid_parameters,
  ambient_mismatch,
  cap_exceeded,
  no_invariant_subspace,
  invariant_hyperplane,
  parse_error,
  verification_failure,
  internal_inconsistency,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by brute-force routines whose work grows like q^n.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap, std::string required)
      : Error(ErrorKind::cap_exceeded, what + " (cap " + std::to_string(cap) +
                                           ", required " + required + ")"),
        cap_(cap),
        required_(std::move(required)) {}
  std::uint64_t cap() const { return cap_; }
  // Decimal string; the requirement may not fit 64 bits.
  const std::string& required() const { return required_; }

 private:
  std::uint64_t cap_;
  std::string required_;
};

}  // namespace gonal
