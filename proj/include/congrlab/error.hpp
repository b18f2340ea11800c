#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace congrlab {

enum class ErrorKind {
  NotALattice,
  TableError,
  ResiduationViolation,
  UnknownFixture,
  KindError,
  SignatureMismatch,
  SizeCap,
  NotClosed,
  ParentMismatch,
  NotACongruence,
  TrivialAlgebra,
  NotDistributive,
  NotASublattice,
  EncodingMismatch,
  PreconditionFailed,
  AmbiguousComplement,
  NotAFilter,
  NotAnIdeal,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace congrlab
