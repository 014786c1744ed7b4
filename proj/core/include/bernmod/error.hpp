#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bernmod {

enum class Errc {
  InvalidArgument,
  NotInvertible,
  ZeroResidue,
  ModulusMismatch,
  EvenModulus,
  SizeMismatch,
  CountOutOfRange,
  LengthMismatch,
  NonInvertibleLeadingTerm,
  BadRootOrder,
  IndexOutOfRange,
  OddIndex,
  SearchExhausted,
  DegenerateFactor,
  SchemeDisagreement,
  MethodDisagreement,
  ConsistencyFailure,
  FormatError,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported through this one exception type; the
// code distinguishes them.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bernmod
