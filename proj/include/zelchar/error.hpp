#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zelchar {

enum class ErrorKind {
  InvalidSegment,
  ZeroMultisegment,
  Overflow,
  NoConnection,
  NotInJ0,
  RankExceeded,
  CapExceeded,
  NonDivisible,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it
// to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zelchar
