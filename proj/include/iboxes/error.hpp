#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iboxes {

enum class ErrorKind {
  NotCartan,
  NotSymmetrizable,
  UnknownType,
  OutOfRange,
  UnknownIndex,
  EmptyWord,
  NoSuchBox,
  WindowExceeded,
  NotAChain,
  NotMovable,
  NotFlippable,
  NotExchangeable,
  NotAPermutation,
  Inconsistent,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace iboxes
