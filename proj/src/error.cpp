#include "iboxes/error.hpp"

namespace iboxes {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::NotCartan: return "NotCartan";
  case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
  case ErrorKind::UnknownType: return "UnknownType";
  case ErrorKind::OutOfRange: return "OutOfRange";
  case ErrorKind::UnknownIndex: return "UnknownIndex";
  case ErrorKind::EmptyWord: return "EmptyWord";
  case ErrorKind::NoSuchBox: return "NoSuchBox";
  case ErrorKind::WindowExceeded: return "WindowExceeded";
  case ErrorKind::NotAChain: return "NotAChain";
  case ErrorKind::NotMovable: return "NotMovable";
  case ErrorKind::NotFlippable: return "NotFlippable";
  case ErrorKind::NotExchangeable: return "NotExchangeable";
  case ErrorKind::NotAPermutation: return "NotAPermutation";
  case ErrorKind::Inconsistent: return "Inconsistent";
  case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

} // namespace iboxes
