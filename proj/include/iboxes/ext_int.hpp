#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace iboxes {

/// Integer extended by the two sentinels -inf and +inf.
class ExtInt {
public:
  constexpr ExtInt(std::int64_t v) : kind_(Kind::Finite), value_(v) {}

  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // Precondition: is_finite().
  constexpr std::int64_t value() const { return value_; }

  constexpr auto operator<=>(const ExtInt &) const = default;

  std::string to_string() const {
    switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    default: return std::to_string(value_);
    }
  }

private:
  // Declaration order matters: the defaulted comparison looks at kind_ first.
  enum class Kind : std::int8_t { NegInf = -1, Finite = 0, PosInf = 1 };
  constexpr explicit ExtInt(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  std::int64_t value_;
};

} // namespace iboxes
