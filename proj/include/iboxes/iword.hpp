#pragma once

#include "iboxes/cartan.hpp"
#include "iboxes/ext_int.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace iboxes {

/// Position inside the integer interval a word is indexed by.
using Pos = std::int64_t;

/// A sequence of Cartan indices over a finite integer window [first, last].
///
/// Positions outside the window are treated as absent, so every "next
/// occurrence" query that leaves the window resolves to +inf or -inf.
class IWord {
public:
  /// Throws EmptyWord when letters is empty, UnknownIndex on a letter not in I.
  IWord(std::shared_ptr<const CartanMatrix> cartan, Pos first, std::vector<Color> letters);

  Pos first() const { return first_; }
  Pos last() const { return first_ + static_cast<Pos>(letters_.size()) - 1; }
  std::size_t size() const { return letters_.size(); }
  bool contains(Pos s) const { return s >= first() && s <= last(); }

  /// Throws OutOfRange.
  Color letter(Pos s) const;
  std::span<const Color> letters() const { return letters_; }

  const CartanMatrix &cartan() const { return *cartan_; }
  const std::shared_ptr<const CartanMatrix> &cartan_ptr() const { return cartan_; }

  /// Least t > s with the same letter as s (s^+).
  ExtInt succ(Pos s) const;
  /// Greatest t < s with the same letter as s (s^-).
  ExtInt pred(Pos s) const;
  /// Least t >= s with letter j (s(j)^oplus). Throws OutOfRange, UnknownIndex.
  ExtInt first_at_or_after(Pos s, Color j) const;
  /// Greatest t <= s with letter j (s(j)^ominus).
  ExtInt last_at_or_before(Pos s, Color j) const;

  bool operator==(const IWord &o) const {
    return first_ == o.first_ && letters_ == o.letters_ && *cartan_ == *o.cartan_;
  }

private:
  void check_position(Pos s) const;
  void check_color(Color j) const;
  std::size_t offset(Pos s) const { return static_cast<std::size_t>(s - first_); }

  std::shared_ptr<const CartanMatrix> cartan_;
  Pos first_;
  std::vector<Color> letters_;
};

/// Window [first, last] of the bi-infinite extension of a reduced word
/// i_1..i_l (placed at positions 1..l) under i_{k+l} = star(i_k).
/// Reducedness is not checked. Throws EmptyWord, UnknownIndex, OutOfRange.
IWord hat_w0_window(std::shared_ptr<const CartanMatrix> cartan,
                    std::span<const Color> reduced_word, const DynkinInvolution &star,
                    Pos first, Pos last);

} // namespace iboxes
