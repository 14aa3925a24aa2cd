#include "iboxes/iword.hpp"

#include "iboxes/error.hpp"

#include <string>

namespace iboxes {

IWord::IWord(std::shared_ptr<const CartanMatrix> cartan, Pos first, std::vector<Color> letters)
    : cartan_(std::move(cartan)), first_(first), letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorKind::EmptyWord, "word has no letters");
  for (auto c : letters_) check_color(c);
}

void IWord::check_position(Pos s) const {
  if (!contains(s))
    throw Error(ErrorKind::OutOfRange, "position " + std::to_string(s) + " outside [" +
                                           std::to_string(first()) + "," +
                                           std::to_string(last()) + "]");
}

void IWord::check_color(Color j) const {
  if (j >= cartan_->rank())
    throw Error(ErrorKind::UnknownIndex, "letter " + std::to_string(j) +
                                             " is not an index of the Cartan matrix");
}

Color IWord::letter(Pos s) const {
  check_position(s);
  return letters_[offset(s)];
}

ExtInt IWord::succ(Pos s) const {
  check_position(s);
  const Color c = letters_[offset(s)];
  for (Pos t = s + 1; t <= last(); ++t)
    if (letters_[offset(t)] == c) return t;
  return ExtInt::pos_inf();
}

ExtInt IWord::pred(Pos s) const {
  check_position(s);
  const Color c = letters_[offset(s)];
  for (Pos t = s - 1; t >= first(); --t)
    if (letters_[offset(t)] == c) return t;
  return ExtInt::neg_inf();
}

ExtInt IWord::first_at_or_after(Pos s, Color j) const {
  check_position(s);
  check_color(j);
  for (Pos t = s; t <= last(); ++t)
    if (letters_[offset(t)] == j) return t;
  return ExtInt::pos_inf();
}

ExtInt IWord::last_at_or_before(Pos s, Color j) const {
  check_position(s);
  check_color(j);
  for (Pos t = s; t >= first(); --t)
    if (letters_[offset(t)] == j) return t;
  return ExtInt::neg_inf();
}

IWord hat_w0_window(std::shared_ptr<const CartanMatrix> cartan,
                    std::span<const Color> reduced_word, const DynkinInvolution &star,
                    Pos first, Pos last) {
  if (reduced_word.empty()) throw Error(ErrorKind::EmptyWord, "reduced word is empty");
  if (first > last)
    throw Error(ErrorKind::OutOfRange, "window [" + std::to_string(first) + "," +
                                           std::to_string(last) + "] is empty");
  if (star.size() != cartan->rank())
    throw Error(ErrorKind::UnknownIndex, "involution size does not match the Cartan rank");
  for (auto c : reduced_word)
    if (c >= cartan->rank())
      throw Error(ErrorKind::UnknownIndex, "reduced word letter " + std::to_string(c) +
                                               " is not an index of the Cartan matrix");

  const auto l = static_cast<Pos>(reduced_word.size());
  std::vector<Color> letters;
  letters.reserve(static_cast<std::size_t>(last - first + 1));
  for (Pos k = first; k <= last; ++k) {
    // k = base + shift * l with base in [1, l]; star applied |shift| times.
    Pos shift = (k - 1) >= 0 ? (k - 1) / l : -((l - k) / l);
    Pos base = k - shift * l;
    Color c = reduced_word[static_cast<std::size_t>(base - 1)];
    if (shift % 2 != 0) c = star(c);
    letters.push_back(c);
  }
  return IWord(std::move(cartan), first, std::move(letters));
}

} // namespace iboxes
