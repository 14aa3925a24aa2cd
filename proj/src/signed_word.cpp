#include "iboxes/signed_word.hpp"

#include "iboxes/chain.hpp"
#include "iboxes/error.hpp"

#include <limits>
#include <string>

namespace iboxes {

SignedWord::SignedWord(std::shared_ptr<const CartanMatrix> cartan,
                       std::vector<SignedLetter> letters)
    : cartan_(std::move(cartan)), letters_(std::move(letters)) {
  for (const auto &l : letters_) {
    if (l.sign != 1 && l.sign != -1)
      throw Error(ErrorKind::Parse, "sign " + std::to_string(l.sign) + " is not +1 or -1");
    if (l.letter >= cartan_->rank())
      throw Error(ErrorKind::UnknownIndex,
                  "letter " + std::to_string(l.letter) + " is not an index of the Cartan matrix");
  }
  next_.assign(letters_.size(), 0);
  std::vector<std::int64_t> last_seen(cartan_->rank(), 0);
  for (std::size_t k = letters_.size(); k >= 1; --k) {
    auto &slot = last_seen[letters_[k - 1].letter];
    next_[k - 1] = slot;
    slot = static_cast<std::int64_t>(k);
  }
}

ExtInt SignedWord::shift(std::size_t k) const {
  if (k < 1 || k > length())
    throw Error(ErrorKind::OutOfRange, "position " + std::to_string(k) + " outside the word");
  return next_[k - 1] == 0 ? ExtInt::pos_inf() : ExtInt(next_[k - 1]);
}

std::vector<std::size_t> SignedWord::exchangeable() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= length(); ++k)
    if (next_[k - 1] != 0) out.push_back(k);
  return out;
}

std::vector<std::size_t> SignedWord::frozen() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= length(); ++k)
    if (next_[k - 1] == 0) out.push_back(k);
  return out;
}

SignedWord signed_word_of_chain(const Chain &chain) {
  std::vector<SignedLetter> letters;
  letters.reserve(chain.length());
  for (std::size_t k = 1; k <= chain.length(); ++k) {
    const int sign = (k >= 2 && chain.op(k - 1) == Expansion::R) ? -1 : 1;
    letters.push_back({sign, chain.color(k)});
  }
  return SignedWord(chain.word().cartan_ptr(), std::move(letters));
}

SignedWord left_reflection(const SignedWord &word) {
  if (word.length() == 0) throw Error(ErrorKind::EmptyWord, "left reflection of empty word");
  auto letters = word.letters();
  letters.front().sign = -letters.front().sign;
  return SignedWord(word.cartan_ptr(), std::move(letters));
}

SignedWord flip(const SignedWord &word, std::size_t j) {
  if (j < 1 || j >= word.length())
    throw Error(ErrorKind::OutOfRange, "flip position " + std::to_string(j) + " outside [1," +
                                           std::to_string(word.length()) + ")");
  if (word.sign(j) == word.sign(j + 1))
    throw Error(ErrorKind::NotFlippable,
                "positions " + std::to_string(j) + "," + std::to_string(j + 1) +
                    " carry the same sign");
  auto letters = word.letters();
  std::swap(letters[j - 1], letters[j]);
  return SignedWord(word.cartan_ptr(), std::move(letters));
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

/// Next-occurrence table with +inf encoded as kInf, so that the strict
/// chains j < k < j[1] < k[1] compare as plain integers.
std::vector<std::int64_t> shifts(const SignedWord &w) {
  std::vector<std::int64_t> out(w.length());
  for (std::size_t k = 1; k <= w.length(); ++k) {
    auto s = w.shift(k);
    out[k - 1] = s.is_finite() ? s.value() : kInf;
  }
  return out;
}

/// One entry of the signed-word matrix; j, k are 1-based.
std::int64_t signed_entry(const SignedWord &w, const std::vector<std::int64_t> &next,
                          std::int64_t j, std::int64_t k) {
  const std::int64_t j1 = next[j - 1], k1 = next[k - 1];
  auto eps = [&](std::int64_t t) { return static_cast<std::int64_t>(w.sign(t)); };
  if (k == j1) return eps(k);
  if (j == k1) return -eps(j);
  const std::int64_t c = w.cartan()(w.letter(j), w.letter(k));
  if (j < k && k < j1 && j1 < k1 && eps(j1) == eps(k)) return eps(k) * c;
  if (j < k && k < k1 && k1 < j1 && eps(k) == -eps(k1)) return eps(k) * c;
  if (k < j && j < k1 && k1 < j1 && eps(k1) == eps(j)) return -eps(j) * c;
  if (k < j && j < j1 && j1 < k1 && eps(j) == -eps(j1)) return -eps(j) * c;
  return 0;
}

std::vector<Index> iota_labels(std::size_t n) {
  std::vector<Index> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Index>(i + 1);
  return out;
}

std::vector<int> letter_symmetrizer(const SignedWord &w) {
  std::vector<int> d(w.length());
  for (std::size_t k = 1; k <= w.length(); ++k) d[k - 1] = w.cartan().symmetrizer(w.letter(k));
  return d;
}

std::vector<Index> to_labels(const std::vector<std::size_t> &v) {
  return {v.begin(), v.end()};
}

} // namespace

std::vector<std::int64_t> b_tilde_signed(const SignedWord &word) {
  const auto n = static_cast<std::int64_t>(word.length());
  const auto next = shifts(word);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n * n));
  for (std::int64_t j = 1; j <= n; ++j)
    for (std::int64_t k = 1; k <= n; ++k)
      out[static_cast<std::size_t>((j - 1) * n + (k - 1))] = signed_entry(word, next, j, k);
  return out;
}

ExchangeMatrix b_matrix_signed(const SignedWord &word) {
  const auto next = shifts(word);
  const auto cols = to_labels(word.exchangeable());
  const auto n = static_cast<std::int64_t>(word.length());
  std::vector<std::int64_t> out;
  out.reserve(word.length() * cols.size());
  for (std::int64_t j = 1; j <= n; ++j)
    for (auto k : cols) out.push_back(signed_entry(word, next, j, k));
  return ExchangeMatrix(iota_labels(word.length()), cols, std::move(out),
                        letter_symmetrizer(word));
}

ExchangeMatrix b_matrix_signed_omp(const SignedWord &word) {
  const auto next = shifts(word);
  const auto cols = to_labels(word.exchangeable());
  const auto n = static_cast<std::int64_t>(word.length());
  const auto nc = static_cast<std::int64_t>(cols.size());
  std::vector<std::int64_t> out(static_cast<std::size_t>(n * nc));
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 1; j <= n; ++j)
    for (std::int64_t c = 0; c < nc; ++c)
      out[static_cast<std::size_t>((j - 1) * nc + c)] =
          signed_entry(word, next, j, cols[static_cast<std::size_t>(c)]);
  return ExchangeMatrix(iota_labels(word.length()), cols, std::move(out),
                        letter_symmetrizer(word));
}

} // namespace iboxes
