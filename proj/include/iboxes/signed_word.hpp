#pragma once

#include "iboxes/cartan.hpp"
#include "iboxes/exchange_matrix.hpp"
#include "iboxes/ext_int.hpp"

#include <memory>
#include <vector>

namespace iboxes {

class Chain;

struct SignedLetter {
  int sign = 1; ///< +1 or -1
  Color letter = 0;

  bool operator==(const SignedLetter &) const = default;
};

/// A finite signed word over the index set of a Cartan matrix.
/// Positions are 1-based.
class SignedWord {
public:
  /// Throws Parse on a sign other than +-1, UnknownIndex on a bad letter.
  SignedWord(std::shared_ptr<const CartanMatrix> cartan, std::vector<SignedLetter> letters);

  std::size_t length() const { return letters_.size(); }
  const SignedLetter &at(std::size_t k) const { return letters_.at(k - 1); }
  int sign(std::size_t k) const { return at(k).sign; }
  Color letter(std::size_t k) const { return at(k).letter; }
  const std::vector<SignedLetter> &letters() const { return letters_; }

  const CartanMatrix &cartan() const { return *cartan_; }
  const std::shared_ptr<const CartanMatrix> &cartan_ptr() const { return cartan_; }

  /// k[1]: next position carrying the same letter, else +inf.
  ExtInt shift(std::size_t k) const;
  /// Positions s with a later repetition of their letter.
  std::vector<std::size_t> exchangeable() const;
  std::vector<std::size_t> frozen() const;

  bool operator==(const SignedWord &o) const {
    return letters_ == o.letters_ && *cartan_ == *o.cartan_;
  }

private:
  std::shared_ptr<const CartanMatrix> cartan_;
  std::vector<SignedLetter> letters_;
  std::vector<std::int64_t> next_; ///< 0 when no later repetition
};

/// h_k is the color of box k; the sign is - after a right expansion, else +.
SignedWord signed_word_of_chain(const Chain &chain);

/// Negates the first sign. Throws EmptyWord.
SignedWord left_reflection(const SignedWord &word);

/// Swaps positions j and j+1, which must carry opposite signs.
/// Throws OutOfRange, NotFlippable.
SignedWord flip(const SignedWord &word, std::size_t j);

/// Full K x K matrix of the signed word, row-major, l x l.
std::vector<std::int64_t> b_tilde_signed(const SignedWord &word);

/// Its K x K^ex restriction, skew-symmetrizer d_{|h_k|}.
ExchangeMatrix b_matrix_signed(const SignedWord &word);

/// Same matrix, rows filled by an OpenMP parallel loop.
ExchangeMatrix b_matrix_signed_omp(const SignedWord &word);

} // namespace iboxes
