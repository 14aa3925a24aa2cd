#pragma once

#include "iboxes/iword.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iboxes {

/// An i-box [a, b] with i_a = i_b. Order counts occurrences of the color in [a, b].
struct IBox {
  Pos a = 0;
  Pos b = 0;
  Color color = 0;
  int order = 1;

  bool operator==(const IBox &) const = default;
};

enum class Expansion : char { L = 'L', R = 'R' };

std::string to_string(std::span<const Expansion> ops);
/// Throws Parse on characters other than 'L' and 'R'.
std::vector<Expansion> parse_ops(std::string_view text);

/// [a, b}: largest box of color i_a inside [a, b] starting at a.
IBox box_left_closure(const IWord &word, Pos a, Pos b);
/// {a, b]: largest box of color i_b inside [a, b] ending at b.
IBox box_right_closure(const IWord &word, Pos a, Pos b);

/// A chain of i-boxes, stored as its root and expansion operators.
///
/// Indices k into the chain are 1-based throughout (k in [1, length()]),
/// matching the index set K = [1, l] of the exchange matrices built on it.
class Chain {
public:
  /// Rebuilds the boxes recursively. Throws WindowExceeded if an envelope
  /// leaves the word window, OutOfRange if the root does.
  Chain(std::shared_ptr<const IWord> word, Pos root, std::vector<Expansion> ops);

  std::size_t length() const { return boxes_.size(); }
  Pos root() const { return root_; }
  const std::vector<Expansion> &ops() const { return ops_; }
  /// E_k for k in [1, l-1].
  Expansion op(std::size_t k) const { return ops_.at(k - 1); }

  const std::vector<IBox> &boxes() const { return boxes_; }
  const IBox &box(std::size_t k) const { return boxes_.at(k - 1); }
  Color color(std::size_t k) const { return box(k).color; }
  /// [a~_k, b~_k], the union of the first k boxes.
  std::pair<Pos, Pos> envelope(std::size_t k) const { return envelopes_.at(k - 1); }
  std::pair<Pos, Pos> range() const { return envelopes_.back(); }

  const IWord &word() const { return *word_; }
  const std::shared_ptr<const IWord> &word_ptr() const { return word_; }

  /// Same (root, ops) on the same word.
  bool operator==(const Chain &o) const {
    return root_ == o.root_ && ops_ == o.ops_ && *word_ == *o.word_;
  }

private:
  std::shared_ptr<const IWord> word_;
  Pos root_;
  std::vector<Expansion> ops_;
  std::vector<IBox> boxes_;
  std::vector<std::pair<Pos, Pos>> envelopes_;
};

inline Chain chain_from_pair(std::shared_ptr<const IWord> word, Pos root,
                             std::vector<Expansion> ops) {
  return Chain(std::move(word), root, std::move(ops));
}

/// Recovers (root, ops) from an explicit box list, checking both chain
/// conditions. Throws NotAChain naming the failing index and condition.
std::pair<Pos, std::vector<Expansion>> pair_from_chain(const IWord &word,
                                                       std::span<const IBox> boxes);

/// The chain with root b and only left expansions; its k-th box is [b-k+1, b}.
Chain initial_chain(std::shared_ptr<const IWord> word, Pos a, Pos b);

/// First s boxes of the chain (a sub-chain). Throws OutOfRange.
Chain prefix(const Chain &chain, std::size_t s);

/// Throws OutOfRange unless 1 <= s < length().
bool movable(const Chain &chain, std::size_t s);
/// Box move at s. Throws NotMovable.
Chain box_move(const Chain &chain, std::size_t s);

/// Endpoint acquired at step k: b_k after R, a_k after L, the root for k = 1.
Pos effective_end(const Chain &chain, std::size_t k);

struct IndexSplit {
  std::vector<std::size_t> frozen;
  std::vector<std::size_t> exchangeable;
};

/// Frozen indices are those whose box is the maximal box of its color in
/// the chain's range.
IndexSplit frozen_indices(const Chain &chain);

/// k[1]: the next index after k whose box has the same color, else +inf.
ExtInt color_shift(const Chain &chain, std::size_t k);

/// Box-move positions taking the chain to initial_chain over its range,
/// by bubbling the leftmost R toward the root.
std::vector<std::size_t> path_to_initial(const Chain &chain);

} // namespace iboxes
