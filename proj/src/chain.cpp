#include "iboxes/chain.hpp"

#include "iboxes/error.hpp"

#include <algorithm>

namespace iboxes {

std::string to_string(std::span<const Expansion> ops) {
  std::string s;
  s.reserve(ops.size());
  for (auto e : ops) s.push_back(static_cast<char>(e));
  return s;
}

std::vector<Expansion> parse_ops(std::string_view text) {
  std::vector<Expansion> ops;
  ops.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
    case 'L': ops.push_back(Expansion::L); break;
    case 'R': ops.push_back(Expansion::R); break;
    default:
      throw Error(ErrorKind::Parse, "expansion operator at offset " + std::to_string(i) +
                                        " is '" + std::string(1, text[i]) +
                                        "', expected L or R");
    }
  }
  return ops;
}

namespace {

int order_of(const IWord &word, Pos a, Pos b, Color color) {
  int n = 0;
  for (Pos t = a; t <= b; ++t)
    if (word.letter(t) == color) ++n;
  return n;
}

void check_interval(const IWord &word, Pos a, Pos b) {
  if (a > b || !word.contains(a) || !word.contains(b))
    throw Error(ErrorKind::OutOfRange, "interval [" + std::to_string(a) + "," +
                                           std::to_string(b) + "] not inside the word window");
}

} // namespace

IBox box_left_closure(const IWord &word, Pos a, Pos b) {
  check_interval(word, a, b);
  const Color c = word.letter(a);
  const ExtInt end = word.last_at_or_before(b, c);
  if (!end.is_finite() || end.value() < a)
    throw Error(ErrorKind::NoSuchBox, "color absent from the interval");
  return IBox{a, end.value(), c, order_of(word, a, end.value(), c)};
}

IBox box_right_closure(const IWord &word, Pos a, Pos b) {
  check_interval(word, a, b);
  const Color c = word.letter(b);
  const ExtInt start = word.first_at_or_after(a, c);
  if (!start.is_finite() || start.value() > b)
    throw Error(ErrorKind::NoSuchBox, "color absent from the interval");
  return IBox{start.value(), b, c, order_of(word, start.value(), b, c)};
}

Chain::Chain(std::shared_ptr<const IWord> word, Pos root, std::vector<Expansion> ops)
    : word_(std::move(word)), root_(root), ops_(std::move(ops)) {
  if (!word_->contains(root_))
    throw Error(ErrorKind::OutOfRange,
                "root " + std::to_string(root_) + " outside the word window");
  boxes_.reserve(ops_.size() + 1);
  envelopes_.reserve(ops_.size() + 1);
  boxes_.push_back(IBox{root_, root_, word_->letter(root_), 1});
  Pos lo = root_, hi = root_;
  envelopes_.emplace_back(lo, hi);
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    if (ops_[k] == Expansion::L) {
      if (!word_->contains(lo - 1))
        throw Error(ErrorKind::WindowExceeded, "left expansion at step " +
                                                   std::to_string(k + 2) +
                                                   " leaves the word window");
      --lo;
      boxes_.push_back(box_left_closure(*word_, lo, hi));
    } else {
      if (!word_->contains(hi + 1))
        throw Error(ErrorKind::WindowExceeded, "right expansion at step " +
                                                   std::to_string(k + 2) +
                                                   " leaves the word window");
      ++hi;
      boxes_.push_back(box_right_closure(*word_, lo, hi));
    }
    envelopes_.emplace_back(lo, hi);
  }
}

std::pair<Pos, std::vector<Expansion>> pair_from_chain(const IWord &word,
                                                       std::span<const IBox> boxes) {
  auto fail = [](std::size_t k, const std::string &why) -> Error {
    return Error(ErrorKind::NotAChain, "box " + std::to_string(k) + ": " + why);
  };
  if (boxes.empty()) throw Error(ErrorKind::NotAChain, "empty box list");

  const IBox &first = boxes.front();
  if (first.a != first.b) throw fail(1, "condition (i): first box is not a singleton");
  if (!word.contains(first.a)) throw fail(1, "outside the word window");

  std::vector<Expansion> ops;
  Pos lo = first.a, hi = first.b;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const IBox &box = boxes[k];
    if (box.a > box.b || !word.contains(box.a) || !word.contains(box.b))
      throw fail(k + 1, "not an interval inside the word window");
    if (word.letter(box.a) != word.letter(box.b))
      throw fail(k + 1, "endpoints have different letters");
    if (k > 0) {
      const Pos nlo = std::min(lo, box.a), nhi = std::max(hi, box.b);
      if (nlo == lo - 1 && nhi == hi) {
        ops.push_back(Expansion::L);
      } else if (nlo == lo && nhi == hi + 1) {
        ops.push_back(Expansion::R);
      } else {
        throw fail(k + 1, "condition (i): union is not an interval of length " +
                              std::to_string(k + 1));
      }
      lo = nlo;
      hi = nhi;
    }
    const Color c = word.letter(box.a);
    const ExtInt ma = word.first_at_or_after(lo, c);
    const ExtInt mb = word.last_at_or_before(hi, c);
    if (ma != ExtInt(box.a) || mb != ExtInt(box.b))
      throw fail(k + 1, "condition (ii): not the largest box of its color in [" +
                            std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  return {first.a, std::move(ops)};
}

Chain initial_chain(std::shared_ptr<const IWord> word, Pos a, Pos b) {
  if (a > b || !word->contains(a) || !word->contains(b))
    throw Error(ErrorKind::OutOfRange, "range [" + std::to_string(a) + "," +
                                           std::to_string(b) + "] not inside the word window");
  return Chain(std::move(word), b,
               std::vector<Expansion>(static_cast<std::size_t>(b - a), Expansion::L));
}

Chain prefix(const Chain &chain, std::size_t s) {
  if (s < 1 || s > chain.length())
    throw Error(ErrorKind::OutOfRange, "prefix length " + std::to_string(s) +
                                           " outside [1," + std::to_string(chain.length()) +
                                           "]");
  std::vector<Expansion> ops(chain.ops().begin(), chain.ops().begin() + (s - 1));
  return Chain(chain.word_ptr(), chain.root(), std::move(ops));
}

bool movable(const Chain &chain, std::size_t s) {
  if (s < 1 || s >= chain.length())
    throw Error(ErrorKind::OutOfRange, "move position " + std::to_string(s) +
                                           " outside [1," + std::to_string(chain.length()) +
                                           ")");
  return s == 1 || chain.op(s - 1) != chain.op(s);
}

Chain box_move(const Chain &chain, std::size_t s) {
  if (!movable(chain, s))
    throw Error(ErrorKind::NotMovable, "box " + std::to_string(s) + " is not movable");
  auto toggle = [](Expansion e) { return e == Expansion::L ? Expansion::R : Expansion::L; };
  Pos root = chain.root();
  if (s == 1) root += chain.op(1) == Expansion::R ? 1 : -1;
  auto ops = chain.ops();
  if (s >= 2) ops[s - 2] = toggle(ops[s - 2]);
  ops[s - 1] = toggle(ops[s - 1]);
  return Chain(chain.word_ptr(), root, std::move(ops));
}

Pos effective_end(const Chain &chain, std::size_t k) {
  if (k < 1 || k > chain.length())
    throw Error(ErrorKind::OutOfRange, "index " + std::to_string(k) + " outside the chain");
  if (k == 1) return chain.root();
  return chain.op(k - 1) == Expansion::R ? chain.box(k).b : chain.box(k).a;
}

IndexSplit frozen_indices(const Chain &chain) {
  const auto [a, b] = chain.range();
  const IWord &w = chain.word();
  IndexSplit out;
  for (std::size_t k = 1; k <= chain.length(); ++k) {
    const IBox &box = chain.box(k);
    const bool maximal = w.first_at_or_after(a, box.color) == ExtInt(box.a) &&
                         w.last_at_or_before(b, box.color) == ExtInt(box.b);
    (maximal ? out.frozen : out.exchangeable).push_back(k);
  }
  return out;
}

ExtInt color_shift(const Chain &chain, std::size_t k) {
  if (k < 1 || k > chain.length())
    throw Error(ErrorKind::OutOfRange, "index " + std::to_string(k) + " outside the chain");
  for (std::size_t t = k + 1; t <= chain.length(); ++t)
    if (chain.color(t) == chain.color(k)) return static_cast<std::int64_t>(t);
  return ExtInt::pos_inf();
}

std::vector<std::size_t> path_to_initial(const Chain &chain) {
  // Only the operator string and root change; rebuild boxes once at the end.
  std::vector<std::size_t> moves;
  auto ops = chain.ops();
  for (;;) {
    auto it = std::find(ops.begin(), ops.end(), Expansion::R);
    if (it == ops.end()) break;
    const auto k = static_cast<std::size_t>(it - ops.begin()) + 1;
    moves.push_back(k);
    ops[k - 1] = Expansion::L;
    if (k >= 2) ops[k - 2] = Expansion::R;
  }
  return moves;
}

} // namespace iboxes
