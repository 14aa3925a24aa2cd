#include "iboxes/random.hpp"

#include <algorithm>

namespace iboxes {

CartanMatrix random_cartan(std::mt19937_64 &rng, const InstanceLimits &limits) {
  std::uniform_int_distribution<std::size_t> rank_dist(1, limits.max_rank);
  const std::size_t n = rank_dist(rng);
  std::uniform_int_distribution<int> d_dist(1, 3);
  std::vector<int> hidden(n);
  for (auto &d : hidden) d = d_dist(rng);

  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  std::bernoulli_distribution connect(0.6);
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!connect(rng)) continue;
      std::vector<std::pair<int, int>> options;
      for (int x = limits.min_entry; x <= -1; ++x)
        for (int y = limits.min_entry; y <= -1; ++y)
          if (hidden[i] * x == hidden[j] * y) options.emplace_back(x, y);
      if (options.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      const auto [x, y] = options[pick(rng)];
      c[i][j] = x;
      c[j][i] = y;
    }
  }
  return validate_cartan(c);
}

std::shared_ptr<const IWord> random_word(std::shared_ptr<const CartanMatrix> cartan,
                                         std::mt19937_64 &rng, const InstanceLimits &limits) {
  std::uniform_int_distribution<std::size_t> len_dist(1, limits.max_word_length);
  std::uniform_int_distribution<Color> letter_dist(0, cartan->rank() - 1);
  std::uniform_int_distribution<Pos> first_dist(-8, 8);
  const auto len = len_dist(rng);
  std::vector<Color> letters(len);
  for (auto &x : letters) x = letter_dist(rng);
  return std::make_shared<const IWord>(std::move(cartan), first_dist(rng), std::move(letters));
}

Chain random_chain(std::shared_ptr<const IWord> word, Pos a, Pos b, std::mt19937_64 &rng) {
  std::uniform_int_distribution<Pos> root_dist(a, b);
  const Pos root = root_dist(rng);
  std::vector<Expansion> ops(static_cast<std::size_t>(root - a), Expansion::L);
  ops.insert(ops.end(), static_cast<std::size_t>(b - root), Expansion::R);
  std::shuffle(ops.begin(), ops.end(), rng);
  return Chain(std::move(word), root, std::move(ops));
}

Instance random_instance(std::mt19937_64 &rng, const InstanceLimits &limits) {
  auto cartan = std::make_shared<const CartanMatrix>(random_cartan(rng, limits));
  auto word = random_word(cartan, rng, limits);
  std::uniform_int_distribution<Pos> pos(word->first(), word->last());
  Pos a = pos(rng), b = pos(rng);
  if (a > b) std::swap(a, b);
  Chain chain = random_chain(word, a, b, rng);
  return Instance{std::move(cartan), std::move(word), std::move(chain)};
}

SignedWord random_signed_word(std::shared_ptr<const CartanMatrix> cartan, std::size_t length,
                              std::mt19937_64 &rng) {
  std::uniform_int_distribution<Color> letter_dist(0, cartan->rank() - 1);
  std::bernoulli_distribution negative(0.5);
  std::vector<SignedLetter> letters(length);
  for (auto &x : letters) x = {negative(rng) ? -1 : 1, letter_dist(rng)};
  return SignedWord(std::move(cartan), std::move(letters));
}

std::vector<Chain> enumerate_chains(const std::shared_ptr<const IWord> &word) {
  std::vector<Chain> out;
  const std::size_t n = word->size();
  for (Pos root = word->first(); root <= word->last(); ++root) {
    for (std::size_t len = 0; len < n; ++len) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        std::vector<Expansion> ops(len);
        Pos lo = root, hi = root;
        for (std::size_t k = 0; k < len; ++k) {
          ops[k] = (mask >> k) & 1 ? Expansion::R : Expansion::L;
          ops[k] == Expansion::L ? --lo : ++hi;
        }
        if (word->contains(lo) && word->contains(hi)) out.emplace_back(word, root, std::move(ops));
      }
    }
  }
  return out;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

} // namespace iboxes
