#pragma once

#include "iboxes/chain.hpp"
#include "iboxes/signed_word.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

namespace iboxes {

struct InstanceLimits {
  std::size_t max_rank = 5;
  int min_entry = -3;          ///< off-diagonal entries lie in [min_entry, 0]
  std::size_t max_word_length = 14;
};

/// Random symmetrizable generalized Cartan matrix of rank in [1, max_rank].
/// A hidden symmetrizer with entries in {1,2,3} is drawn first and every
/// edge is chosen compatible with it, so cycles stay symmetrizable and
/// disconnected diagrams occur.
CartanMatrix random_cartan(std::mt19937_64 &rng, const InstanceLimits &limits = {});

/// Random word over [first, first + length - 1] with uniform letters.
std::shared_ptr<const IWord> random_word(std::shared_ptr<const CartanMatrix> cartan,
                                         std::mt19937_64 &rng, const InstanceLimits &limits = {});

/// Chain of range [a, b]: root uniform in [a, b], then c-a letters L and
/// b-c letters R in random order.
Chain random_chain(std::shared_ptr<const IWord> word, Pos a, Pos b, std::mt19937_64 &rng);

struct Instance {
  std::shared_ptr<const CartanMatrix> cartan;
  std::shared_ptr<const IWord> word;
  Chain chain;
};

/// Cartan matrix, word and a chain whose range is a random sub-interval.
Instance random_instance(std::mt19937_64 &rng, const InstanceLimits &limits = {});

SignedWord random_signed_word(std::shared_ptr<const CartanMatrix> cartan, std::size_t length,
                              std::mt19937_64 &rng);

/// Every chain whose envelope fits inside the word window.
std::vector<Chain> enumerate_chains(const std::shared_ptr<const IWord> &word);

/// Generator for trial `index` of a run seeded with `seed`; independent of
/// how trials are scheduled.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

} // namespace iboxes
