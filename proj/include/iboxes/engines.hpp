#pragma once

#include "iboxes/chain.hpp"
#include "iboxes/exchange_matrix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace iboxes {

/// One box move replayed on the matrix side.
struct MoveTraceStep {
  enum class Action { Mutate, Permute };

  std::size_t step = 0;     ///< 1-based counter along the move sequence
  std::size_t position = 0; ///< p: the move is nu_p
  Action action = Action::Permute;
  Color left_color = 0;  ///< color of box p before the move
  Color right_color = 0; ///< color of box p+1 before the move

  bool operator==(const MoveTraceStep &) const = default;
};

struct PathResult {
  ExchangeMatrix matrix;
  std::vector<MoveTraceStep> trace;
  Chain chain; ///< the chain reached after the last move
};

/// Closed formula for the matrix of the initial chain over [a, b].
ExchangeMatrix b_initial(std::shared_ptr<const IWord> word, Pos a, Pos b);

/// Starts from b_initial over [a, b] and replays the moves, each applied to
/// the current chain: mu_p when boxes p and p+1 share a color,
/// sigma_{p,p+1} otherwise. Throws NotMovable on an illegal move.
PathResult replay_moves(std::shared_ptr<const IWord> word, Pos a, Pos b,
                        std::span<const std::size_t> moves);

/// Matrix of a chain obtained by replaying reverse(path_to_initial(chain)).
PathResult b_via_mutation_path(const Chain &chain);

/// Interval-incidence construction on the boxes of the chain, completed by
/// skew-symmetrizability and restricted to K x K^ex. Throws Inconsistent if
/// both (j,k) and (k,j) claim a positive entry.
ExchangeMatrix b_kk(const Chain &chain);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool pass() const;
  void append(const Report &other);
};

struct VerifyOptions {
  /// Negative control: perturb the signed-word matrix before comparing.
  bool corrupt_word_matrix = false;
};

/// T1: path = word, P42: kk = word, SS: all three skew-symmetrizable,
/// KF: frozen sets of chain and signed word agree.
Report verify_chain(const Chain &chain, const VerifyOptions &options = {});

/// A random legal move sequence from the initial chain of the target's
/// range to the target: a random walk, a randomized return to the initial
/// chain, then a randomized descent reversed.
std::vector<std::size_t> random_path_from_initial(const Chain &target, std::mt19937_64 &rng,
                                                  std::size_t walk_length);

/// PATH: `trials` random move sequences all replay to the same matrix, and
/// to b_via_mutation_path's.
Report verify_path_independence(const Chain &chain, std::size_t trials, std::uint64_t seed);

/// STAB: B(C_t) restricted to K(C_s) x K^ex(C_s) equals B(C_s), for prefixes.
/// Throws OutOfRange unless 1 <= s <= t <= length.
Report verify_stabilization(const Chain &chain, std::size_t s, std::size_t t);

/// STAB over every prefix pair s < t (quadratic in the length).
Report verify_stabilization_all(const Chain &chain);

std::string describe_difference(const ExchangeMatrix &expected, const ExchangeMatrix &actual);

} // namespace iboxes
