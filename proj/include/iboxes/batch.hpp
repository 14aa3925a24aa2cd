#pragma once

#include "iboxes/engines.hpp"
#include "iboxes/random.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iboxes {

struct TrialOptions {
  InstanceLimits limits;
  std::size_t path_trials = 3; ///< random move sequences per instance
  bool stabilization = true;   ///< all prefix pairs of the instance chain
  VerifyOptions verify;
};

struct TrialOutcome {
  std::uint64_t index = 0;
  Report report;
  /// Regenerated from (seed, index) when the report fails.
  std::optional<Instance> counterexample;

  bool pass() const { return report.pass(); }
};

/// Runs one randomized trial: verify_chain, path independence and
/// stabilization on random_instance(trial_rng(seed, index)).
TrialOutcome run_trial(std::uint64_t seed, std::uint64_t index, const TrialOptions &options);

/// Reference loop, one trial after another.
std::vector<TrialOutcome> run_trials_serial(std::size_t count, std::uint64_t seed,
                                            const TrialOptions &options = {});

/// OpenMP fan-out over trials; results are ordered by trial index and
/// identical to run_trials_serial.
std::vector<TrialOutcome> run_trials_parallel(std::size_t count, std::uint64_t seed,
                                              const TrialOptions &options = {});

/// verify_chain over a list of chains, serial and OpenMP variants.
std::vector<Report> verify_chains_serial(const std::vector<Chain> &chains,
                                         const VerifyOptions &options = {});
std::vector<Report> verify_chains_parallel(const std::vector<Chain> &chains,
                                           const VerifyOptions &options = {});

} // namespace iboxes
