#include "iboxes/batch.hpp"

#include "iboxes/error.hpp"

namespace iboxes {

TrialOutcome run_trial(std::uint64_t seed, std::uint64_t index, const TrialOptions &options) {
  auto rng = trial_rng(seed, index);
  Instance instance = random_instance(rng, options.limits);
  const std::uint64_t path_seed = rng();

  TrialOutcome outcome;
  outcome.index = index;
  try {
    outcome.report = verify_chain(instance.chain, options.verify);
    if (options.path_trials > 0)
      outcome.report.append(
          verify_path_independence(instance.chain, options.path_trials, path_seed));
    if (options.stabilization) outcome.report.append(verify_stabilization_all(instance.chain));
  } catch (const Error &e) {
    outcome.report.checks.push_back({"ERROR", false, e.what()});
  }
  if (!outcome.pass()) outcome.counterexample = std::move(instance);
  return outcome;
}

std::vector<TrialOutcome> run_trials_serial(std::size_t count, std::uint64_t seed,
                                            const TrialOptions &options) {
  std::vector<TrialOutcome> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(run_trial(seed, i, options));
  return out;
}

std::vector<TrialOutcome> run_trials_parallel(std::size_t count, std::uint64_t seed,
                                              const TrialOptions &options) {
  std::vector<TrialOutcome> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = run_trial(seed, static_cast<std::uint64_t>(i), options);
  return out;
}

std::vector<Report> verify_chains_serial(const std::vector<Chain> &chains,
                                         const VerifyOptions &options) {
  std::vector<Report> out;
  out.reserve(chains.size());
  for (const auto &c : chains) out.push_back(verify_chain(c, options));
  return out;
}

std::vector<Report> verify_chains_parallel(const std::vector<Chain> &chains,
                                           const VerifyOptions &options) {
  std::vector<Report> out(chains.size());
  const auto n = static_cast<std::int64_t>(chains.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = verify_chain(chains[static_cast<std::size_t>(i)], options);
  return out;
}

} // namespace iboxes
