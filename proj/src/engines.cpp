#include "iboxes/engines.hpp"

#include "iboxes/error.hpp"
#include "iboxes/random.hpp"
#include "iboxes/signed_word.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace iboxes {

namespace {

std::vector<Index> iota_labels(std::size_t n) {
  std::vector<Index> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Index>(i + 1);
  return out;
}

std::vector<int> color_symmetrizer(const Chain &chain) {
  std::vector<int> d(chain.length());
  for (std::size_t k = 1; k <= chain.length(); ++k)
    d[k - 1] = chain.word().cartan().symmetrizer(chain.color(k));
  return d;
}

std::vector<Index> exchangeable_labels(const Chain &chain) {
  const auto split = frozen_indices(chain);
  return {split.exchangeable.begin(), split.exchangeable.end()};
}

} // namespace

ExchangeMatrix b_initial(std::shared_ptr<const IWord> word, Pos a, Pos b) {
  const Chain chain = initial_chain(std::move(word), a, b);
  const auto l = static_cast<std::int64_t>(chain.length());
  const CartanMatrix &cartan = chain.word().cartan();

  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> next(chain.length(), inf);
  for (std::int64_t j = 1; j <= l; ++j) {
    for (std::int64_t t = j + 1; t <= l; ++t) {
      if (chain.color(t) == chain.color(j)) {
        next[j - 1] = t;
        break;
      }
    }
  }

  const auto cols = exchangeable_labels(chain);
  std::vector<std::int64_t> entries;
  entries.reserve(chain.length() * cols.size());
  for (std::int64_t j = 1; j <= l; ++j) {
    for (auto k : cols) {
      const std::int64_t j1 = next[j - 1], k1 = next[k - 1];
      const int c = cartan(chain.color(j), chain.color(k));
      std::int64_t v = 0;
      if (k == j1) v = 1;
      else if (j == k1) v = -1;
      else if (j < k && k < j1 && j1 < k1) v = c;
      else if (k < j && j < k1 && k1 < j1) v = -c;
      entries.push_back(v);
    }
  }
  return ExchangeMatrix(iota_labels(chain.length()), cols, std::move(entries),
                        color_symmetrizer(chain));
}

PathResult replay_moves(std::shared_ptr<const IWord> word, Pos a, Pos b,
                        std::span<const std::size_t> moves) {
  Chain chain = initial_chain(word, a, b);
  ExchangeMatrix matrix = b_initial(word, a, b);
  std::vector<MoveTraceStep> trace;
  trace.reserve(moves.size());
  std::size_t step = 0;
  for (auto p : moves) {
    MoveTraceStep entry;
    entry.step = ++step;
    entry.position = p;
    entry.left_color = chain.color(p);
    entry.right_color = chain.color(p + 1);
    if (entry.left_color == entry.right_color) {
      entry.action = MoveTraceStep::Action::Mutate;
      matrix = mutate(matrix, static_cast<Index>(p));
    } else {
      entry.action = MoveTraceStep::Action::Permute;
      matrix = permute(matrix, transposition(static_cast<Index>(p), static_cast<Index>(p + 1)));
    }
    chain = box_move(chain, p);
    trace.push_back(entry);
  }
  if (matrix.cols() != exchangeable_labels(chain))
    throw Error(ErrorKind::Inconsistent,
                "replayed matrix columns do not match the exchangeable indices of the chain");
  return PathResult{std::move(matrix), std::move(trace), std::move(chain)};
}

PathResult b_via_mutation_path(const Chain &chain) {
  auto moves = path_to_initial(chain);
  std::reverse(moves.begin(), moves.end());
  const auto [a, b] = chain.range();
  return replay_moves(chain.word_ptr(), a, b, moves);
}

ExchangeMatrix b_kk(const Chain &chain) {
  const std::size_t l = chain.length();
  const IWord &w = chain.word();
  const CartanMatrix &cartan = w.cartan();

  struct Probe {
    ExtInt a, b;         // box endpoints
    ExtInt a_minus;      // a^-
    ExtInt b_minus;      // b^-
    ExtInt b_plus;       // b^+
    ExtInt effective;
  };
  std::vector<Probe> box;
  box.reserve(l);
  std::set<std::pair<Pos, Pos>> members;
  for (std::size_t k = 1; k <= l; ++k) {
    const IBox &x = chain.box(k);
    box.push_back({x.a, x.b, w.pred(x.a), w.pred(x.b), w.succ(x.b), effective_end(chain, k)});
    members.emplace(x.a, x.b);
  }
  auto in_chain = [&](ExtInt a, ExtInt b) {
    return a.is_finite() && b.is_finite() && members.contains({a.value(), b.value()});
  };

  // Value of the entry (j,k) if one of the positive clauses applies, else 0.
  auto positive = [&](std::size_t j, std::size_t k) -> std::int64_t {
    const Probe &J = box[j], &K = box[k];
    if ((J.a == K.a && K.b == J.b_minus) || (J.b == K.b && K.a == J.a_minus)) return 1;
    const int c = cartan(chain.color(j + 1), chain.color(k + 1));
    if (c >= 0) return 0;
    const bool j_grows_right = in_chain(J.a, J.b_plus);
    const bool k_grows_left = in_chain(K.a_minus, K.b);
    const bool j_eff_left = J.effective == J.a;
    const bool k_eff_right = K.effective == K.b;
    const bool cond_a = j_grows_right && j_eff_left && K.a_minus < J.a && J.a < K.a &&
                        K.a <= K.b && K.b < J.b_plus && J.b_plus < K.b_plus;
    const bool cond_b = j_grows_right && k_eff_right && K.a_minus < J.a && J.a <= J.b &&
                        J.b < K.b && K.b < J.b_plus && J.b_plus < K.b_plus;
    const bool cond_c = k_grows_left && k_eff_right && J.a_minus < K.a_minus &&
                        K.a_minus < J.a && J.a <= J.b && J.b < K.b && K.b < J.b_plus;
    const bool cond_d = k_grows_left && j_eff_left && J.a_minus < K.a_minus &&
                        K.a_minus < J.a && J.a < K.a && K.a <= K.b && K.b < J.b_plus;
    return (cond_a || cond_b || cond_c || cond_d) ? -c : 0;
  };

  std::vector<std::int64_t> full(l * l, 0);
  const auto d = color_symmetrizer(chain);
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t k = j + 1; k < l; ++k) {
      const auto pjk = positive(j, k), pkj = positive(k, j);
      if (pjk > 0 && pkj > 0)
        throw Error(ErrorKind::Inconsistent, "entries (" + std::to_string(j + 1) + "," +
                                                 std::to_string(k + 1) +
                                                 ") and its transpose are both positive");
      // d_j b_jk = -d_k b_kj
      auto complete = [&](std::size_t x, std::size_t y, std::int64_t v) {
        const auto num = static_cast<std::int64_t>(d[x]) * v;
        if (num % d[y] != 0)
          throw Error(ErrorKind::Inconsistent, "skew-symmetrizer does not divide entry (" +
                                                   std::to_string(x + 1) + "," +
                                                   std::to_string(y + 1) + ")");
        full[x * l + y] = v;
        full[y * l + x] = -num / d[y];
      };
      if (pjk > 0) complete(j, k, pjk);
      else if (pkj > 0) complete(k, j, pkj);
    }
  }

  const auto cols = exchangeable_labels(chain);
  std::vector<std::int64_t> entries;
  entries.reserve(l * cols.size());
  for (std::size_t j = 0; j < l; ++j)
    for (auto k : cols) entries.push_back(full[j * l + static_cast<std::size_t>(k - 1)]);
  return ExchangeMatrix(iota_labels(l), cols, std::move(entries), d);
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.pass; });
}

void Report::append(const Report &other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string describe_difference(const ExchangeMatrix &expected, const ExchangeMatrix &actual) {
  auto diff = first_difference(expected, actual);
  if (!diff) return "equal";
  std::ostringstream out;
  if (diff->first < 0) {
    out << "index sets or symmetrizers differ (rows " << expected.row_count() << " vs "
        << actual.row_count() << ", cols " << expected.col_count() << " vs "
        << actual.col_count() << ")";
  } else {
    out << "entry (" << diff->first << "," << diff->second << "): expected "
        << expected.at(diff->first, diff->second) << ", got "
        << actual.at(diff->first, diff->second);
  }
  return out.str();
}

namespace {

CheckResult compare(std::string name, const ExchangeMatrix &expected,
                    const ExchangeMatrix &actual) {
  if (!first_difference(expected, actual)) return {std::move(name), true, ""};
  return {std::move(name), false, describe_difference(expected, actual)};
}

} // namespace

Report verify_chain(const Chain &chain, const VerifyOptions &options) {
  Report report;
  const SignedWord word = signed_word_of_chain(chain);
  ExchangeMatrix by_word = b_matrix_signed(word);
  if (options.corrupt_word_matrix && !by_word.mutable_entries().empty())
    by_word.mutable_entries().front() += 1;

  const PathResult by_path = b_via_mutation_path(chain);
  report.checks.push_back(compare("T1", by_word, by_path.matrix));

  std::optional<ExchangeMatrix> by_kk;
  try {
    by_kk = b_kk(chain);
    report.checks.push_back(compare("P42", by_word, *by_kk));
  } catch (const Error &e) {
    report.checks.push_back({"P42", false, e.what()});
  }

  CheckResult ss{"SS", true, ""};
  auto skew = [&](const char *engine, const ExchangeMatrix &m) {
    auto r = check_skew_symmetrizable(m);
    if (r.ok || !ss.pass) return;
    ss.pass = false;
    ss.detail = std::string(engine) + " violates at (" + std::to_string(r.violation->first) +
                "," + std::to_string(r.violation->second) + ")";
  };
  skew("word", by_word);
  skew("path", by_path.matrix);
  if (by_kk) skew("kk", *by_kk);
  report.checks.push_back(ss);

  const auto split = frozen_indices(chain);
  CheckResult kf{"KF", split.frozen == word.frozen(), ""};
  if (!kf.pass) kf.detail = "frozen index sets of chain and signed word differ";
  report.checks.push_back(kf);
  return report;
}

namespace {

Expansion toggled(Expansion e) { return e == Expansion::L ? Expansion::R : Expansion::L; }

/// Positions whose move lowers the total R weight: E_k = R with k = 1 or E_{k-1} = L.
std::vector<std::size_t> descending_moves(const std::vector<Expansion> &ops) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= ops.size(); ++k)
    if (ops[k - 1] == Expansion::R && (k == 1 || ops[k - 2] == Expansion::L)) out.push_back(k);
  return out;
}

/// Applies nu_s to an operator string (the root is irrelevant here).
void apply_to_ops(std::vector<Expansion> &ops, std::size_t s) {
  if (s >= 2) ops[s - 2] = toggled(ops[s - 2]);
  ops[s - 1] = toggled(ops[s - 1]);
}

std::vector<std::size_t> random_descent(std::vector<Expansion> ops, std::mt19937_64 &rng) {
  std::vector<std::size_t> moves;
  for (auto options = descending_moves(ops); !options.empty(); options = descending_moves(ops)) {
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const auto s = options[pick(rng)];
    moves.push_back(s);
    apply_to_ops(ops, s);
  }
  return moves;
}

} // namespace

std::vector<std::size_t> random_path_from_initial(const Chain &target, std::mt19937_64 &rng,
                                                  std::size_t walk_length) {
  const std::size_t l = target.length();
  std::vector<std::size_t> moves;
  if (l < 2) return moves;

  // Box moves preserve the range, and legality depends on ops alone.
  std::vector<Expansion> ops(l - 1, Expansion::L);
  for (std::size_t i = 0; i < walk_length; ++i) {
    std::vector<std::size_t> legal;
    for (std::size_t s = 1; s < l; ++s)
      if (s == 1 || ops[s - 2] != ops[s - 1]) legal.push_back(s);
    std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
    const auto s = legal[pick(rng)];
    moves.push_back(s);
    apply_to_ops(ops, s);
  }
  auto back = random_descent(ops, rng);
  moves.insert(moves.end(), back.begin(), back.end());
  auto down = random_descent(target.ops(), rng);
  moves.insert(moves.end(), down.rbegin(), down.rend());
  return moves;
}

Report verify_path_independence(const Chain &chain, std::size_t trials, std::uint64_t seed) {
  Report report;
  CheckResult result{"PATH", true, ""};
  const auto reference = b_via_mutation_path(chain);
  const auto [a, b] = chain.range();
  for (std::size_t t = 0; t < trials && result.pass; ++t) {
    auto rng = trial_rng(seed, t);
    const auto moves = random_path_from_initial(chain, rng, 2 * chain.length());
    const auto replay = replay_moves(chain.word_ptr(), a, b, moves);
    if (!(replay.chain == chain)) {
      result = {"PATH", false, "trial " + std::to_string(t) + " did not reach the target chain"};
    } else if (first_difference(reference.matrix, replay.matrix)) {
      result = {"PATH", false,
                "trial " + std::to_string(t) + " (" + std::to_string(moves.size()) +
                    " moves): " + describe_difference(reference.matrix, replay.matrix)};
    }
  }
  report.checks.push_back(result);
  return report;
}

Report verify_stabilization(const Chain &chain, std::size_t s, std::size_t t) {
  if (s < 1 || s > t || t > chain.length())
    throw Error(ErrorKind::OutOfRange, "need 1 <= s <= t <= " + std::to_string(chain.length()));
  const auto small = b_matrix_signed(signed_word_of_chain(prefix(chain, s)));
  const auto large = b_matrix_signed(signed_word_of_chain(prefix(chain, t)));
  CheckResult result{"STAB", true, ""};
  for (auto i : small.rows()) {
    for (auto k : small.cols()) {
      if (!large.is_exchangeable(k)) {
        result = {"STAB", false,
                  "s=" + std::to_string(s) + " t=" + std::to_string(t) + ": column " +
                      std::to_string(k) + " is frozen in the longer prefix"};
        return Report{{result}};
      }
      if (small.at(i, k) != large.at(i, k)) {
        result = {"STAB", false,
                  "s=" + std::to_string(s) + " t=" + std::to_string(t) + ": entry (" +
                      std::to_string(i) + "," + std::to_string(k) + ") " +
                      std::to_string(small.at(i, k)) + " vs " + std::to_string(large.at(i, k))};
        return Report{{result}};
      }
    }
  }
  return Report{{result}};
}

Report verify_stabilization_all(const Chain &chain) {
  for (std::size_t t = 2; t <= chain.length(); ++t) {
    for (std::size_t s = 1; s < t; ++s) {
      auto r = verify_stabilization(chain, s, t);
      if (!r.pass()) return r;
    }
  }
  return Report{{CheckResult{"STAB", true, ""}}};
}

} // namespace iboxes
