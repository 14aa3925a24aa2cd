#include "../fixtures.hpp"

#include "iboxes/batch.hpp"
#include "iboxes/engines.hpp"
#include "iboxes/error.hpp"
#include "iboxes/random.hpp"

#include <doctest.h>

using namespace iboxes;
using fixtures::a3_word;
using fixtures::chain;

namespace {

/// The five-case formula for an initial chain, evaluated on its colors.
oracle::Mat five_case(const Chain &c) {
  std::vector<oracle::Letter> h;
  for (const auto &b : c.boxes()) h.push_back({1, static_cast<int>(b.color)});
  const auto rows = c.word().cartan().rows();
  const auto ex = oracle::exchangeable(h);
  oracle::Mat out;
  for (std::size_t j = 1; j <= h.size(); ++j) {
    std::vector<std::int64_t> row;
    for (auto k : ex) {
      const auto sj = static_cast<std::int64_t>(j), sk = static_cast<std::int64_t>(k);
      const auto j1 = oracle::shift(h, j), k1 = oracle::shift(h, k);
      const std::int64_t cjk = rows[h[j - 1].color][h[k - 1].color];
      std::int64_t v = 0;
      if (sk == j1) v = 1;
      else if (sj == k1) v = -1;
      else if (sj < sk && sk < j1 && j1 < k1) v = cjk;
      else if (sk < sj && sj < k1 && k1 < j1) v = -cjk;
      row.push_back(v);
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool all_pass(const Report &r) {
  for (const auto &c : r.checks)
    if (!c.pass) return false;
  return true;
}

} // namespace

TEST_SUITE("engines") {

TEST_CASE("initial chain matrix") {
  auto w = a3_word();
  auto b = b_initial(w, -3, 4);
  CHECK(b.at(1, 4) == 1);
  CHECK(b.at(4, 1) == -1);
  CHECK(b.at(3, 4) == -1);
  CHECK(b.at(2, 4) == 0);
  CHECK(b_initial(w, 4, 4).cols().empty());
  CHECK_THROWS_AS(b_initial(w, -4, 4), Error);
  for (Pos a = -3; a <= 4; ++a)
    for (Pos e = a; e <= 4; ++e) {
      const auto init = initial_chain(w, a, e);
      const auto m = b_initial(w, a, e);
      CHECK(fixtures::dense(m) == five_case(init));
      CHECK(m == b_matrix_signed(signed_word_of_chain(init)));
    }
}

TEST_CASE("mutation path on the worked chains") {
  auto w = a3_word();
  auto init = b_via_mutation_path(chain(w, 4, "LLLLLLL"));
  CHECK(init.trace.empty());
  CHECK(init.matrix == b_initial(w, -3, 4));

  auto one = b_via_mutation_path(chain(w, 3, "RLLLLLL"));
  REQUIRE(one.trace.size() == 1);
  CHECK(one.trace[0].action == MoveTraceStep::Action::Permute);
  CHECK(one.matrix == permute(b_initial(w, -3, 4), transposition(1, 2)));

  auto tilde = chain(w, 3, "LLLLLLR");
  auto r = b_via_mutation_path(tilde);
  CHECK(r.chain == tilde);
  CHECK(r.matrix == b_matrix_signed(signed_word_of_chain(tilde)));
  CHECK(fixtures::same(r.matrix, fixtures::oracle_matrix(tilde)));
}

TEST_CASE("replaying an illegal move fails") {
  auto w = a3_word();
  const std::vector<std::size_t> moves{3};
  CHECK_THROWS_AS(replay_moves(w, -3, 4, moves), Error);
}

TEST_CASE("interval-incidence matrix") {
  auto w = a3_word();
  auto c = chain(w, 4, "LLLLLLL");
  auto kk = b_kk(c);
  CHECK(kk.at(1, 4) == 1);
  CHECK(kk == b_matrix_signed(signed_word_of_chain(c)));
  CHECK(b_kk(chain(w, 0, "")).cols().empty());
}

TEST_CASE("verify_chain on the worked chains and a negative control") {
  auto w = a3_word();
  for (const auto &c : {chain(w, 4, "LLLLLLL"), chain(w, 3, "LLLLLLR"), chain(w, 0, "")}) {
    auto r = verify_chain(c);
    CHECK(all_pass(r));
    CHECK(r.checks.size() == 4);
  }
  auto bad = verify_chain(chain(w, 4, "LLLLLLL"), VerifyOptions{true});
  CHECK_FALSE(bad.pass());
  CHECK_FALSE(bad.checks[0].pass);
  CHECK(bad.checks[0].name == "T1");
  CHECK_FALSE(bad.checks[0].detail.empty());
}

TEST_CASE("path independence and stabilization on examples") {
  auto w = a3_word();
  auto tilde = chain(w, 3, "LLLLLLR");
  CHECK(verify_path_independence(tilde, 1, 1).pass());
  CHECK(verify_path_independence(tilde, 20, 2).pass());
  CHECK(verify_path_independence(chain(w, 0, ""), 5, 3).pass());

  auto c = chain(w, 4, "LLLLLLL");
  CHECK(verify_stabilization(c, 5, 8).pass());
  CHECK(verify_stabilization(c, 3, 3).pass());
  CHECK_THROWS_AS(verify_stabilization(c, 5, 9), Error);
  CHECK_THROWS_AS(verify_stabilization(c, 6, 5), Error);

  auto wide = a3_word(-20, 10);
  auto long_chain = initial_chain(wide, -9, 10);
  REQUIRE(long_chain.length() == 20);
  CHECK(verify_stabilization(long_chain, 10, 20).pass());
}

TEST_CASE("property: exhaustive A3 chains agree with the oracle") {
  auto w = a3_word();
  for (const auto &c : enumerate_chains(w)) {
    const auto expected = fixtures::oracle_matrix(c);
    const auto path = b_via_mutation_path(c);
    CHECK(fixtures::same(path.matrix, expected));
    CHECK(fixtures::same(b_kk(c), expected));
    CHECK(fixtures::same(b_matrix_signed(signed_word_of_chain(c)), expected));
    for (const auto &step : path.trace)
      CHECK((step.action == MoveTraceStep::Action::Mutate) == (step.left_color == step.right_color));
  }
}

TEST_CASE("property: random instances agree with the oracle") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    auto inst = random_instance(rng);
    const auto expected = fixtures::oracle_matrix(inst.chain);
    const auto path = b_via_mutation_path(inst.chain);
    const auto kk = b_kk(inst.chain);
    CHECK(fixtures::same(path.matrix, expected));
    CHECK(fixtures::same(kk, expected));
    CHECK(path.matrix.symmetrizer() == kk.symmetrizer());
  }
}

TEST_CASE("serial and parallel batches agree") {
  TrialOptions opts;
  opts.path_trials = 2;
  const auto serial = run_trials_serial(60, 99, opts);
  const auto parallel = run_trials_parallel(60, 99, opts);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].index == parallel[i].index);
    CHECK(serial[i].pass());
    REQUIRE(serial[i].report.checks.size() == parallel[i].report.checks.size());
    for (std::size_t k = 0; k < serial[i].report.checks.size(); ++k) {
      CHECK(serial[i].report.checks[k].name == parallel[i].report.checks[k].name);
      CHECK(serial[i].report.checks[k].pass == parallel[i].report.checks[k].pass);
      CHECK(serial[i].report.checks[k].detail == parallel[i].report.checks[k].detail);
    }
  }

  const auto chains = enumerate_chains(a3_word());
  const auto rs = verify_chains_serial(chains), rp = verify_chains_parallel(chains);
  REQUIRE(rs.size() == rp.size());
  for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs[i].pass() == rp[i].pass());

  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    auto c = std::make_shared<const CartanMatrix>(random_cartan(rng));
    auto h = random_signed_word(c, 1 + rng() % 14, rng);
    CHECK(b_matrix_signed(h) == b_matrix_signed_omp(h));
  }
}

TEST_CASE("a corrupted batch reports its counterexample") {
  TrialOptions opts;
  opts.verify.corrupt_word_matrix = true;
  opts.path_trials = 0;
  opts.stabilization = false;
  const auto out = run_trials_serial(20, 5, opts);
  bool any_failed = false;
  for (const auto &t : out) {
    if (t.pass()) continue;
    any_failed = true;
    REQUIRE(t.counterexample);
    CHECK_FALSE(verify_chain(t.counterexample->chain, opts.verify).pass());
  }
  CHECK(any_failed);
}

} // TEST_SUITE
