#include "../fixtures.hpp"

#include "iboxes/error.hpp"
#include "iboxes/random.hpp"

#include <doctest.h>

using namespace iboxes;

namespace {

ExchangeMatrix square(std::vector<std::int64_t> entries, std::vector<int> d) {
  std::vector<Index> idx;
  for (std::size_t i = 1; i <= d.size(); ++i) idx.push_back(static_cast<Index>(i));
  return ExchangeMatrix(idx, idx, std::move(entries), std::move(d));
}

Permutation random_permutation(const std::vector<Index> &k, std::mt19937_64 &rng) {
  auto image = k;
  std::shuffle(image.begin(), image.end(), rng);
  Permutation p;
  for (std::size_t i = 0; i < k.size(); ++i) p[k[i]] = image[i];
  return p;
}

Permutation compose(const Permutation &s, const Permutation &t, const std::vector<Index> &k) {
  Permutation out;
  for (auto i : k) {
    const auto ti = t.count(i) ? t.at(i) : i;
    out[i] = s.count(ti) ? s.at(ti) : ti;
  }
  return out;
}

} // namespace

TEST_SUITE("exmatrix") {

TEST_CASE("mutation examples") {
  auto z = square({0, 1, -1, 0}, {1, 1});
  CHECK(mutate(z, 1) == square({0, -1, 1, 0}, {1, 1}));
  CHECK(mutate(mutate(z, 1), 1) == z);

  ExchangeMatrix col({1, 2, 3}, {2}, {1, 0, -1}, {1, 1, 1});
  auto m = mutate(col, 2);
  CHECK(m.at(1, 2) == -1);
  CHECK(m.at(2, 2) == 0);
  CHECK(m.at(3, 2) == 1);
  CHECK_THROWS_AS(mutate(col, 1), Error);
}

TEST_CASE("permutation examples") {
  auto z = square({0, 1, -1, 0}, {1, 1});
  CHECK(permute(z, {}) == z);
  auto s = permute(z, transposition(1, 2));
  CHECK(s.at(2, 1) == 1);
  CHECK(s.at(1, 2) == -1);
  CHECK(permute(s, transposition(1, 2)) == z);
  CHECK_THROWS_AS(permute(z, Permutation{{1, 2}}), Error);
  CHECK_THROWS_AS(permute(z, Permutation{{1, 5}, {5, 1}}), Error);
}

TEST_CASE("skew-symmetrizability") {
  auto bad = square({0, 1, 1, 0}, {1, 1});
  auto r = check_skew_symmetrizable(bad);
  CHECK_FALSE(r.ok);
  REQUIRE(r.violation);
  CHECK(*r.violation == std::pair<Index, Index>{1, 2});
  CHECK(check_skew_symmetrizable(ExchangeMatrix({1, 2}, {}, {}, {1, 1})).ok);
  CHECK(check_skew_symmetrizable(square({0, 2, -1, 0}, {1, 2})).ok);
}

TEST_CASE("construction errors and lookups") {
  CHECK_THROWS_AS(ExchangeMatrix({2, 1}, {}, {}, {1, 1}), Error);
  CHECK_THROWS_AS(ExchangeMatrix({1, 2}, {3}, {0, 0}, {1, 1}), Error);
  CHECK_THROWS_AS(ExchangeMatrix({1, 2}, {1}, {0}, {1, 1}), Error);
  CHECK_THROWS_AS(ExchangeMatrix({1, 2}, {1}, {0, 0}, {1, 0}), Error);
  auto z = square({0, 1, -1, 0}, {1, 1});
  CHECK_THROWS_AS((void)z.at(3, 1), Error);
  CHECK(first_difference(z, z) == std::nullopt);
  CHECK(first_difference(z, mutate(z, 1)) == std::pair<Index, Index>{1, 2});
}

TEST_CASE("property: mutation matches the dense oracle and keeps the symmetrizer") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 300; ++t) {
    auto c = std::make_shared<const CartanMatrix>(random_cartan(rng));
    auto z = b_matrix_signed(random_signed_word(c, 2 + rng() % 12, rng));
    for (auto k : z.cols()) {
      auto m = mutate(z, k);
      CHECK(fixtures::dense(m) == oracle::mutate(fixtures::dense(z), z.rows(), z.cols(), k));
      CHECK(m.symmetrizer() == z.symmetrizer());
      CHECK(check_skew_symmetrizable(m).ok);
      CHECK(mutate(m, k) == z);
    }
  }
}

TEST_CASE("property: permutation composition and commutation with mutation") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    auto c = std::make_shared<const CartanMatrix>(random_cartan(rng));
    auto z = b_matrix_signed(random_signed_word(c, 2 + rng() % 12, rng));
    const auto sigma = random_permutation(z.rows(), rng), tau = random_permutation(z.rows(), rng);
    CHECK(permute(z, compose(sigma, tau, z.rows())) == permute(permute(z, tau), sigma));
    for (auto k : z.cols())
      CHECK(permute(mutate(z, k), sigma) == mutate(permute(z, sigma), sigma.at(k)));
    for (auto i : z.rows())
      for (auto k : z.cols()) CHECK(permute(z, sigma).at(sigma.at(i), sigma.at(k)) == z.at(i, k));
  }
}

} // TEST_SUITE
