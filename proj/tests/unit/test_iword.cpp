#include "../fixtures.hpp"

#include "iboxes/error.hpp"
#include "iboxes/random.hpp"

#include <doctest.h>

#include <tuple>

using namespace iboxes;
using fixtures::a3_word;

namespace {

// 1-based letters of an A3 window, for reading test expectations.
std::vector<int> one_based(const IWord &w) {
  std::vector<int> out;
  for (auto l : w.letters()) out.push_back(static_cast<int>(l) + 1);
  return out;
}

ExtInt scan_succ(const IWord &w, Pos s) {
  for (Pos t = s + 1; t <= w.last(); ++t)
    if (w.letter(t) == w.letter(s)) return t;
  return ExtInt::pos_inf();
}

ExtInt scan_pred(const IWord &w, Pos s) {
  for (Pos t = s - 1; t >= w.first(); --t)
    if (w.letter(t) == w.letter(s)) return t;
  return ExtInt::neg_inf();
}

} // namespace

TEST_SUITE("iword") {

TEST_CASE("A3 window letters") {
  CHECK(one_based(*a3_word()) == std::vector<int>{1, 3, 2, 3, 1, 2, 3, 1});
  CHECK(one_based(*a3_word(1, 6)) == std::vector<int>{1, 2, 3, 1, 2, 1});
  CHECK(one_based(*a3_word(5, 10)) == std::vector<int>{2, 1, 3, 2, 1, 3});
}

TEST_CASE("window letters match the position-by-position oracle") {
  const std::vector<int> w0{0, 1, 2, 0, 1, 0}, star{2, 1, 0};
  for (Pos a = -20; a <= 5; a += 5) {
    const auto w = a3_word(a, a + 30);
    const auto expected = oracle::hat_w0(w0, star, a, a + 30);
    CHECK(fixtures::to_oracle(*w).letters == expected);
  }
  // words whose involution is not the A-type reversal
  const std::vector<std::tuple<char, int, std::vector<Color>>> cases{
      {'D', 5, {0, 1, 2, 3, 4, 2}}, {'E', 6, {0, 2, 3, 1, 4, 5, 3}}};
  for (const auto &[type, rank, rw] : cases) {
    const auto star = standard_involution(type, rank);
    auto w = hat_w0_window(fixtures::cartan(type, rank), rw, star, -12, 17);
    std::vector<int> rwi(rw.begin(), rw.end()), st(star.map().begin(), star.map().end());
    CHECK(fixtures::to_oracle(w).letters == oracle::hat_w0(rwi, st, -12, 17));
  }
}

TEST_CASE("succ and pred") {
  auto w = a3_word();
  CHECK(w->succ(1) == 4);
  CHECK(w->succ(4) == ExtInt::pos_inf());
  CHECK(w->succ(-2) == 0);
  CHECK(w->pred(4) == 1);
  CHECK(w->pred(-3) == ExtInt::neg_inf());
  CHECK(w->pred(3) == 0);
  CHECK_THROWS_AS(w->succ(5), Error);
}

TEST_CASE("first_at_or_after and last_at_or_before") {
  auto w = a3_word();
  CHECK(w->first_at_or_after(-3, 0) == -3);
  CHECK(w->first_at_or_after(-3, 1) == -1);
  CHECK(w->first_at_or_after(2, 0) == 4);
  CHECK(w->last_at_or_before(4, 2) == 3);
  CHECK(w->last_at_or_before(4, 0) == 4);
  CHECK(w->last_at_or_before(-3, 1) == ExtInt::neg_inf());
  try {
    (void)w->first_at_or_after(0, 7);
    FAIL("expected UnknownIndex");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::UnknownIndex);
  }
}

TEST_CASE("construction errors") {
  auto c = fixtures::cartan('A', 3);
  CHECK_THROWS_AS(IWord(c, 0, {}), Error);
  CHECK_THROWS_AS(IWord(c, 0, {0, 5}), Error);
  const std::vector<Color> empty;
  CHECK_THROWS_AS(hat_w0_window(c, empty, standard_involution('A', 3), 0, 3), Error);
}

TEST_CASE("ExtInt ordering") {
  CHECK(ExtInt::neg_inf() < ExtInt(-1000000));
  CHECK(ExtInt(1000000) < ExtInt::pos_inf());
  CHECK(ExtInt(3) < ExtInt(4));
  CHECK(ExtInt::pos_inf().to_string() == "+inf");
  CHECK(ExtInt::neg_inf().to_string() == "-inf");
}

TEST_CASE("property: navigation symbols on random words") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto c = std::make_shared<const CartanMatrix>(random_cartan(rng));
    auto w = random_word(c, rng);
    for (Pos s = w->first(); s <= w->last(); ++s) {
      const auto up = w->succ(s), down = w->pred(s);
      CHECK(up == scan_succ(*w, s));
      CHECK(down == scan_pred(*w, s));
      if (up.is_finite()) {
        CHECK(w->pred(up.value()) == s);
        const auto up2 = w->succ(up.value());
        if (up2.is_finite()) CHECK(up2 > up);
      }
      CHECK(w->first_at_or_after(s, w->letter(s)) == s);
      CHECK(w->last_at_or_before(s, w->letter(s)) == s);
      for (Color j = 0; j < c->rank(); ++j) {
        ExtInt fa = ExtInt::pos_inf(), lb = ExtInt::neg_inf();
        for (Pos p = s; p <= w->last() && !fa.is_finite(); ++p)
          if (w->letter(p) == j) fa = p;
        for (Pos p = s; p >= w->first() && !lb.is_finite(); --p)
          if (w->letter(p) == j) lb = p;
        CHECK(w->first_at_or_after(s, j) == fa);
        CHECK(w->last_at_or_before(s, j) == lb);
      }
    }
  }
}

TEST_CASE("property: overlapping windows agree") {
  for (Pos a = -15; a <= 0; ++a) {
    auto small = a3_word(a, a + 9);
    auto big = a3_word(-30, 30);
    for (Pos p = a; p <= a + 9; ++p) CHECK(small->letter(p) == big->letter(p));
  }
}

} // TEST_SUITE
