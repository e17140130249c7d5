#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"

using namespace asymcover;
using testing::bits;

TEST_CASE("weight and domination") {
  CHECK(weight(0) == 0);
  CHECK(weight(top(5)) == 5);
  CHECK(weight(0b01101) == 3);
  CHECK(dominated(0b010, 0b011));
  CHECK_FALSE(dominated(0b100, 0b011));
  for (Codeword x = 0; x < 64; ++x) CHECK(dominated(x, x));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK_THROWS_AS(binomial(63, 1), CapExceeded);
}

TEST_CASE("directed ball sizes") {
  CHECK(ball_size_up(4, 4, 1) == 1);
  CHECK(ball_size_up(4, 2, 1) == 3);
  CHECK(ball_size_up(9, 3, 6) == 64);
  CHECK(ball_size_up(9, 3, 20) == 64);
  CHECK(ball_size_down(6, 3, 2) == 7);
  CHECK(ball_size_down(8, 0, 3) == 1);

  // b+_n(l,R) = b-_n(n-l,R) <= C(n-l+R, R)
  for (int n = 0; n <= 20; ++n)
    for (int l = 0; l <= n; ++l)
      for (int R = 0; R <= n; ++R) {
        CHECK(ball_size_up(n, l, R) == ball_size_down(n, n - l, R));
        CHECK(ball_size_up(n, l, R) <= binomial(n - l + R, R));
      }
}

TEST_CASE("ball_down") {
  auto b = ball_down(0b011, 1, 3);
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<Codeword>{0b001, 0b010, 0b011});
  CHECK(ball_down(0b101, 0, 3) == std::vector<Codeword>{0b101});
  CHECK(ball_down(top(4), 4, 4).size() == 16);

  std::mt19937_64 gen(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(gen() % 16);
    const Codeword c = gen() & top(n);
    const int R = static_cast<int>(gen() % (n + 1));
    auto ball = ball_down(c, R, n);
    CHECK(ball.size() == ball_size_down(n, weight(c), R));
    std::sort(ball.begin(), ball.end());
    CHECK(std::adjacent_find(ball.begin(), ball.end()) == ball.end());
  }
}

TEST_CASE("Code keeps a sorted set") {
  Code c(3, {5, 1, 5, 7});
  CHECK(c.size() == 3);
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(c.contains(7));
  CHECK_FALSE(c.contains(2));
  CHECK_THROWS_AS(Code(3, {8}), InvalidArgument);
  CHECK(c.with_radius(2).radius() == 2);
}

TEST_CASE("covers and uncovered") {
  const Code d = bits(3, {"111", "011", "100"});
  CHECK(covers(d, 1));
  CHECK(uncovered(d, 1).empty());
  for (int n = 1; n <= 8; ++n) CHECK(covers(Code(n, {top(n)}), n));
  const Code one = Code(2, {top(2)});
  CHECK_FALSE(covers(one, 1));
  CHECK(uncovered(one, 1) == std::vector<Codeword>{0});
  CHECK(uncovered(Code(2), 1).size() == 4);
  CHECK_FALSE(covers(Code(3), 3));
}

TEST_CASE("covers agrees with the double loop") {
  std::mt19937_64 gen(2024);
  int positives = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(gen() % 10);
    const int R = static_cast<int>(gen() % (n + 1));
    const double density = 0.05 + 0.5 * static_cast<double>(gen() % 100) / 100.0;
    const Code code = testing::random_code(gen, n, density);
    const bool fast = covers(code, R);
    CHECK(fast == testing::naive_covers(code, R));
    CHECK(fast == uncovered(code, R).empty());
    positives += fast;
  }
  CHECK(positives > 10);  // both outcomes exercised
  CHECK_THROWS_AS(covers(Code(31, {top(31)}), 1), CapExceeded);
}

TEST_CASE("asymmetric covering radius") {
  CHECK(asym_covering_radius(Code(3, {0, top(3)})) == 2);
  CHECK(asym_covering_radius(testing::full_cube(4)) == 0);
  CHECK_FALSE(asym_covering_radius(Code(3, {0, 3})).has_value());
  CHECK(asym_covering_radius(bits(3, {"111", "011", "100"})) == 1);
}

TEST_CASE("contraction, shortening, complement") {
  const Code d = bits(3, {"111", "011", "100"});
  CHECK(contraction(d, 1) == bits(2, {"11", "00"}));
  CHECK(contraction(Code(5, {top(5)}), 3) == Code(4, {top(4)}));
  CHECK(shortening(d, 3) == bits(2, {"10"}));
  CHECK(shortening(Code(5, {0}), 2) == Code(4, {0}));
  CHECK_THROWS_AS(contraction(d, 0), InvalidArgument);
  CHECK_THROWS_AS(contraction(d, 4), InvalidArgument);
  CHECK_THROWS_AS(contraction(Code(1, {1}), 1), InvalidArgument);

  CHECK(complement_ones(Code(3, {0b011})) == Code(3, {0b100}));
  CHECK(complement_ones(Code(4, {0, top(4)})) == Code(4, {0, top(4)}));

  std::mt19937_64 gen(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(gen() % 8);
    const Code c = testing::random_code(gen, n, 0.3);
    CHECK(complement_ones(complement_ones(c)) == c);
    const int i = 1 + static_cast<int>(gen() % n);
    CHECK(shortening(c, i) == complement_ones(contraction(complement_ones(c), i)));
  }
}

TEST_CASE("contraction preserves covering") {
  std::mt19937_64 gen(77);
  int tried = 0;
  for (int t = 0; t < 200 && tried < 60; ++t) {
    const int n = 2 + static_cast<int>(gen() % 7);
    const int R = static_cast<int>(gen() % n);
    const Code c = testing::random_code(gen, n, 0.4);
    if (!covers(c, R)) continue;
    ++tried;
    for (int i = 1; i <= n; ++i) CHECK(covers(contraction(c, i), R));
  }
  CHECK(tried >= 20);
}

TEST_CASE("level profile") {
  const LevelProfile p = level_profile(bits(3, {"111", "011", "100"}));
  CHECK(p.counts == std::vector<std::int64_t>{0, 1, 1, 1});
  CHECK(p.total() == 3);
  CHECK(p.zeros(3) == 3);
  CHECK(p.ones() == 6);
  CHECK(level_profile(Code(4)).counts == std::vector<std::int64_t>(5, 0));
}

TEST_CASE("delete_coordinate") {
  CHECK(delete_coordinate(0b1011, 1) == 0b101);
  CHECK(delete_coordinate(0b1011, 3) == 0b111);
  CHECK(delete_coordinate(0b1011, 4) == 0b011);
}
