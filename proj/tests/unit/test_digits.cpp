#include <doctest.h>

#include <random>

#include "isosquare/digits.hpp"
#include "isosquare/errors.hpp"
#include "support/oracle.hpp"

using namespace isosquare;

TEST_CASE("digit_sum") {
  CHECK(digit_sum(0, 2) == 0);
  CHECK(digit_sum(7, 2) == 3);
  CHECK(digit_sum(0, 10) == 0);
  CHECK(digit_sum(316, 10) == 10);
  for (std::uint64_t k = 1; k <= 64; ++k) {
    CHECK(digit_sum(pow2(k) - 1, 2) == k);
  }
  CHECK_THROWS_AS(digit_sum(5, 1), InvalidArgument);
  CHECK_THROWS_AS(digit_sum(5, 0), InvalidArgument);
}

TEST_CASE("digit_sum in base 3 matches hand expansion") {
  // 80 = 2*27 + 2*9 + 2*3 + 2
  CHECK(digit_sum(Natural(80), 3) == 8);
  // 81 = (10000)_3
  CHECK(digit_sum(Natural(81), 3) == 1);
}

TEST_CASE("hamming_weight") {
  CHECK(hamming_weight(std::uint64_t{0}) == 0);
  CHECK(hamming_weight(Natural(0)) == 0);
  CHECK(hamming_weight(316) == oracle::weight(316));
  CHECK(hamming_weight(316) == 5);
  CHECK(hamming_weight(Natural(316)) == 5);
  CHECK(hamming_weight_u128(~UInt128{0}) == 128);
  CHECK_THROWS_AS(hamming_weight(Natural(-3)), InvalidArgument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 64);
    const auto h = static_cast<unsigned>(rng() % 200);
    CHECK(hamming_weight(Natural(n) << h) == hamming_weight(n));
    CHECK(hamming_weight(Natural(n)) == oracle::weight(n));
    CHECK(digit_sum(Natural(n), 2) == hamming_weight(n));
  }
}

TEST_CASE("bit_length") {
  CHECK(bit_length(0) == 0);
  CHECK(bit_length(1) == 1);
  CHECK(bit_length(316) == 9);
  CHECK(bit_length(pow2(200)) == 201);
}

TEST_CASE("complement") {
  CHECK(complement(0, 4) == 15);
  CHECK(complement(5, 3) == 2);
  CHECK(hamming_weight(Natural(5)) + hamming_weight(complement(5, 3)) == 3);
  CHECK(complement(6, 3) == 1);
  CHECK_THROWS_AS(complement(8, 3), PreconditionViolation);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto k = 1 + rng() % 120;
    const Natural n = (Natural(rng()) << 64 | rng()) % pow2(k);
    CHECK(hamming_weight(n) + hamming_weight(complement(n, k)) == k);
  }
}

TEST_CASE("BitPattern construction rejects non-canonical runs") {
  CHECK_THROWS_AS(BitPattern({{1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(BitPattern({{1, 2}, {1, 3}}), InvalidArgument);
  CHECK_THROWS_AS(BitPattern({{2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(BitPattern::from_bits("01x"), InvalidArgument);
  CHECK(BitPattern().empty());
}

TEST_CASE("pattern_to_value") {
  CHECK(pattern_to_value(BitPattern({{0, 1}, {1, 2}})) == 3);
  CHECK(pattern_to_value(BitPattern({{0, 2}, {1, 1}})) == 1);
  CHECK(pattern_to_value(BitPattern::from_bits("011")) == 3);
  CHECK(pattern_to_value(BitPattern({{1, 3}, {0, 2}, {1, 1}})) == 57);
  CHECK(pattern_to_value(BitPattern()) == 0);
  for (std::uint64_t k = 1; k <= 100; ++k) {
    CHECK(pattern_to_value(BitPattern({{1, k}})) == pow2(k) - 1);
  }
}

TEST_CASE("value_to_pattern") {
  CHECK(value_to_pattern(0).runs().empty());
  CHECK(value_to_pattern(pow2(17) - 1) == BitPattern({{1, 17}}));
  const BitPattern p316({{1, 1}, {0, 2}, {1, 4}, {0, 2}});
  CHECK(value_to_pattern(316) == p316);
  CHECK(p316.to_bits() == oracle::binary_digits("316"));
  CHECK(p316.to_string() == "10_(2)1_(4)0_(2)");
  CHECK(p316.weight() == 5);
  CHECK(p316.digit_count() == 9);
  // leading zeros are dropped on output
  CHECK(value_to_pattern(pattern_to_value(BitPattern::from_bits("00101"))) == BitPattern::from_bits("101"));
}

TEST_CASE("pattern round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Natural n = rng();
    for (auto limbs = rng() % 4; limbs > 0; --limbs) n = (n << 64) | rng();
    const BitPattern p = value_to_pattern(n);
    CHECK(pattern_to_value(p) == n);
    CHECK(p.weight() == hamming_weight(n));
    CHECK((p.empty() || p.runs().front().digit == 1));
  }
}

TEST_CASE("a million-bit pattern") {
  const BitPattern big({{1, 400'000}, {0, 300'000}, {1, 300'000}});
  const Natural v = pattern_to_value(big);
  CHECK(bit_length(v) == 1'000'000);
  CHECK(hamming_weight(v) == 700'000);
  CHECK(value_to_pattern(v) == big);
}

TEST_CASE("run-length subtraction identity (1_(k)) - (1_(h)0_(h')) = (1_(k-h-h')0_(h)1_(h'))") {
  for (std::uint64_t k = 1; k <= 24; ++k) {
    for (std::uint64_t h = 1; h < k; ++h) {
      for (std::uint64_t hp = 1; h + hp < k; ++hp) {
        const Natural lhs = pattern_to_value(BitPattern({{1, k}})) - pattern_to_value(BitPattern({{1, h}, {0, hp}}));
        const Natural rhs = pattern_to_value(BitPattern({{1, k - h - hp}, {0, h}, {1, hp}}));
        REQUIRE(lhs == rhs);
      }
    }
  }
}
