#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wordseq/seqcore.hpp"

namespace wordseq {
namespace {

std::optional<std::pair<std::size_t, std::size_t>> as_pair(const std::optional<SquareOccurrence>& o) {
  if (!o) return std::nullopt;
  return std::make_pair(o->start, o->period);
}

TEST(FindSquareTest, Examples) {
  EXPECT_EQ(find_square(Word::parse("1231231")), (SquareOccurrence{1, 3}));
  EXPECT_EQ(find_square(Word::parse("123132312")), std::nullopt);
  EXPECT_EQ(find_square(Word::parse("11")), (SquareOccurrence{1, 1}));
  EXPECT_EQ(find_square(Word{}), std::nullopt);
  EXPECT_EQ(find_square(Word{1}), std::nullopt);
}

TEST(FindSquareTest, TieBreaking) {
  // Leftmost start wins even when a shorter square occurs later.
  EXPECT_EQ(find_square(Word::parse("121121")), (SquareOccurrence{1, 3}));
  EXPECT_EQ(find_square(Word::parse("12211")), (SquareOccurrence{2, 1}));
  EXPECT_EQ(find_square(Word::parse("31212")), (SquareOccurrence{2, 2}));
  // Same start, periods 1 and 2: the shorter wins.
  EXPECT_EQ(find_square(Word::parse("1111")), (SquareOccurrence{1, 1}));
  EXPECT_EQ(find_square(Word::parse("3123123")), (SquareOccurrence{1, 3}));
}

TEST(FindSquareTest, AgreesWithBruteForceOnRandomWords) {
  std::mt19937 rng(20240611);
  for (int alphabet = 2; alphabet <= 4; ++alphabet) {
    std::uniform_int_distribution<int> letter(1, alphabet);
    std::uniform_int_distribution<int> length(0, 60);
    for (int trial = 0; trial < 3000; ++trial) {
      std::vector<std::uint32_t> v(static_cast<std::size_t>(length(rng)));
      for (auto& x : v) x = static_cast<std::uint32_t>(letter(rng));
      ASSERT_EQ(as_pair(find_square(Word(v))), oracle::brute_square(v))
          << "word " << render(Word(v));
    }
  }
}

TEST(FindSquareTest, AgreesWithBruteForceOnNearlySquareFreeWords) {
  // Random words rarely avoid squares; perturb a square-free word instead so
  // the first square can sit anywhere, including far to the right.
  const auto base = oracle::arshon_by_tables(400);
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pos(0, base.size() - 1);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    auto v = base;
    v[pos(rng)] = static_cast<std::uint32_t>(letter(rng));
    ASSERT_EQ(as_pair(find_square(Word(v))), oracle::brute_square(v));
  }
  EXPECT_EQ(find_square(Word(base)), std::nullopt);
}

TEST(FindSquareTest, ArshonPrefixIsSquareFree) {
  EXPECT_EQ(find_square(arshon_prefix(20'000)), std::nullopt);
}

TEST(FindSquareTest, LongPeriodSquareAtTheEnd) {
  const Word x = arshon_prefix(5000);
  const Word w = Word{2} + x + x;
  const std::vector<std::uint32_t> v(w.begin(), w.end());
  EXPECT_EQ(as_pair(find_square(w)), oracle::brute_square(v));
  EXPECT_EQ(find_square(w)->period, 5000U);
}

}  // namespace
}  // namespace wordseq
