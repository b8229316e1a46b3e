#include <algorithm>
#include <map>

#include "doctest.h"
#include "ulam/classifier.hpp"
#include "ulam/oracle.hpp"
#include "ulam/word.hpp"

using namespace ulam;

namespace {

std::uint64_t pack(const char* s) { return Word::from_string(s).packed(); }

Word reversed(const Word& w) {
  std::string s = w.to_string();
  std::reverse(s.begin(), s.end());
  return Word::from_string(s);
}

Word complemented(const Word& w) {
  std::string s = w.to_string();
  for (char& c : s) c = (c == '0') ? '1' : '0';
  return Word::from_string(s);
}

}  // namespace

TEST_CASE("word packing conventions") {
  CHECK(Word::two_ones(2, 2, 0).to_string() == "001001");
  CHECK(Word::one_one(2, 1).to_string() == "0010");
  CHECK(Word::from_string("010").length() == 3);
  CHECK(pack("10") == 1);  // first letter is the low bit
  CHECK_THROWS_AS(Word::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_string("012"), std::invalid_argument);
}

TEST_CASE("base sets and the first batches") {
  const UlamSets sets = build_ulam_sets(6);
  CHECK(sets.per_length[1] == std::vector<std::uint64_t>{0, 1});
  CHECK(sets.count(2) == 2);
  CHECK(sets.contains(2, pack("01")));
  CHECK(sets.contains(2, pack("10")));
  CHECK(sets.count(3) == 4);
  for (const char* s : {"001", "011", "100", "110"}) CHECK(sets.contains(3, pack(s)));
  for (const char* s : {"010", "101", "000", "111"}) CHECK_FALSE(sets.contains(3, pack(s)));
}

TEST_CASE("set sizes up to length 13") {
  // Frozen from an independent enumeration of the defining recursion.
  const std::map<int, std::uint64_t> expected{
      {1, 2},  {2, 2},   {3, 4},   {4, 8},   {5, 12},   {6, 26},   {7, 36},
      {8, 98}, {9, 124}, {10, 274}, {11, 512}, {12, 1018}, {13, 1916}};
  const UlamSets sets = build_ulam_sets(13);
  for (const auto& [n, count] : expected) CHECK(sets.count(n) == count);
}

TEST_CASE("build cap is enforced") {
  CHECK_THROWS_AS(build_ulam_sets(26), std::length_error);
  CHECK_THROWS_AS(build_ulam_sets(0), std::invalid_argument);
}

TEST_CASE("sets closed under reversal and complement") {
  const int L = 12;
  const UlamSets sets = build_ulam_sets(L);
  for (int n = 1; n <= L; ++n) {
    for (std::uint64_t w : sets.per_length[n]) {
      const Word word = Word::from_packed(w, n);
      CHECK(sets.contains(n, reversed(word).packed()));
      CHECK(sets.contains(n, complemented(word).packed()));
    }
  }
}

TEST_CASE("single-word decider examples") {
  CHECK(is_ulam_word(Word::from_string("0")));
  CHECK(is_ulam_word(Word::from_string("1")));
  CHECK_FALSE(is_ulam_word(Word::from_string("010")));
  CHECK(is_ulam_word(Word::from_string("001001")));

  CHECK(rep_count_word(Word::from_string("0")) == CavemanCount(0));
  CHECK(rep_count_word(Word::from_string("010")) == CavemanCount(2));
  CHECK(rep_count_word(Word::from_string("001")) == CavemanCount(1));
}

TEST_CASE("decider agrees with the batch builder through length 12") {
  const int L = 12;
  const UlamSets sets = build_ulam_sets(L);
  UlamWordChecker checker;
  for (int n = 1; n <= L; ++n)
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
      CHECK(checker.is_ulam(w, n) == sets.contains(n, w));
}

TEST_CASE("generic long-word path agrees with the packed path") {
  // same word through both representations
  for (std::uint64_t x : {0ull, 3ull, 8ull}) {
    for (std::uint64_t y : {0ull, 2ull, 9ull}) {
      const Word w = Word::two_ones(x, y, 60);  // length > 64
      const bool expect = classify_two_ones({x, y, 60});
      CHECK(is_ulam_word(w) == expect);
    }
  }
}

TEST_CASE("grid oracle easy cases") {
  const BoolGrid g0 = grid_oracle(0, 8, 8);
  CHECK(g0.at(1, 2));        // x+z odd
  CHECK_FALSE(g0.at(0, 0));  // "11"
  CHECK_FALSE(g0.at(2, 2));
  const BoolGrid g1 = grid_oracle(1, 8, 8);
  CHECK_FALSE(g1.at(0, 1));  // x+z = 1 is excluded for y = 1
  CHECK(g1.at(1, 2));
  const BoolGrid g9 = grid_oracle(9, 17, 17);
  CHECK(g9.at(7, 8));        // on the full diagonal x+z = 15
}

TEST_CASE("grid oracle matches sets and the decider (three-way)") {
  const int L = 14;
  const UlamSets sets = build_ulam_sets(L);
  UlamWordChecker checker;
  for (std::uint64_t y = 0; y + 4 <= L; ++y) {
    const int span = static_cast<int>(L - y - 2);
    const BoolGrid grid = grid_oracle(y, span, span);
    const int half = (span + 1) / 2;
    const BoolGrid from_sets = grid_from_sets(sets, y, half, span + 1 - half);
    for (int x = 0; x < span; ++x) {
      for (int z = 0; x + z < span; ++z) {
        const std::uint64_t packed =
            (std::uint64_t{1} << x) | (std::uint64_t{1} << (x + y + 1));
        const int len = static_cast<int>(x + y + z + 2);
        CHECK(grid.at(x, z) == sets.contains(len, packed));
        CHECK(grid.at(x, z) == checker.is_ulam(packed, len));
        if (x < half && z < span + 1 - half)
          CHECK(grid.at(x, z) == from_sets.at(x, z));
      }
    }
  }
}

TEST_CASE("grid_from_sets window must fit the built length") {
  const UlamSets sets = build_ulam_sets(10);
  CHECK_THROWS_AS(grid_from_sets(sets, 2, 8, 8), std::invalid_argument);
  const BoolGrid g = grid_from_sets(sets, 2, 3, 3);
  CHECK(g.at(2, 0));        // "001001"
  CHECK_FALSE(g.at(0, 0));  // x+z < y
}

TEST_CASE("grid oracle symmetry under transposition") {
  for (std::uint64_t y : {0ull, 3ull, 5ull, 6ull, 12ull}) {
    const BoolGrid g = grid_oracle(y, 24, 24);
    for (int x = 0; x < 24; ++x)
      for (int z = 0; z < 24; ++z) CHECK(g.at(x, z) == g.at(z, x));
  }
}

TEST_CASE("cells with no split representation are never promoted") {
  for (std::uint64_t y = 0; y <= 12; ++y) {
    if (y >= 2 && y == period_of(y) - 2) continue;
    const BoolGrid g = grid_oracle(y, 20, 20);
    for (int x = 0; x < 20; ++x)
      for (int z = 0; z < 20; ++z)
        if (g.at(x, z)) CHECK(oracle_split_count(y, x, z) >= 1);
  }
}
