#include "doctest.h"
#include "ulam/culam.hpp"

using namespace ulam;

TEST_CASE("culam_direct spot values") {
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t z = 0; z < 8; ++z) CHECK(culam_direct(0, x, z) == CavemanCount(1));
  CHECK(culam_direct(1, 2, 3) == CavemanCount(1));
  CHECK(culam_direct(3, 0, 3) == CavemanCount(1));
  CHECK(culam_direct(3, 1, 3) == CavemanCount(0));
  CHECK(culam_direct(2, 1, 0) == CavemanCount(2));
}

TEST_CASE("culam[1] closed form") {
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t z = 0; z < 16; ++z)
      CHECK(culam_direct(1, x, z) ==
            CavemanCount(static_cast<unsigned>((x + 1) % 2 + (z + 1) % 2)));
}

TEST_CASE("culam_direct_grid equals per-cell direct") {
  for (std::uint64_t y : {0ull, 1ull, 2ull, 7ull, 12ull, 50ull, 129ull}) {
    const LabelGrid g = culam_direct_grid(y, 40, 40);
    for (int x = 0; x < 40; ++x)
      for (int z = 0; z < 40; ++z) CHECK(g.at(x, z) == culam_direct(y, x, z));
  }
}

TEST_CASE("pattern edge values") {
  CHECK(pattern_e1(2, 0, 0) == CavemanCount(2));
  CHECK(pattern_e1(2, 1, 1) == CavemanCount(1));
  for (std::uint64_t x = 0; x < 8; ++x)
    if (7 >= x) CHECK(pattern_e1(3, x, 7 - x) == CavemanCount(0));  // x+z = 2^d-1

  CHECK(pattern_e2(3, 0, 0) == CavemanCount(1));
  CHECK(pattern_e2(1, 1, 1) == CavemanCount(1));
  CHECK(pattern_e2(5, 31, 31) == CavemanCount(1));

  CHECK(pattern_o1(3, 0, 6) == CavemanCount(0));
  CHECK(pattern_o1(3, 1, 3) == CavemanCount(0));
  CHECK(pattern_o2(1, 0, 0) == CavemanCount(2));
  CHECK(pattern_o2(1, 1, 1) == CavemanCount(0));
  CHECK(pattern_o2(2, 1, 2) == CavemanCount(1));

  CHECK_THROWS_AS(pattern_e1(2, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(pattern_o1(3, 0, 8), std::out_of_range);
}

TEST_CASE("O1 equals E1 on odd sums below the band") {
  for (int d = 1; d <= 6; ++d) {
    const std::uint64_t side = std::uint64_t{1} << d;
    for (std::uint64_t x = 0; x < side; ++x)
      for (std::uint64_t z = 0; z < side; ++z)
        if (((x + z) & 1) == 1 && x + z + 2 < side)
          CHECK(pattern_o1(d, x, z) == pattern_e1(d, x, z));
  }
}

TEST_CASE("patterns equal the restricted power-of-two counts") {
  for (int d = 1; d <= 7; ++d) {
    const std::uint64_t side = std::uint64_t{1} << d;
    for (std::uint64_t x = 0; x < side; ++x) {
      for (std::uint64_t z = 0; z < side; ++z) {
        CHECK(pattern_e1(d, x, z) == culam_prime_power2(d, PowerVariant::kEven, x, z));
        CHECK(pattern_o1(d, x, z) == culam_prime_power2(d, PowerVariant::kOdd, x, z));
      }
    }
  }
}

TEST_CASE("restricted count examples at d=2") {
  CHECK(culam_prime_power2(2, PowerVariant::kEven, 0, 0) == CavemanCount(2));
  CHECK(culam_prime_power2(2, PowerVariant::kEven, 1, 1) == CavemanCount(1));
  CHECK(culam_prime_power2(2, PowerVariant::kEven, 1, 2) == CavemanCount(0));
}

TEST_CASE("culam_fast base cases and spot values") {
  CHECK(culam_fast(0, 5, 11) == CavemanCount(1));
  CHECK(culam_fast(1, 2, 3) == CavemanCount(1));
  CHECK(culam_fast(2, 1, 0) == CavemanCount(2));
}

TEST_CASE("culam_fast equals culam_direct across whole periods") {
  for (std::uint64_t y = 0; y <= 260; ++y) {
    const std::uint64_t period = y == 0 ? 2 : period_of(std::max<std::uint64_t>(y, 1));
    const std::uint64_t span = std::min<std::uint64_t>(2 * period, 96);
    for (std::uint64_t x = 0; x < span; ++x)
      for (std::uint64_t z = 0; z < span; ++z)
        CHECK(culam_fast(y, x, z) == culam_direct(y, x, z));
  }
}

TEST_CASE("culam_fast equals culam_direct on random large coordinates") {
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  auto next = [&state] {
    state ^= state << 13; state ^= state >> 7; state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 4000; ++trial) {
    const std::uint64_t y = next() % 512;
    const std::uint64_t x = next() % 4096;
    const std::uint64_t z = next() % 4096;
    CHECK(culam_fast(y, x, z) == culam_direct(y, x, z));
  }
}

TEST_CASE("culam symmetry and biperiodicity") {
  for (std::uint64_t y = 1; y <= 64; ++y) {
    const std::uint64_t period = period_of(y);
    for (std::uint64_t x = 0; x < 40; ++x) {
      for (std::uint64_t z = 0; z < 40; ++z) {
        CHECK(culam_fast(y, x, z) == culam_fast(y, z, x));
        CHECK(culam_fast(y, x, z) == culam_fast(y, x + period, z));
        CHECK(culam_fast(y, x, z) == culam_fast(y, x, z + period));
      }
    }
  }
}

TEST_CASE("fundamental block examples") {
  const FundamentalBlock b1 = fundamental_block(1);
  CHECK(b1.k == 0);
  CHECK(b1.grid.width() == 2);
  CHECK(b1.grid.at(0, 0) == CavemanCount(2));
  CHECK(b1.grid.at(1, 0) == CavemanCount(1));
  CHECK(b1.grid.at(0, 1) == CavemanCount(1));
  CHECK(b1.grid.at(1, 1) == CavemanCount(0));

  const FundamentalBlock b3 = fundamental_block(3);
  CHECK(b3.grid.width() == 4);
  for (int x = 0; x < 4; ++x)
    for (int z = 0; z < 4; ++z) CHECK(b3.grid.at(x, z) == culam_direct(3, x, z));

  CHECK(fundamental_block(50).grid != fundamental_block(51).grid);
}

TEST_CASE("four parts relations") {
  for (std::uint64_t y = 1; y <= 128; ++y) {
    const FourParts p = four_parts(y);
    const int h = p.c0.width();
    for (int x = 0; x < h; ++x) {
      for (int z = 0; z < h; ++z) {
        CHECK(p.c1.at(x, z) == p.c2.at(x, z));
        CHECK(p.c0.at(x, z) == caveman_mul(CavemanCount(2), p.c2.at(x, z)));
        CHECK(p.c2.at(x, z).value() >=
              caveman_mul(CavemanCount(2), p.c3.at(x, z)).value());
      }
    }
  }
}

TEST_CASE("power-of-two quadrants match the patterns") {
  for (int k = 1; k <= 6; ++k) {
    const FourParts even = four_parts(std::uint64_t{1} << k);
    const FourParts odd = four_parts((std::uint64_t{1} << k) + 1);
    const int h = even.c0.width();
    for (int x = 0; x < h; ++x) {
      for (int z = 0; z < h; ++z) {
        CHECK(even.c0.at(x, z) == caveman_mul(CavemanCount(2), pattern_e2(k, x, z)));
        CHECK(even.c1.at(x, z) == caveman_add(pattern_e1(k, x, z), pattern_e2(k, x, z)));
        CHECK(even.c2.at(x, z) == caveman_add(pattern_e1(k, x, z), pattern_e2(k, x, z)));
        CHECK(even.c3.at(x, z) == pattern_e1(k, x, z));
        CHECK(odd.c0.at(x, z) == caveman_mul(CavemanCount(2), pattern_o2(k, x, z)));
        CHECK(odd.c1.at(x, z) == caveman_add(pattern_o1(k, x, z), pattern_o2(k, x, z)));
        CHECK(odd.c3.at(x, z) == pattern_o1(k, x, z));
      }
    }
  }
}

TEST_CASE("tensor_combine basics") {
  LabelGrid one(1, 1), zero(1, 1);
  one.set(0, 0, CavemanCount(1));
  zero.set(0, 0, CavemanCount(0));
  LabelGrid p(2, 2), q(2, 2);
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) {
      p.set(x, z, CavemanCount(static_cast<unsigned>(x)));
      q.set(x, z, CavemanCount(static_cast<unsigned>(z)));
    }

  const LabelGrid sum = tensor_combine(one, p, one, q);  // P +^ Q cellwise
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z)
      CHECK(sum.at(x, z) == caveman_add(p.at(x, z), q.at(x, z)));

  const LabelGrid only_q = tensor_combine(zero, p, one, q);
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) CHECK(only_q.at(x, z) == q.at(x, z));

  LabelGrid mismatched(3, 2);
  CHECK_THROWS_AS(tensor_combine(one, p, one, mismatched), std::invalid_argument);
}

TEST_CASE("tensor identity reproduces culam[2] from the base pair") {
  // culam[0] (x) E1[1] +^ culam[1] (x) E2[1] over B_2
  LabelGrid c0(2, 2), c1(2, 2), e1(2, 2), e2(2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int z = 0; z < 2; ++z) {
      c0.set(x, z, culam_direct(0, x, z));
      c1.set(x, z, culam_direct(1, x, z));
      e1.set(x, z, pattern_e1(1, x, z));
      e2.set(x, z, pattern_e2(1, x, z));
    }
  }
  const LabelGrid combined = tensor_combine(c0, e1, c1, e2);
  for (int x = 0; x < 4; ++x)
    for (int z = 0; z < 4; ++z) CHECK(combined.at(x, z) == culam_direct(2, x, z));
}

TEST_CASE("verify_inside passes on the quoted cases") {
  CHECK(verify_inside(1, 5).pass());
  CHECK(verify_inside(3, 2).pass());
  CHECK(verify_inside(17, 4).pass());  // culam[272], culam[273]
  CHECK_THROWS_AS(verify_inside(2, 1), std::invalid_argument);
}

TEST_CASE("verify_outside passes on the quoted cases") {
  CHECK(verify_outside(17, 8).pass());  // 273 = 256 + 17
  CHECK(verify_outside(3, 3).pass());
  CHECK(verify_outside(2, 4).pass());
  CHECK_THROWS_AS(verify_outside(17, 3), std::invalid_argument);
}

TEST_CASE("verify_hierarchy chains") {
  CHECK(verify_hierarchy(276).pass());
  CHECK(verify_hierarchy(8).pass());
  CHECK(verify_hierarchy(50).pass());
  const HierarchyReport r8 = verify_hierarchy(8);
  CHECK(r8.stages.size() == 1);  // single block, one internal stage
  const HierarchyReport r50 = verify_hierarchy(50);
  CHECK(r50.decomposition.blocks == std::vector<int>{1, 3, 1});
}
