// Logarithmic-time Ulamness decisions for words with one or two 1's, plus
// the sharp necessary/sufficient band predicates.
#pragma once

#include <cstdint>

#include "ulam/core.hpp"

namespace ulam {

struct TwoOnesCoord {
  std::uint64_t x = 0, y = 0, z = 0;  // w(x,y,z) = 0^x 1 0^y 1 0^z
};

// 0^m 1 0^n is Ulam iff C(m+n, m) is odd.
constexpr bool classify_one_one(std::uint64_t m, std::uint64_t n) {
  return odd_binomial(m, n);
}

enum class ClassifyRoute : std::uint8_t {
  kEasyY0,
  kEasyY1,
  kZumkellerAllOnes,
  kZumkellerPowerMinusTwo,
  kZumkellerInteriorZero,
  kCulam,
};

struct ClassifyResult {
  bool ulam = false;
  ClassifyRoute route = ClassifyRoute::kCulam;
  int k = 0;
  int a = 0;  // interior-zero route only
};

ClassifyResult classify_two_ones_detail(TwoOnesCoord c);

inline bool classify_two_ones(TwoOnesCoord c) {
  return classify_two_ones_detail(c).ulam;
}

// Necessary band 2^{k+1}-1 <= x~+z~ <= 2^{k+2}-y-2 (reductions mod 2^{k+1});
// Zumkeller y pass automatically when x+z is in {y, y+1, y+2}. Every Ulam
// member passes. Requires y >= 1.
bool necessary_bounds(TwoOnesCoord c);

// The two always-full diagonals: x+z = -1 mod 2^{k+1}, and x~+z~ equal to
// whichever of 2^{k+2}-y-2, 2^{k+2}-y-3 is odd; for y in {2^{k+1}-1,
// 2^{k+1}-2} the representative x+z = 2^{k+1}-1 is excluded. Implies
// membership. Requires y >= 1.
bool guaranteed_member(TwoOnesCoord c);

}  // namespace ulam
