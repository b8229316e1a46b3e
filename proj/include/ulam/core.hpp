// Bit-level primitives shared by every other module: binomial parity,
// saturating caveman arithmetic on {0,1,2}, Zumkeller classification and
// binary block decomposition.
#pragma once

#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace ulam {

// Saturating counter over {0,1,2}. 2 means "two or more".
class CavemanCount {
 public:
  constexpr CavemanCount() = default;
  constexpr explicit CavemanCount(unsigned n)
      : v_(n > 2 ? std::uint8_t{2} : static_cast<std::uint8_t>(n)) {}

  constexpr unsigned value() const { return v_; }
  constexpr bool operator==(const CavemanCount&) const = default;

 private:
  std::uint8_t v_ = 0;
};

// m +^ n = min(m+n, 2)
constexpr CavemanCount caveman_add(CavemanCount a, CavemanCount b) {
  return CavemanCount(a.value() + b.value());
}

// m *^ n = min(m*n, 2)
constexpr CavemanCount caveman_mul(CavemanCount a, CavemanCount b) {
  return CavemanCount(a.value() * b.value());
}

inline std::ostream& operator<<(std::ostream& os, CavemanCount c) {
  return os << c.value();
}

// True iff C(m+n, m) is odd, i.e. the binary expansions of m and n share
// no set bit.
constexpr bool odd_binomial(std::uint64_t m, std::uint64_t n) {
  return (m & n) == 0;
}

// Exponent k with 2^k <= y < 2^{k+1}. Requires y >= 1.
constexpr int floor_log2(std::uint64_t y) { return std::bit_width(y) - 1; }

// The biperiod 2^{k+1} attached to y (y >= 1).
constexpr std::uint64_t period_of(std::uint64_t y) {
  return std::uint64_t{1} << (floor_log2(y) + 1);
}

// A positive integer is Zumkeller when its binary representation has at
// most one 0 (leading zeros excluded).
inline bool is_zumkeller(std::uint64_t y) {
  if (y == 0) throw std::invalid_argument("is_zumkeller: y must be positive");
  return std::bit_width(y) - std::popcount(y) <= 1;
}

enum class ZumkellerKind : std::uint8_t {
  kNotZumkeller,
  kAllOnes,        // y = 2^{k+1} - 1
  kPowerMinusTwo,  // y = 2^{k+1} - 2
  kInteriorZero,   // y = 2^{k+1} - 2^a - 1, 0 < a < k
};

struct ZumkellerForm {
  ZumkellerKind kind = ZumkellerKind::kNotZumkeller;
  int k = 0;
  int a = 0;  // meaningful for kInteriorZero only
};

// Classifies y >= 2 into the three Zumkeller shapes, recovering k (and a).
inline ZumkellerForm zumkeller_form(std::uint64_t y) {
  if (y < 2) throw std::invalid_argument("zumkeller_form: y must be >= 2");
  const int width = std::bit_width(y);
  const int zeros = width - std::popcount(y);
  if (zeros == 0) return {ZumkellerKind::kAllOnes, width - 1, 0};
  if (zeros > 1) return {ZumkellerKind::kNotZumkeller, width - 1, 0};
  const std::uint64_t zero_mask = ~y & ((std::uint64_t{1} << width) - 1);
  const int a = std::countr_zero(zero_mask);
  if (a == 0) return {ZumkellerKind::kPowerMinusTwo, width - 1, 0};
  return {ZumkellerKind::kInteriorZero, width - 1, a};
}

// y written as sum_{i=1..s} 2^{d_1+...+d_i} (plus 1 when odd is set), all
// d_i >= 1. Every y >= 1 has exactly one such decomposition.
struct BlockDecomposition {
  bool odd = false;        // trailing ...0^{d_1-1}1 form
  std::vector<int> blocks; // d_1, ..., d_s
};

inline BlockDecomposition block_decompose(std::uint64_t y) {
  if (y == 0) throw std::invalid_argument("block_decompose: y must be positive");
  BlockDecomposition out;
  out.odd = (y & 1) != 0;
  std::uint64_t rest = out.odd ? y - 1 : y;
  int last = 0;
  while (rest != 0) {
    const int p = std::countr_zero(rest);
    out.blocks.push_back(p - last);
    last = p;
    rest &= rest - 1;
  }
  return out;
}

inline std::uint64_t block_reconstruct(const BlockDecomposition& d) {
  std::uint64_t acc = d.odd ? 1 : 0;
  int pos = 0;
  for (int b : d.blocks) {
    pos += b;
    acc += std::uint64_t{1} << pos;
  }
  return acc;
}

}  // namespace ulam
