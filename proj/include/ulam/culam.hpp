// The culam labeling engine: direct counting, the universal dyadic patterns
// E1/E2/O1/O2, the O(log^2) paired recursion, four-parts structure, and the
// tensor-identity verifiers.
#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "ulam/core.hpp"

namespace ulam {

class LabelGrid {
 public:
  LabelGrid() = default;
  LabelGrid(int width, int height, std::int64_t x0 = 0, std::int64_t z0 = 0)
      : w_(width), h_(height), x0_(x0), z0_(z0),
        cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0) {}

  int width() const { return w_; }
  int height() const { return h_; }
  std::int64_t x0() const { return x0_; }
  std::int64_t z0() const { return z0_; }

  CavemanCount at(std::int64_t x, std::int64_t z) const {
    return CavemanCount(cells_[idx(x, z)]);
  }
  void set(std::int64_t x, std::int64_t z, CavemanCount v) {
    cells_[idx(x, z)] = static_cast<std::uint8_t>(v.value());
  }

  const std::vector<std::uint8_t>& raw() const { return cells_; }
  bool operator==(const LabelGrid&) const = default;

 private:
  std::size_t idx(std::int64_t x, std::int64_t z) const {
    const std::int64_t cx = x - x0_, cz = z - z0_;
    assert(cx >= 0 && cx < w_ && cz >= 0 && cz < h_);
    return static_cast<std::size_t>(cz) * static_cast<std::size_t>(w_) +
           static_cast<std::size_t>(cx);
  }

  int w_ = 0, h_ = 0;
  std::int64_t x0_ = 0, z0_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Clamped count of a in [0,y] with w(x,a) and w(y-a,z) both Ulam by parity
// of binomials. Equal pairs are included; distinctness is the classifier's
// concern.
CavemanCount culam_direct(std::uint64_t y, std::uint64_t x, std::uint64_t z);

// Same values as culam_direct on [0,width) x [0,height), computed by masked
// popcounts over shared row bitsets.
LabelGrid culam_direct_grid(std::uint64_t y, int width, int height);

// Universal dyadic patterns on B_d = [0, 2^d)^2. Out-of-range (x,z) throws.
CavemanCount pattern_e1(int d, std::uint64_t x, std::uint64_t z);
CavemanCount pattern_e2(int d, std::uint64_t x, std::uint64_t z);
CavemanCount pattern_o1(int d, std::uint64_t x, std::uint64_t z);
CavemanCount pattern_o2(int d, std::uint64_t x, std::uint64_t z);

enum class PowerVariant { kEven, kOdd };

// Restricted representation counts behind the patterns: y = 2^d with both
// split parts positive (kEven), or y = 2^d + 1 with both parts > 1 (kOdd).
CavemanCount culam_prime_power2(int d, PowerVariant variant, std::uint64_t x,
                                std::uint64_t z);

// culam[y](x,z) in O(log^2 y) via the paired recursion on (culam[m-1],
// culam[m]) for odd m. Agrees with culam_direct everywhere.
CavemanCount culam_fast(std::uint64_t y, std::uint64_t x, std::uint64_t z);

struct FundamentalBlock {
  std::uint64_t y = 0;
  int k = 0;  // 2^k <= y < 2^{k+1}
  LabelGrid grid;  // culam[y] on B_{k+1}, origin (0,0)
};

FundamentalBlock fundamental_block(std::uint64_t y);

// Quadrants of the fundamental block: c0 bottom-left, c1 right, c2 top,
// c3 top-right; c1 (= c2) is the L of the outward recursion and c3 the S.
struct FourParts {
  LabelGrid c0, c1, c2, c3;
};

FourParts four_parts(std::uint64_t y);

// (A tensor P) +^ (B tensor Q) with caveman cellwise arithmetic. A and B
// must share dimensions, as must P and Q.
LabelGrid tensor_combine(const LabelGrid& a, const LabelGrid& p,
                         const LabelGrid& b, const LabelGrid& q);

struct VerifyReport {
  struct Mismatch {
    std::uint64_t y = 0, x = 0, z = 0;
    int expected = 0, got = 0;
  };

  std::string name;
  std::uint64_t cells_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // first few only

  bool pass() const { return mismatch_count == 0; }
  void note_mismatch(std::uint64_t y, std::uint64_t x, std::uint64_t z,
                     int expected, int got);
};

// Checks culam[2^d y] = culam[y-1] (x) E1[d] +^ culam[y] (x) E2[d] and the
// +1 companion cellwise on the fundamental block, against culam_direct.
VerifyReport verify_inside(std::uint64_t y_odd, int d);

// Checks culam[2^l + y]|B_{l+1} = culam[2^{l-k}] (x) S +^ culam[2^{l-k}+1]
// (x) L against culam_direct, with S, L taken from four_parts(y).
VerifyReport verify_outside(std::uint64_t y, int ell);

// Chains verify_inside along the block decomposition and verify_outside
// along the reversed chain; external stages run both cut-off variants.
struct HierarchyReport {
  std::uint64_t y = 0;
  BlockDecomposition decomposition;
  std::vector<VerifyReport> stages;

  bool pass() const {
    for (const auto& s : stages)
      if (!s.pass()) return false;
    return true;
  }
};

HierarchyReport verify_hierarchy(std::uint64_t y);

}  // namespace ulam
