// Ground-truth engines: exact Ulam-set construction by length, the memoized
// O(n^3) single-word decider, and the inductive two-ones grid oracle built
// from the calculation/update scheme.
#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "ulam/core.hpp"
#include "ulam/word.hpp"

namespace ulam {

// Default memory guard for build_ulam_sets (the tally array is 2^n bytes).
inline constexpr int kDefaultBuildCap = 25;

struct UlamSets {
  int max_len = 0;
  // per_length[n]: sorted packed words of length n, n in [1, max_len].
  std::vector<std::vector<std::uint64_t>> per_length;

  bool contains(int len, std::uint64_t packed) const;
  std::uint64_t count(int len) const {
    return per_length[static_cast<std::size_t>(len)].size();
  }
};

// Batch construction: a length-n word is Ulam iff it arises from exactly one
// ordered split u*v into two distinct shorter Ulam words.
UlamSets build_ulam_sets(int max_len, int cap = kDefaultBuildCap);

// Memoized dynamic program over contiguous subwords. Reusable scratch for
// hot loops (the free functions below allocate per call).
class UlamWordChecker {
 public:
  bool is_ulam(std::uint64_t packed, int n);
  // Ordered splits into two distinct Ulam parts, clamped to 2.
  int rep_count(std::uint64_t packed, int n);

 private:
  int fill(std::uint64_t packed, int n);
  std::vector<std::uint8_t> tbl_;
};

bool is_ulam_word(const Word& w);
CavemanCount rep_count_word(const Word& w);

class BoolGrid {
 public:
  BoolGrid(int width, int height, std::int64_t x0 = 0, std::int64_t z0 = 0)
      : w_(width), h_(height), x0_(x0), z0_(z0),
        cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0) {}

  int width() const { return w_; }
  int height() const { return h_; }
  std::int64_t x0() const { return x0_; }
  std::int64_t z0() const { return z0_; }

  bool at(std::int64_t x, std::int64_t z) const { return cells_[idx(x, z)] != 0; }
  void set(std::int64_t x, std::int64_t z, bool v) {
    cells_[idx(x, z)] = v ? 1 : 0;
  }

 private:
  std::size_t idx(std::int64_t x, std::int64_t z) const {
    const std::int64_t cx = x - x0_, cz = z - z0_;
    assert(cx >= 0 && cx < w_ && cz >= 0 && cz < h_);
    return static_cast<std::size_t>(cz) * static_cast<std::size_t>(w_) +
           static_cast<std::size_t>(cx);
  }

  int w_, h_;
  std::int64_t x0_, z0_;
  std::vector<std::uint8_t> cells_;
};

// Number of a in [0,y] with w(x,a) and w(y-a,z) Ulam and distinct, clamped
// to 3 (0, 1, 2 and "more" are the classes the update step cares about).
int oracle_split_count(std::uint64_t y, std::uint64_t x, std::uint64_t z);

// Cell (x,z) true iff w(x,y,z) is Ulam, by induction on x+z: the split count
// above plus the 0-prefix / 0-suffix representations, Ulam iff the total is
// exactly one.
BoolGrid grid_oracle(std::uint64_t y, int width, int height);

// Bridge to the word-level oracle: cell true iff w(x,y,z) is in the sets.
// Requires x + y + z + 2 <= sets.max_len over the whole window.
BoolGrid grid_from_sets(const UlamSets& sets, std::uint64_t y, int width, int height);

}  // namespace ulam
