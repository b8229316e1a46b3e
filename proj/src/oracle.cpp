#include "ulam/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ulam {

namespace {

constexpr std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

bool UlamSets::contains(int len, std::uint64_t packed) const {
  if (len < 1 || len > max_len) return false;
  const auto& v = per_length[static_cast<std::size_t>(len)];
  return std::binary_search(v.begin(), v.end(), packed);
}

UlamSets build_ulam_sets(int max_len, int cap) {
  if (max_len < 1) throw std::invalid_argument("build_ulam_sets: max_len must be >= 1");
  if (max_len > cap || cap > 30)
    throw std::length_error("build_ulam_sets: max_len exceeds the memory cap");

  UlamSets sets;
  sets.max_len = max_len;
  sets.per_length.resize(static_cast<std::size_t>(max_len) + 1);
  sets.per_length[1] = {0, 1};

  std::vector<std::uint8_t> tally;
  for (int n = 2; n <= max_len; ++n) {
    tally.assign(std::size_t{1} << n, 0);
    for (int i = 1; i < n; ++i) {
      const auto& us = sets.per_length[static_cast<std::size_t>(i)];
      const auto& vs = sets.per_length[static_cast<std::size_t>(n - i)];
      const bool same_len = (i == n - i);
      for (std::uint64_t u : us) {
        for (std::uint64_t v : vs) {
          if (same_len && u == v) continue;
          const std::uint64_t w = u | (v << i);
          if (tally[w] < 2) ++tally[w];
        }
      }
    }
    auto& out = sets.per_length[static_cast<std::size_t>(n)];
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
      if (tally[w] == 1) out.push_back(w);
  }
  return sets;
}

// tbl_ holds one byte per (length, start) subword; fill() returns the
// clamped representation count of the whole word.
int UlamWordChecker::fill(std::uint64_t w, int n) {
  tbl_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto ulam = [&](int len, int s) -> std::uint8_t& {
    return tbl_[static_cast<std::size_t>(len - 1) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(s)];
  };
  for (int s = 0; s < n; ++s) ulam(1, s) = 1;
  int full_count = 0;
  for (int len = 2; len <= n; ++len) {
    for (int s = 0; s + len <= n; ++s) {
      int cnt = 0;
      for (int i = 1; i < len; ++i) {
        if (!ulam(i, s) || !ulam(len - i, s + i)) continue;
        if (2 * i == len &&
            (((w >> s) ^ (w >> (s + i))) & low_mask(i)) == 0)
          continue;  // equal halves
        if (++cnt == 2) break;
      }
      ulam(len, s) = (cnt == 1);
      if (len == n) full_count = cnt;
    }
  }
  return n == 1 ? 0 : full_count;
}

bool UlamWordChecker::is_ulam(std::uint64_t packed, int n) {
  if (n == 1) return true;
  return fill(packed, n) == 1;
}

int UlamWordChecker::rep_count(std::uint64_t packed, int n) {
  if (n == 1) return 0;
  return fill(packed, n);
}

namespace {

// Generic path for words longer than 64 bits; same DP over a bit vector.
int rep_count_generic(const Word& w) {
  const int n = w.length();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = w.bit(i);
  std::vector<std::uint8_t> tbl(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto ulam = [&](int len, int s) -> std::uint8_t& {
    return tbl[static_cast<std::size_t>(len - 1) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(s)];
  };
  for (int s = 0; s < n; ++s) ulam(1, s) = 1;
  int full_count = 0;
  for (int len = 2; len <= n; ++len) {
    for (int s = 0; s + len <= n; ++s) {
      int cnt = 0;
      for (int i = 1; i < len; ++i) {
        if (!ulam(i, s) || !ulam(len - i, s + i)) continue;
        if (2 * i == len &&
            std::equal(bits.begin() + s, bits.begin() + s + i, bits.begin() + s + i))
          continue;
        if (++cnt == 2) break;
      }
      ulam(len, s) = (cnt == 1);
      if (len == n) full_count = cnt;
    }
  }
  return full_count;
}

}  // namespace

bool is_ulam_word(const Word& w) {
  if (w.length() == 1) return true;
  if (w.length() <= 64) {
    UlamWordChecker checker;
    return checker.is_ulam(w.packed(), w.length());
  }
  return rep_count_generic(w) == 1;
}

CavemanCount rep_count_word(const Word& w) {
  if (w.length() == 1) return CavemanCount(0);
  if (w.length() <= 64) {
    UlamWordChecker checker;
    return CavemanCount(static_cast<unsigned>(checker.rep_count(w.packed(), w.length())));
  }
  return CavemanCount(static_cast<unsigned>(rep_count_generic(w)));
}

int oracle_split_count(std::uint64_t y, std::uint64_t x, std::uint64_t z) {
  int cnt = 0;
  for (std::uint64_t a = 0; a <= y; ++a) {
    if ((x & a) != 0 || ((y - a) & z) != 0) continue;
    if (x == y - a && a == z) continue;  // identical parts
    if (++cnt == 3) break;
  }
  return cnt;
}

// Split counting vectorised over a: row bitsets keyed by x and by z, one bit
// per candidate a. The per-cell count is a masked popcount.
namespace {

struct SplitBitsets {
  int words;
  std::vector<std::uint64_t> by_x, by_z;

  SplitBitsets(std::uint64_t y, int width, int height)
      : words(static_cast<int>((y + 64) / 64)),
        by_x(static_cast<std::size_t>(width) * static_cast<std::size_t>(words), 0),
        by_z(static_cast<std::size_t>(height) * static_cast<std::size_t>(words), 0) {
    for (int x = 0; x < width; ++x) {
      auto* row = &by_x[static_cast<std::size_t>(x) * static_cast<std::size_t>(words)];
      for (std::uint64_t a = 0; a <= y; ++a)
        if ((static_cast<std::uint64_t>(x) & a) == 0) row[a >> 6] |= std::uint64_t{1} << (a & 63);
    }
    for (int z = 0; z < height; ++z) {
      auto* row = &by_z[static_cast<std::size_t>(z) * static_cast<std::size_t>(words)];
      for (std::uint64_t a = 0; a <= y; ++a)
        if (((y - a) & static_cast<std::uint64_t>(z)) == 0) row[a >> 6] |= std::uint64_t{1} << (a & 63);
    }
  }

  // Count of common a's, clamped to `cap`.
  int count(int x, int z, int cap) const {
    const auto* rx = &by_x[static_cast<std::size_t>(x) * static_cast<std::size_t>(words)];
    const auto* rz = &by_z[static_cast<std::size_t>(z) * static_cast<std::size_t>(words)];
    int acc = 0;
    for (int w = 0; w < words; ++w) {
      acc += std::popcount(rx[w] & rz[w]);
      if (acc >= cap) return cap;
    }
    return acc;
  }
};

}  // namespace

BoolGrid grid_oracle(std::uint64_t y, int width, int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("grid_oracle: window must be non-empty");
  BoolGrid grid(width, height);
  SplitBitsets bs(y, width, height);
  for (int z = 0; z < height; ++z) {
    for (int x = 0; x < width; ++x) {
      int cnt = bs.count(x, z, 3);
      if (static_cast<std::uint64_t>(x) + static_cast<std::uint64_t>(z) == y &&
          (static_cast<std::uint64_t>(x) & static_cast<std::uint64_t>(z)) == 0)
        --cnt;  // the a = z split repeats w(x,z); not a valid pair
      if (x > 0 && grid.at(x - 1, z)) ++cnt;
      if (z > 0 && grid.at(x, z - 1)) ++cnt;
      grid.set(x, z, cnt == 1);
    }
  }
  return grid;
}

BoolGrid grid_from_sets(const UlamSets& sets, std::uint64_t y, int width, int height) {
  const std::uint64_t max_sum =
      static_cast<std::uint64_t>(width - 1) + y + static_cast<std::uint64_t>(height - 1) + 2;
  if (max_sum > static_cast<std::uint64_t>(sets.max_len))
    throw std::invalid_argument("grid_from_sets: window exceeds built length");
  BoolGrid grid(width, height);
  for (int z = 0; z < height; ++z) {
    for (int x = 0; x < width; ++x) {
      const int len = static_cast<int>(x + y + z + 2);
      const std::uint64_t packed =
          (std::uint64_t{1} << x) | (std::uint64_t{1} << (x + y + 1));
      grid.set(x, z, sets.contains(len, packed));
    }
  }
  return grid;
}

}  // namespace ulam
