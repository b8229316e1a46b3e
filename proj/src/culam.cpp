#include "ulam/culam.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace ulam {

namespace {

constexpr std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

constexpr unsigned cadd(unsigned a, unsigned b) { return a + b > 2 ? 2 : a + b; }
constexpr unsigned cmul(unsigned a, unsigned b) { return a * b > 2 ? 2 : a * b; }

void check_pattern_domain(int d, std::uint64_t x, std::uint64_t z) {
  if (d < 0 || d > 62) throw std::invalid_argument("pattern: d out of range");
  const std::uint64_t lim = std::uint64_t{1} << d;
  if (x >= lim || z >= lim)
    throw std::out_of_range("pattern: (x,z) outside B_d");
}

// Largest e < d with bit e clear in both x and z. The caller guarantees
// existence (x + z < 2^d - 1).
int largest_clear_bit(int d, std::uint64_t x, std::uint64_t z) {
  const std::uint64_t both = ~(x | z) & low_mask(d);
  assert(both != 0);
  return 63 - std::countl_zero(both);
}

unsigned e1_value(int d, std::uint64_t x, std::uint64_t z) {
  if (x + z >= (std::uint64_t{1} << d) - 1) return 0;
  const int e = largest_clear_bit(d, x, z);
  const std::uint64_t m = low_mask(e);
  return (x & m) + (z & m) < (std::uint64_t{1} << e) - 1 ? 2 : 1;
}

unsigned o1_value(int d, std::uint64_t x, std::uint64_t z) {
  if (x + z + 2 >= (std::uint64_t{1} << d)) return 0;
  if (((x + z) & 1) == 0) return (x & 1) ? 0 : 2;
  const int e = largest_clear_bit(d, x, z);
  const std::uint64_t m = low_mask(e);
  return (x & m) + (z & m) < (std::uint64_t{1} << e) - 1 ? 2 : 1;
}

unsigned o2_value(std::uint64_t x, std::uint64_t z) {
  if (((x + z) & 1) == 0) return (x & 1) ? 0 : 2;
  return 1;
}

// culam[1](x,z) = ((x+1) mod 2) + ((z+1) mod 2)
unsigned culam_one(std::uint64_t x, std::uint64_t z) {
  return unsigned(~x & 1) + unsigned(~z & 1);
}

// (culam[m-1](x,z), culam[m](x,z)) for odd m. Each level strips one block
// of binary digits off m, so the chain depth is the number of 1-blocks.
std::pair<unsigned, unsigned> culam_pair_odd(std::uint64_t m, std::uint64_t x,
                                             std::uint64_t z) {
  if (m == 1) return {1, culam_one(x, z)};
  const int e = std::countr_zero(m - 1);
  const auto [p, q] = culam_pair_odd((m - 1) >> e, x >> e, z >> e);
  const std::uint64_t xe = x & low_mask(e), ze = z & low_mask(e);
  const unsigned lo = cadd(cmul(p, e1_value(e, xe, ze)), q);  // E2 = 1
  const unsigned hi = cadd(cmul(p, o1_value(e, xe, ze)), cmul(q, o2_value(xe, ze)));
  return {lo, hi};
}

}  // namespace

CavemanCount culam_direct(std::uint64_t y, std::uint64_t x, std::uint64_t z) {
  unsigned cnt = 0;
  for (std::uint64_t a = 0; a <= y; ++a) {
    if ((x & a) == 0 && ((y - a) & z) == 0 && ++cnt == 2) break;
  }
  return CavemanCount(cnt);
}

LabelGrid culam_direct_grid(std::uint64_t y, int width, int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("culam_direct_grid: window must be non-empty");
  const int words = static_cast<int>((y + 64) / 64);
  std::vector<std::uint64_t> by_x(static_cast<std::size_t>(width) * words, 0);
  std::vector<std::uint64_t> by_z(static_cast<std::size_t>(height) * words, 0);
  for (int x = 0; x < width; ++x) {
    auto* row = &by_x[static_cast<std::size_t>(x) * words];
    for (std::uint64_t a = 0; a <= y; ++a)
      if ((static_cast<std::uint64_t>(x) & a) == 0)
        row[a >> 6] |= std::uint64_t{1} << (a & 63);
  }
  for (int z = 0; z < height; ++z) {
    auto* row = &by_z[static_cast<std::size_t>(z) * words];
    for (std::uint64_t a = 0; a <= y; ++a)
      if (((y - a) & static_cast<std::uint64_t>(z)) == 0)
        row[a >> 6] |= std::uint64_t{1} << (a & 63);
  }
  LabelGrid grid(width, height);
  for (int z = 0; z < height; ++z) {
    const auto* rz = &by_z[static_cast<std::size_t>(z) * words];
    for (int x = 0; x < width; ++x) {
      const auto* rx = &by_x[static_cast<std::size_t>(x) * words];
      unsigned acc = 0;
      for (int w = 0; w < words; ++w) {
        acc += static_cast<unsigned>(std::popcount(rx[w] & rz[w]));
        if (acc >= 2) break;
      }
      grid.set(x, z, CavemanCount(acc));
    }
  }
  return grid;
}

CavemanCount pattern_e1(int d, std::uint64_t x, std::uint64_t z) {
  check_pattern_domain(d, x, z);
  return CavemanCount(e1_value(d, x, z));
}

CavemanCount pattern_e2(int d, std::uint64_t x, std::uint64_t z) {
  check_pattern_domain(d, x, z);
  return CavemanCount(1);
}

CavemanCount pattern_o1(int d, std::uint64_t x, std::uint64_t z) {
  check_pattern_domain(d, x, z);
  return CavemanCount(o1_value(d, x, z));
}

CavemanCount pattern_o2(int d, std::uint64_t x, std::uint64_t z) {
  check_pattern_domain(d, x, z);
  return CavemanCount(o2_value(x, z));
}

CavemanCount culam_prime_power2(int d, PowerVariant variant, std::uint64_t x,
                                std::uint64_t z) {
  check_pattern_domain(d, x, z);
  const std::uint64_t pow = std::uint64_t{1} << d;
  unsigned cnt = 0;
  if (variant == PowerVariant::kEven) {
    for (std::uint64_t a = 1; a < pow; ++a)
      if ((x & a) == 0 && ((pow - a) & z) == 0 && ++cnt == 2) break;
  } else {
    const std::uint64_t y = pow + 1;
    for (std::uint64_t a = 2; a + 1 < y; ++a)
      if ((x & a) == 0 && ((y - a) & z) == 0 && ++cnt == 2) break;
  }
  return CavemanCount(cnt);
}

CavemanCount culam_fast(std::uint64_t y, std::uint64_t x, std::uint64_t z) {
  if (y == 0) return CavemanCount(1);
  if (y == 1) return CavemanCount(culam_one(x, z));
  if (y & 1) {
    const int d = std::countr_zero(y - 1);
    const auto [p, q] = culam_pair_odd((y - 1) >> d, x >> d, z >> d);
    const std::uint64_t xd = x & low_mask(d), zd = z & low_mask(d);
    return CavemanCount(cadd(cmul(p, o1_value(d, xd, zd)), cmul(q, o2_value(xd, zd))));
  }
  const int d = std::countr_zero(y);
  const auto [p, q] = culam_pair_odd(y >> d, x >> d, z >> d);
  const std::uint64_t xd = x & low_mask(d), zd = z & low_mask(d);
  return CavemanCount(cadd(cmul(p, e1_value(d, xd, zd)), q));
}

FundamentalBlock fundamental_block(std::uint64_t y) {
  if (y == 0) throw std::invalid_argument("fundamental_block: y must be positive");
  FundamentalBlock block;
  block.y = y;
  block.k = floor_log2(y);
  const std::uint64_t side = period_of(y);
  if (side > (std::uint64_t{1} << 16))
    throw std::length_error("fundamental_block: block too large to materialise");
  block.grid = culam_direct_grid(y, static_cast<int>(side), static_cast<int>(side));
  return block;
}

FourParts four_parts(std::uint64_t y) {
  const FundamentalBlock block = fundamental_block(y);
  const int h = static_cast<int>(std::uint64_t{1} << block.k);
  FourParts parts{LabelGrid(h, h), LabelGrid(h, h), LabelGrid(h, h), LabelGrid(h, h)};
  for (int z = 0; z < h; ++z) {
    for (int x = 0; x < h; ++x) {
      parts.c0.set(x, z, block.grid.at(x, z));
      parts.c1.set(x, z, block.grid.at(x + h, z));
      parts.c2.set(x, z, block.grid.at(x, z + h));
      parts.c3.set(x, z, block.grid.at(x + h, z + h));
    }
  }
  return parts;
}

LabelGrid tensor_combine(const LabelGrid& a, const LabelGrid& p,
                         const LabelGrid& b, const LabelGrid& q) {
  if (a.width() != b.width() || a.height() != b.height())
    throw std::invalid_argument("tensor_combine: outer grids differ in size");
  if (p.width() != q.width() || p.height() != q.height())
    throw std::invalid_argument("tensor_combine: inner grids differ in size");
  LabelGrid out(a.width() * p.width(), a.height() * p.height());
  for (int z = 0; z < out.height(); ++z) {
    for (int x = 0; x < out.width(); ++x) {
      const CavemanCount left =
          caveman_mul(a.at(x / p.width(), z / p.height()), p.at(x % p.width(), z % p.height()));
      const CavemanCount right =
          caveman_mul(b.at(x / q.width(), z / q.height()), q.at(x % q.width(), z % q.height()));
      out.set(x, z, caveman_add(left, right));
    }
  }
  return out;
}

void VerifyReport::note_mismatch(std::uint64_t y, std::uint64_t x, std::uint64_t z,
                                 int expected, int got) {
  ++mismatch_count;
  if (mismatches.size() < 32) mismatches.push_back({y, x, z, expected, got});
}

namespace {

// Shared core of the inside checks: culam[target] against
// culam[m-1] (x) P +^ culam[m] (x) Q over the target's fundamental block.
void check_inside_identity(VerifyReport& report, std::uint64_t target,
                           std::uint64_t m, int d, bool odd_patterns) {
  const std::uint64_t side = period_of(target);
  if (side > (std::uint64_t{1} << 13))
    throw std::length_error("verify_inside: fundamental block too large");
  const int s = static_cast<int>(side);
  const int inner = static_cast<int>(side >> d);
  const LabelGrid actual = culam_direct_grid(target, s, s);
  const LabelGrid lo = culam_direct_grid(m >= 1 ? m - 1 : 0, inner, inner);
  const LabelGrid hi = culam_direct_grid(m, inner, inner);
  const std::uint64_t mask = low_mask(d);
  for (int z = 0; z < s; ++z) {
    for (int x = 0; x < s; ++x) {
      const std::uint64_t xd = static_cast<std::uint64_t>(x) & mask;
      const std::uint64_t zd = static_cast<std::uint64_t>(z) & mask;
      const unsigned p = lo.at(x >> d, z >> d).value();
      const unsigned q = hi.at(x >> d, z >> d).value();
      const unsigned predicted =
          odd_patterns
              ? cadd(cmul(p, o1_value(d, xd, zd)), cmul(q, o2_value(xd, zd)))
              : cadd(cmul(p, e1_value(d, xd, zd)), q);
      const unsigned expect = actual.at(x, z).value();
      ++report.cells_checked;
      if (predicted != expect)
        report.note_mismatch(target, static_cast<std::uint64_t>(x),
                             static_cast<std::uint64_t>(z), static_cast<int>(expect),
                             static_cast<int>(predicted));
    }
  }
}

}  // namespace

VerifyReport verify_inside(std::uint64_t y_odd, int d) {
  if ((y_odd & 1) == 0 || y_odd < 1)
    throw std::invalid_argument("verify_inside: y must be odd and positive");
  if (d < 1 || d > 12) throw std::invalid_argument("verify_inside: d out of range");
  VerifyReport report;
  report.name = "inside y=" + std::to_string(y_odd) + " d=" + std::to_string(d);
  const std::uint64_t even_target = (std::uint64_t{1} << d) * y_odd;
  check_inside_identity(report, even_target, y_odd, d, false);
  check_inside_identity(report, even_target + 1, y_odd, d, true);
  return report;
}

VerifyReport verify_outside(std::uint64_t y, int ell) {
  if (y < 1) throw std::invalid_argument("verify_outside: y must be positive");
  const int k = floor_log2(y);
  if (ell <= k || ell > 12) throw std::invalid_argument("verify_outside: need k < ell <= 12");
  VerifyReport report;
  report.name = "outside y=" + std::to_string(y) + " l=" + std::to_string(ell);

  const FourParts parts = four_parts(y);
  const std::uint64_t target = (std::uint64_t{1} << ell) + y;
  const int s = static_cast<int>(std::uint64_t{1} << (ell + 1));
  const int outer = static_cast<int>(std::uint64_t{1} << (ell - k + 1));
  const LabelGrid actual = culam_direct_grid(target, s, s);
  const LabelGrid even_pow = culam_direct_grid(std::uint64_t{1} << (ell - k), outer, outer);
  const LabelGrid odd_pow =
      culam_direct_grid((std::uint64_t{1} << (ell - k)) + 1, outer, outer);
  const std::uint64_t mask = low_mask(k);
  for (int z = 0; z < s; ++z) {
    for (int x = 0; x < s; ++x) {
      const int xq = static_cast<int>(static_cast<std::uint64_t>(x) & mask);
      const int zq = static_cast<int>(static_cast<std::uint64_t>(z) & mask);
      const unsigned predicted =
          cadd(cmul(even_pow.at(x >> k, z >> k).value(), parts.c3.at(xq, zq).value()),
               cmul(odd_pow.at(x >> k, z >> k).value(), parts.c2.at(xq, zq).value()));
      const unsigned expect = actual.at(x, z).value();
      ++report.cells_checked;
      if (predicted != expect)
        report.note_mismatch(target, static_cast<std::uint64_t>(x),
                             static_cast<std::uint64_t>(z), static_cast<int>(expect),
                             static_cast<int>(predicted));
    }
  }
  return report;
}

HierarchyReport verify_hierarchy(std::uint64_t y) {
  HierarchyReport report;
  report.y = y;
  report.decomposition = block_decompose(y);
  const auto& blocks = report.decomposition.blocks;
  const int s = static_cast<int>(blocks.size());

  // Internal chain, top block first: stage j rebuilds the cut-off with
  // trailing zero-run d_j from the pair above it.
  std::uint64_t upper = 0;  // cut-off strictly above stage j
  for (int j = s - 1; j >= 0; --j) {
    const std::uint64_t m = upper + 1;  // odd
    report.stages.push_back(verify_inside(m, blocks[static_cast<std::size_t>(j)]));
    upper = (upper + 1) << blocks[static_cast<std::size_t>(j)];
  }

  // External chain, bottom block first; both cut-off variants are checked
  // at every stage since the statement leaves the choice open.
  if (s >= 2) {
    std::uint64_t even_cut = std::uint64_t{1} << blocks[0];
    int psum = blocks[0];
    for (int j = 1; j < s; ++j) {
      psum += blocks[static_cast<std::size_t>(j)];
      report.stages.push_back(verify_outside(even_cut, psum));
      report.stages.push_back(verify_outside(even_cut + 1, psum));
      even_cut += std::uint64_t{1} << psum;
    }
  }
  return report;
}

}  // namespace ulam
