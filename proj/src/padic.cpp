#include "ulam/padic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <limits>

#include "ulam/culam.hpp"

namespace ulam {

namespace {

constexpr std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void check_precision(int precision) {
  if (precision < 1 || precision > 63)
    throw std::invalid_argument("Dyadic: precision must be in [1, 63]");
}

// Inverse of odd q modulo 2^64 by Newton iteration.
std::uint64_t inverse_pow2(std::uint64_t q) {
  std::uint64_t inv = q;  // correct mod 2^3
  for (int i = 0; i < 5; ++i) inv *= 2 - q * inv;
  return inv;
}

}  // namespace

Dyadic::Dyadic(std::uint64_t residue, int precision)
    : residue_(residue), precision_(precision) {
  check_precision(precision);
  if (residue >= (std::uint64_t{1} << precision))
    throw std::invalid_argument("Dyadic: residue does not fit the precision");
}

std::uint64_t Dyadic::mod_pow2(int bits) const {
  if (bits < 1 || bits > precision_)
    throw std::invalid_argument("Dyadic: truncation exceeds precision");
  return residue_ & low_mask(bits);
}

Dyadic Dyadic::negated() const {
  return Dyadic((~residue_ + 1) & low_mask(precision_), precision_);
}

Dyadic dyadic_from_int(std::int64_t v, int precision) {
  check_precision(precision);
  return Dyadic(static_cast<std::uint64_t>(v) & low_mask(precision), precision);
}

Dyadic dyadic_from_ratio(std::int64_t p, std::int64_t q, int precision) {
  check_precision(precision);
  if ((q & 1) == 0)
    throw std::domain_error("dyadic_from_ratio: denominator must be odd");
  const std::uint64_t inv = inverse_pow2(static_cast<std::uint64_t>(q));
  return Dyadic((static_cast<std::uint64_t>(p) * inv) & low_mask(precision), precision);
}

Dyadic dyadic_sqrt(std::int64_t a, int precision) {
  check_precision(precision);
  if (precision < 3)
    throw std::invalid_argument("dyadic_sqrt: needs at least 3 bits");
  const std::uint64_t av = static_cast<std::uint64_t>(a);
  if ((av & 7) != 1)
    throw std::domain_error("dyadic_sqrt: argument must be 1 mod 8");
  // Roots mod 16 are {1,7,9,15} for a = 1 mod 16 and {3,5,11,13} for
  // a = 9 mod 16; start on the canonical branch and lift bit by bit.
  std::uint64_t r = ((av & 15) == 9) ? 3 : 1;
  for (int j = 4; j < precision; ++j) {
    if (((r * r - av) >> j) & 1) r += std::uint64_t{1} << (j - 1);
  }
  return Dyadic(r & low_mask(precision), precision);
}

Dyadic dyadic_from_bits(const char* lsb_first_bits, int precision) {
  check_precision(precision);
  std::uint64_t residue = 0;
  const std::size_t len = std::strlen(lsb_first_bits);
  if (len == 0 || len > 63)
    throw std::invalid_argument("dyadic_from_bits: need 1..63 bits");
  for (std::size_t i = 0; i < len; ++i) {
    if (lsb_first_bits[i] == '1')
      residue |= std::uint64_t{1} << i;
    else if (lsb_first_bits[i] != '0')
      throw std::invalid_argument("dyadic_from_bits: characters must be 0 or 1");
  }
  return Dyadic(residue & low_mask(precision), precision);
}

QuadrantWindow::QuadrantWindow(int width, int depth)
    : w_(width), h_(depth),
      cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(depth), 0) {
  if (width < 1 || depth < 1)
    throw std::invalid_argument("QuadrantWindow: window must be non-empty");
}

CavemanCount QuadrantWindow::at(std::int64_t x, std::int64_t z) const {
  assert(x >= 0 && x < w_ && z <= -1 && -z <= h_);
  return CavemanCount(
      cells_[static_cast<std::size_t>(-z - 1) * static_cast<std::size_t>(w_) +
             static_cast<std::size_t>(x)]);
}

void QuadrantWindow::set(std::int64_t x, std::int64_t z, CavemanCount v) {
  assert(x >= 0 && x < w_ && z <= -1 && -z <= h_);
  cells_[static_cast<std::size_t>(-z - 1) * static_cast<std::size_t>(w_) +
         static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(v.value());
}

int u_tilde_pick_k(const Dyadic& ytilde, std::uint64_t x, std::uint64_t abs_z,
                   int min_k) {
  const std::uint64_t need = std::max(x, abs_z);
  for (int k = std::max(min_k, 0); k < ytilde.precision(); ++k) {
    const std::uint64_t yp = ytilde.mod_pow2(k + 1);
    if ((yp >> k) & 1 && yp >= need) return k;
  }
  throw PrecisionError("u_tilde: no admissible truncation at this precision");
}

CavemanCount u_tilde_at_k(const Dyadic& ytilde, std::uint64_t x, std::int64_t z,
                          int k) {
  const std::uint64_t yp = ytilde.mod_pow2(k + 1);
  const std::int64_t period = std::int64_t{1} << (k + 1);
  const std::int64_t zp = ((z % period) + period) % period;
  return culam_fast(yp, x, static_cast<std::uint64_t>(zp));
}

CavemanCount u_tilde(const Dyadic& ytilde, std::uint64_t x, std::int64_t z) {
  if (z >= 0) throw std::invalid_argument("u_tilde: z must be negative");
  const int k = u_tilde_pick_k(ytilde, x, static_cast<std::uint64_t>(-z));
  return u_tilde_at_k(ytilde, x, z, k);
}

QuadrantWindow u_tilde_window(const Dyadic& ytilde, int width, int depth) {
  QuadrantWindow win(width, depth);
  for (int zz = 1; zz <= depth; ++zz)
    for (int x = 0; x < width; ++x)
      win.set(x, -zz, u_tilde(ytilde, static_cast<std::uint64_t>(x), -zz));
  return win;
}

QuadrantWindow u_tilde_window_nat(std::uint64_t y, int width, int depth) {
  if (y == 0) throw std::invalid_argument("u_tilde_window_nat: y must be >= 1");
  QuadrantWindow win(width, depth);
  const std::int64_t period = static_cast<std::int64_t>(period_of(y));
  for (int zz = 1; zz <= depth; ++zz) {
    const std::int64_t zp = ((-zz % period) + period) % period;
    for (int x = 0; x < width; ++x)
      win.set(x, -zz, culam_fast(y, static_cast<std::uint64_t>(x),
                                 static_cast<std::uint64_t>(zp)));
  }
  return win;
}

double rho_distance(const QuadrantWindow& a, const QuadrantWindow& b, int max_d) {
  if (max_d < 1) throw std::invalid_argument("rho_distance: max_d must be >= 1");
  if (a.width() <= max_d || a.depth() < max_d || b.width() <= max_d ||
      b.depth() < max_d)
    throw std::invalid_argument("rho_distance: windows do not cover the probe range");
  for (int d = 1; d <= max_d; ++d) {
    bool ok = true;
    for (int m = 0; m <= d && ok; ++m) ok = a.at(m, -d) == b.at(m, -d);
    for (int n = 1; n < d && ok; ++n) ok = a.at(d, -n) == b.at(d, -n);
    if (!ok) {
      if (d == 1) return std::numeric_limits<double>::infinity();
      return 1.0 / (d - 1);
    }
  }
  return 0.0;
}

}  // namespace ulam
