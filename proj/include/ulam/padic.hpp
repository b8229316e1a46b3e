// Truncated 2-adic integers and the quadrant labeling they induce via
// periodic extensions of culam approximants, plus the agreement metric rho.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "ulam/core.hpp"

namespace ulam {

// Raised when no admissible truncation exists within the stored precision;
// the caller must rebuild the Dyadic with more bits.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A 2-adic integer known modulo 2^precision, 1 <= precision <= 63.
class Dyadic {
 public:
  Dyadic(std::uint64_t residue, int precision);

  std::uint64_t residue() const { return residue_; }
  int precision() const { return precision_; }
  bool bit(int i) const { return (residue_ >> i) & 1; }
  std::uint64_t mod_pow2(int bits) const;  // bits <= precision
  Dyadic truncate(int bits) const { return Dyadic(mod_pow2(bits), bits); }
  Dyadic negated() const;

 private:
  std::uint64_t residue_;
  int precision_;
};

Dyadic dyadic_from_int(std::int64_t v, int precision);
// p / q for odd q, via the modular inverse of q.
Dyadic dyadic_from_ratio(std::int64_t p, std::int64_t q, int precision);
// Hensel square root of a (embedded 2-adically); requires a = 1 mod 8.
// Branch: the root = 3 mod 8 when one exists at this precision, else the
// root = 1 mod 8.
Dyadic dyadic_sqrt(std::int64_t a, int precision);
Dyadic dyadic_from_bits(const char* lsb_first_bits, int precision);

// Labels of Q = N x {-1-N}: x >= 0, z <= -1. Row storage is by |z|.
class QuadrantWindow {
 public:
  QuadrantWindow(int width, int depth);

  int width() const { return w_; }
  int depth() const { return h_; }
  CavemanCount at(std::int64_t x, std::int64_t z) const;
  void set(std::int64_t x, std::int64_t z, CavemanCount v);

 private:
  int w_, h_;
  std::vector<std::uint8_t> cells_;
};

// Smallest admissible k: y' = residue mod 2^{k+1} has its top bit set and
// y' >= max(x, |z|). Throws PrecisionError when none exists.
int u_tilde_pick_k(const Dyadic& ytilde, std::uint64_t x, std::uint64_t abs_z,
                   int min_k = 0);

// The label through the k-th truncation, no admissibility check.
CavemanCount u_tilde_at_k(const Dyadic& ytilde, std::uint64_t x, std::int64_t z,
                          int k);

// U~(ytilde)(x,z) for z < 0, through the smallest admissible truncation.
CavemanCount u_tilde(const Dyadic& ytilde, std::uint64_t x, std::int64_t z);

QuadrantWindow u_tilde_window(const Dyadic& ytilde, int width, int depth);

// U~(y) for a natural y: culam[y] extended periodically into the quadrant.
QuadrantWindow u_tilde_window_nat(std::uint64_t y, int width, int depth);

// 1/d for the largest d <= max_d with agreement on all m, |n| <= d; 0 when
// agreement holds through max_d; +infinity when the windows already differ
// at radius 1. Windows must cover the probed range.
double rho_distance(const QuadrantWindow& a, const QuadrantWindow& b, int max_d);

}  // namespace ulam
