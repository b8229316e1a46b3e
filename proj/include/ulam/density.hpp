// Density experiments: exact counts from the set builder, seeded Monte-Carlo
// proportion estimates with Wilson score intervals, and the one-1 pair
// counting identity.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulam/oracle.hpp"

namespace ulam {

// Deterministic counter-based word generator: trial t draws from a
// SplitMix64 stream seeded with mix64(seed ^ mix64(t + 1)), 64-bit outputs
// concatenated low-to-high and truncated to the word length.
inline constexpr char kGeneratorId[] = "splitmix64-ctr-v1";

std::uint64_t splitmix64_mix(std::uint64_t z);

class TrialWordSource {
 public:
  explicit TrialWordSource(std::uint64_t seed) : seed_(seed) {}
  // Fills `limbs_out` (size ceil(n/64)) with the n-bit word of this trial.
  void fill(std::uint64_t trial, int n, std::uint64_t* limbs_out) const;

 private:
  std::uint64_t seed_;
};

// Two-sided normal quantile (inverse CDF) by the AS241 rational
// approximations; |error| well below 1e-9 over (0,1).
double normal_quantile(double p);

struct WilsonInterval {
  double p_hat = 0.0;
  double lo = 0.0, hi = 0.0;
  double confidence = 0.0;
  std::uint64_t trials = 0, successes = 0;
};

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double confidence);

enum class DensityMode { kExact, kSampled };

struct DensityRow {
  int length = 0;
  DensityMode mode = DensityMode::kExact;
  std::uint64_t trials = 0, successes = 0;
  WilsonInterval interval;
  std::uint64_t seed = 0;       // sampled mode only
  std::string generator;        // algorithm identifier, "exhaustive" for exact
};

// successes = |U(n)|, trials = 2^n, via build_ulam_sets.
DensityRow exact_density(int n, double confidence = 0.90,
                         int cap = kDefaultBuildCap);

// Seeded uniform sampling of n-bit words; reproducible for a given
// (n, trials, seed) regardless of worker count.
DensityRow sample_density(int n, std::uint64_t trials, std::uint64_t seed,
                          double confidence = 0.90, int workers = 0);

// |{(m, n) : 0 <= m, n < 2^d, m AND n = 0}|; equals 3^d.
std::uint64_t one_one_pair_count(int d);

struct TrendRow {
  int length = 0;
  double observed = 0.0;
  double reference = 0.0;  // 0.75 * n^(-log2(4/3)), descriptive only
};

// Side-by-side comparison of observed proportions with the reference decay;
// requires at least two rows. Never asserts the reference fits.
std::vector<TrendRow> density_trend_report(const std::vector<DensityRow>& rows);

}  // namespace ulam
