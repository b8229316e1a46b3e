#include "ulam/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "ulam/word.hpp"

namespace ulam {

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state);
  }
};

}  // namespace

void TrialWordSource::fill(std::uint64_t trial, int n,
                           std::uint64_t* limbs_out) const {
  SplitMix64 stream{splitmix64_mix(seed_ ^ splitmix64_mix(trial + 1))};
  const int limbs = (n + 63) / 64;
  for (int i = 0; i < limbs; ++i) limbs_out[i] = stream.next();
  const int rem = n & 63;
  if (rem != 0) limbs_out[limbs - 1] &= (std::uint64_t{1} << rem) - 1;
}

// Wichura's AS241 (PPND16). Coefficients as published.
double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile: p must be in (0,1)");
  static constexpr double a[8] = {
      3.3871328727963666080e0,  1.3314166789178437745e2, 1.9715909503065514427e3,
      1.3731693765509461125e4,  4.5921953931549871457e4, 6.7265770927008700853e4,
      3.3430575583588128105e4,  2.5090809287301226727e3};
  static constexpr double b[8] = {
      1.0,                      4.2313330701600911252e1, 6.8718700749205790830e2,
      5.3941960214247511077e3,  2.1213794301586595867e4, 3.9307895800092710610e4,
      2.8729085735721942674e4,  5.2264952788528545610e3};
  static constexpr double c[8] = {
      1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
      3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static constexpr double d[8] = {
      1.0,                      2.05319162663775882187e0, 1.67638483018380384940e0,
      6.89767334985100004550e-1, 1.48103976427480074590e-1, 1.51986665636164571966e-2,
      5.47593808499534494600e-4, 1.05075007164441684324e-9};
  static constexpr double e[8] = {
      6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
      2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static constexpr double f[8] = {
      1.0,                      5.99832206555887937690e-1, 1.36929880922735805310e-1,
      1.48753612908506148525e-2, 7.86869131145613259100e-4, 1.84631831751005468180e-5,
      1.42151175831644588870e-7, 2.04426310338993978564e-15};

  auto horner = [](const double (&coef)[8], double r) {
    double acc = coef[7];
    for (int i = 6; i >= 0; --i) acc = acc * r + coef[i];
    return acc;
  };

  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(a, r) / horner(b, r);
  }
  double r = q < 0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = horner(c, r) / horner(d, r);
  } else {
    r -= 5.0;
    value = horner(e, r) / horner(f, r);
  }
  return q < 0 ? -value : value;
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double confidence) {
  if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be >= 1");
  if (successes > trials)
    throw std::invalid_argument("wilson_interval: successes exceed trials");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::invalid_argument("wilson_interval: confidence must be in (0,1)");

  const double n = static_cast<double>(trials);
  const double p_hat = static_cast<double>(successes) / n;
  const double z = normal_quantile(0.5 * (1.0 + confidence));
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p_hat + z2 / (2.0 * n)) / denom;
  const double half =
      (z / denom) * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n));

  WilsonInterval w;
  w.p_hat = p_hat;
  w.lo = std::max(0.0, center - half);
  w.hi = std::min(1.0, center + half);
  w.confidence = confidence;
  w.trials = trials;
  w.successes = successes;
  return w;
}

DensityRow exact_density(int n, double confidence, int cap) {
  const UlamSets sets = build_ulam_sets(n, cap);
  DensityRow row;
  row.length = n;
  row.mode = DensityMode::kExact;
  row.trials = std::uint64_t{1} << n;
  row.successes = sets.count(n);
  row.interval = wilson_interval(row.successes, row.trials, confidence);
  row.generator = "exhaustive";
  return row;
}

namespace {

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ULAM_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return std::min(parsed, 256);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t count_range(const TrialWordSource& source, int n,
                          std::uint64_t begin, std::uint64_t end) {
  std::uint64_t hits = 0;
  if (n <= 64) {
    UlamWordChecker checker;
    std::uint64_t limb;
    for (std::uint64_t t = begin; t < end; ++t) {
      source.fill(t, n, &limb);
      if (checker.is_ulam(limb, n)) ++hits;
    }
  } else {
    std::vector<std::uint64_t> limbs(static_cast<std::size_t>((n + 63) / 64));
    std::string bits(static_cast<std::size_t>(n), '0');
    for (std::uint64_t t = begin; t < end; ++t) {
      source.fill(t, n, limbs.data());
      for (int i = 0; i < n; ++i)
        bits[static_cast<std::size_t>(i)] =
            ((limbs[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1) ? '1' : '0';
      if (is_ulam_word(Word::from_string(bits))) ++hits;
    }
  }
  return hits;
}

}  // namespace

DensityRow sample_density(int n, std::uint64_t trials, std::uint64_t seed,
                          double confidence, int workers) {
  if (n < 1) throw std::invalid_argument("sample_density: n must be >= 1");
  if (trials < 1) throw std::invalid_argument("sample_density: trials must be >= 1");

  const TrialWordSource source(seed);
  const int nw = std::max(1, std::min<int>(worker_count(workers),
                                           trials > 1024 ? 256 : 1));
  std::uint64_t successes = 0;
  if (nw == 1) {
    successes = count_range(source, n, 0, trials);
  } else {
    std::vector<std::uint64_t> tallies(static_cast<std::size_t>(nw), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + nw - 1) / nw;
    for (int i = 0; i < nw; ++i) {
      const std::uint64_t begin = std::min<std::uint64_t>(trials, chunk * i);
      const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
      pool.emplace_back([&, i, begin, end] {
        tallies[static_cast<std::size_t>(i)] = count_range(source, n, begin, end);
      });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t t : tallies) successes += t;
  }

  DensityRow row;
  row.length = n;
  row.mode = DensityMode::kSampled;
  row.trials = trials;
  row.successes = successes;
  row.interval = wilson_interval(successes, trials, confidence);
  row.seed = seed;
  row.generator = kGeneratorId;
  return row;
}

std::uint64_t one_one_pair_count(int d) {
  if (d < 0 || d > 24) throw std::invalid_argument("one_one_pair_count: d out of range");
  std::uint64_t total = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
    total += std::uint64_t{1} << (d - std::popcount(m));  // choices of n inside ~m
  return total;
}

std::vector<TrendRow> density_trend_report(const std::vector<DensityRow>& rows) {
  if (rows.size() < 2)
    throw std::invalid_argument("density_trend_report: need at least two rows");
  const double exponent = std::log2(4.0 / 3.0);
  std::vector<TrendRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    TrendRow t;
    t.length = row.length;
    t.observed = static_cast<double>(row.successes) / static_cast<double>(row.trials);
    t.reference = 0.75 * std::pow(static_cast<double>(row.length), -exponent);
    out.push_back(t);
  }
  return out;
}

}  // namespace ulam
