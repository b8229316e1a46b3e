// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Set ULAM_ACCEPT_LONG=1 to include the long exhaustive tier.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "ulam/classifier.hpp"
#include "ulam/culam.hpp"
#include "ulam/density.hpp"
#include "ulam/oracle.hpp"
#include "ulam/padic.hpp"
#include "ulam/verify.hpp"

using namespace ulam;

namespace {

struct Runner {
  int failures = 0;

  void criterion(const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    try {
      detail = body();  // empty string means pass
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::printf("PASS  %s\n", name.c_str());
    } else {
      ++failures;
      std::printf("FAIL  %s: %s\n", name.c_str(), detail.c_str());
    }
    std::fflush(stdout);
  }
};

std::string suite_detail(const SuiteResult& r) {
  if (r.pass()) return {};
  std::string msg = std::to_string(r.failure_count) + " failures";
  if (!r.failures.empty())
    msg += "; first: " + r.failures[0].inputs + " expected " + r.failures[0].expected +
           " got " + r.failures[0].got;
  return msg;
}

}  // namespace

int main() {
  Runner runner;
  const bool long_tier = [] {
    const char* env = std::getenv("ULAM_ACCEPT_LONG");
    return env != nullptr && env[0] != '\0' && env[0] != '0';
  }();

  runner.criterion("exact count reproduction: 225166 of 1048576 at n=20", [] {
    const DensityRow row = exact_density(20);
    if (row.successes != 225166)
      return "successes = " + std::to_string(row.successes);
    if (row.trials != 1048576) return "trials = " + std::to_string(row.trials);
    const double prop = static_cast<double>(row.successes) / static_cast<double>(row.trials);
    if (std::abs(prop - 0.2147) >= 5e-5)
      return "proportion = " + std::to_string(prop);
    return std::string{};
  });

  if (long_tier) {
    runner.criterion("long tier: 6720784 of 33554432 at n=25", [] {
      const DensityRow row = exact_density(25);
      if (row.successes != 6720784)
        return "successes = " + std::to_string(row.successes);
      return std::string{};
    });
  } else {
    std::printf("SKIP  long tier: exact n=25 (set ULAM_ACCEPT_LONG=1)\n");
  }

  runner.criterion("Monte-Carlo reproduction at n=50 overlaps 0.15942 +/- 0.005", [] {
    const DensityRow row = sample_density(50, 100000, 42, 0.90);
    const double lo = 0.15442, hi = 0.16442;
    if (row.interval.hi < lo || row.interval.lo > hi)
      return "interval [" + std::to_string(row.interval.lo) + ", " +
             std::to_string(row.interval.hi) + "] misses the band";
    return std::string{};
  });

  runner.criterion("oracle triangle: words of length <= 16, zero mismatches", [] {
    SuiteOptions o;
    o.word_len = 16;
    return suite_detail(run_suite("oracle-agreement", o));
  });

  runner.criterion("closed-form Zumkeller suite: y <= 255 vs grid oracle", [] {
    SuiteOptions o;
    o.kmax = 7;
    return suite_detail(run_suite("zumkeller", o));
  });

  runner.criterion("tensor identities: inside (odd y <= 63, d <= 4)", [] {
    SuiteOptions o;
    o.ymax = 63;
    o.dmax = 4;
    return suite_detail(run_suite("tensor-inside", o));
  });

  runner.criterion("tensor identities: outside (2 <= y <= 63, k < l <= 8)", [] {
    SuiteOptions o;
    o.ymax = 63;
    o.lmax = 8;
    return suite_detail(run_suite("tensor-outside", o));
  });

  runner.criterion("pattern equivalence with restricted counts, d <= 8", [] {
    for (int d = 1; d <= 8; ++d) {
      const std::uint64_t side = std::uint64_t{1} << d;
      for (std::uint64_t x = 0; x < side; ++x) {
        for (std::uint64_t z = 0; z < side; ++z) {
          if (pattern_e1(d, x, z) != culam_prime_power2(d, PowerVariant::kEven, x, z))
            return "E1 d=" + std::to_string(d) + " x=" + std::to_string(x) +
                   " z=" + std::to_string(z);
          if (pattern_o1(d, x, z) != culam_prime_power2(d, PowerVariant::kOdd, x, z))
            return "O1 d=" + std::to_string(d) + " x=" + std::to_string(x) +
                   " z=" + std::to_string(z);
        }
      }
    }
    return std::string{};
  });

  runner.criterion("structural lemmas: four-parts relations, y <= 255", [] {
    SuiteOptions o;
    return suite_detail(run_suite("four-parts", o));
  });

  runner.criterion("structural lemmas: biperiodicity with minimal period, y <= 255", [] {
    SuiteOptions o;
    return suite_detail(run_suite("biperiodicity", o));
  });

  runner.criterion("structural lemmas: checkerboard parity via grid oracle, y <= 255", [] {
    for (std::uint64_t y = 2; y <= 255; ++y) {
      if (is_zumkeller(y)) continue;
      const int span = static_cast<int>(2 * period_of(y));
      const BoolGrid grid = grid_oracle(y, span, span);
      for (int x = 0; x < span; ++x)
        for (int z = 0; z < span; ++z)
          if (grid.at(x, z) && ((x + z) & 1) == 0)
            return "even member y=" + std::to_string(y) + " x=" + std::to_string(x) +
                   " z=" + std::to_string(z);
    }
    return std::string{};
  });

  runner.criterion("structural lemmas: odd-even equality, y <= 255", [] {
    SuiteOptions o;
    return suite_detail(run_suite("odd-even", o));
  });

  runner.criterion("sharp bounds: band + full diagonals, y <= 255", [] {
    SuiteOptions o;
    return suite_detail(run_suite("bounds", o));
  });

  runner.criterion("sharp bounds: y=117 diagonals at sums 127 and 137 are full", [] {
    // within the periodic building block [0,128)^2
    for (std::uint64_t x = 0; x <= 127; ++x)
      if (!classify_two_ones({x, 117, 127 - x}))
        return "missing at x=" + std::to_string(x) + " on sum 127";
    for (std::uint64_t x = 10; x <= 127; ++x)
      if (!classify_two_ones({x, 117, 137 - x}))
        return "missing at x=" + std::to_string(x) + " on sum 137";
    return std::string{};
  });

  runner.criterion("fractal suite: gasket, well-definedness, rho bound k <= 10", [] {
    SuiteOptions o;
    o.fractal_kmax = 10;
    return suite_detail(run_suite("fractal", o));
  });

  runner.criterion("counting identity: one-1 pairs equal 3^d for d <= 12", [] {
    std::uint64_t power = 1;
    for (int d = 0; d <= 12; ++d) {
      if (one_one_pair_count(d) != power)
        return "d=" + std::to_string(d) + " count=" + std::to_string(one_one_pair_count(d));
      power *= 3;
    }
    return std::string{};
  });

  runner.criterion("descriptive density trend report (no asymptotic assertion)", [] {
    std::vector<DensityRow> rows;
    rows.push_back(exact_density(16));
    rows.push_back(sample_density(50, 20000, 7, 0.90));
    const auto trend = density_trend_report(rows);
    if (trend.size() != 2) return std::string("unexpected row count");
    for (const auto& t : trend)
      if (!(t.reference > 0.0) || !std::isfinite(t.reference) ||
          !(t.observed > 0.0))
        return std::string("degenerate trend row");
    std::printf("      trend: n=%d observed %.4f vs reference %.4f; n=%d observed %.4f vs reference %.4f\n",
                trend[0].length, trend[0].observed, trend[0].reference,
                trend[1].length, trend[1].observed, trend[1].reference);
    return std::string{};
  });

  if (runner.failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", runner.failures);
  return 1;
}
