#include "ulam/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ulam/classifier.hpp"
#include "ulam/culam.hpp"
#include "ulam/oracle.hpp"
#include "ulam/padic.hpp"

namespace ulam {

namespace {

constexpr std::size_t kMaxStoredFailures = 64;

std::string cell_str(std::uint64_t y, std::uint64_t x, std::uint64_t z) {
  return "y=" + std::to_string(y) + " x=" + std::to_string(x) +
         " z=" + std::to_string(z);
}

bool member(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
  return classify_two_ones({x, y, z});
}

void absorb(SuiteResult& out, const VerifyReport& report) {
  out.cases += report.cells_checked;
  out.failure_count += report.mismatch_count;
  for (const auto& m : report.mismatches) {
    if (out.failures.size() >= kMaxStoredFailures) break;
    out.failures.push_back({report.name + " " + cell_str(m.y, m.x, m.z),
                            std::to_string(m.expected), std::to_string(m.got)});
  }
}

SuiteOptions effective(SuiteOptions o) {
  if (o.quick) {
    o.ymax = std::min<std::uint64_t>(o.ymax, 31);
    o.dmax = std::min(o.dmax, 3);
    o.kmax = std::min(o.kmax, 5);
    o.lmax = std::min(o.lmax, 6);
    o.struct_ymax = std::min<std::uint64_t>(o.struct_ymax, 63);
    o.word_len = std::min(o.word_len, 12);
    o.fractal_kmax = std::min(o.fractal_kmax, 7);
  }
  return o;
}

// ---- oracle-agreement ------------------------------------------------

void run_oracle_agreement(SuiteResult& out, const SuiteOptions& o) {
  const int L = o.word_len;
  const UlamSets sets = build_ulam_sets(L);
  UlamWordChecker checker;

  // word-level: the memoized decider against the batch builder
  for (int n = 1; n <= L; ++n) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const bool dp = checker.is_ulam(w, n);
      const bool st = sets.contains(n, w);
      ++out.cases;
      if (dp != st)
        out.fail("word len=" + std::to_string(n) + " bits=" + std::to_string(w),
                 st ? "ulam" : "not-ulam", dp ? "ulam" : "not-ulam");
    }
  }

  // one-1 specialization vs binomial parity
  for (std::uint64_t m = 0; m + 1 <= static_cast<std::uint64_t>(L); ++m) {
    for (std::uint64_t n = 0; m + n + 1 <= static_cast<std::uint64_t>(L); ++n) {
      const bool st = sets.contains(static_cast<int>(m + n + 1), std::uint64_t{1} << m);
      ++out.cases;
      if (st != odd_binomial(m, n))
        out.fail("one-one m=" + std::to_string(m) + " n=" + std::to_string(n),
                 odd_binomial(m, n) ? "ulam" : "not-ulam", st ? "ulam" : "not-ulam");
    }
  }

  // two-ones: sets vs grid oracle vs classifier
  for (std::uint64_t y = 0; y + 4 <= static_cast<std::uint64_t>(L); ++y) {
    const int span = static_cast<int>(L - y - 2);
    const BoolGrid grid = grid_oracle(y, span, span);
    for (int x = 0; x < span; ++x) {
      for (int z = 0; x + z < span; ++z) {
        const bool g = grid.at(x, z);
        const bool s = sets.contains(static_cast<int>(x + y + z + 2),
                                     (std::uint64_t{1} << x) |
                                         (std::uint64_t{1} << (x + y + 1)));
        const bool c = member(x, y, z);
        ++out.cases;
        if (g != s || g != c)
          out.fail("two-ones " + cell_str(y, x, z),
                   s ? "ulam" : "not-ulam",
                   std::string("grid=") + (g ? "u" : "n") + " classify=" + (c ? "u" : "n"));
      }
    }
  }

  // the update step never promotes a cell with zero split representations
  for (std::uint64_t y = 0; y + 4 <= static_cast<std::uint64_t>(L); ++y) {
    if (y >= 2 && y == period_of(y) - 2) continue;
    const int span = static_cast<int>(L - y - 2);
    const BoolGrid grid = grid_oracle(y, span, span);
    for (int x = 0; x < span; ++x) {
      for (int z = 0; x + z < span; ++z) {
        ++out.cases;
        if (grid.at(x, z) && oracle_split_count(y, x, z) == 0)
          out.fail("promotion " + cell_str(y, x, z), "split-count >= 1", "0");
      }
    }
  }
}

// ---- tensor identities ------------------------------------------------

void run_tensor_inside(SuiteResult& out, const SuiteOptions& o) {
  for (std::uint64_t y = 1; y <= o.ymax; y += 2)
    for (int d = 1; d <= o.dmax; ++d) absorb(out, verify_inside(y, d));
}

void run_tensor_outside(SuiteResult& out, const SuiteOptions& o) {
  for (std::uint64_t y = 2; y <= o.ymax; ++y)
    for (int ell = floor_log2(y) + 1; ell <= o.lmax; ++ell)
      absorb(out, verify_outside(y, ell));
}

// ---- four-parts & power-of-two structure -------------------------------

void run_four_parts(SuiteResult& out, const SuiteOptions& o) {
  for (std::uint64_t y = 1; y <= o.struct_ymax; ++y) {
    const FourParts parts = four_parts(y);
    const int h = parts.c0.width();
    for (int z = 0; z < h; ++z) {
      for (int x = 0; x < h; ++x) {
        const unsigned c0 = parts.c0.at(x, z).value();
        const unsigned c1 = parts.c1.at(x, z).value();
        const unsigned c2 = parts.c2.at(x, z).value();
        const unsigned c3 = parts.c3.at(x, z).value();
        ++out.cases;
        if (c1 != c2)
          out.fail("four-parts c1==c2 " + cell_str(y, x, z), std::to_string(c1),
                   std::to_string(c2));
        if (c0 != std::min(2u * c2, 2u))
          out.fail("four-parts c0==2*c2 " + cell_str(y, x, z),
                   std::to_string(std::min(2u * c2, 2u)), std::to_string(c0));
        if (c2 < std::min(2u * c3, 2u))
          out.fail("four-parts c2>=2*c3 " + cell_str(y, x, z),
                   ">=" + std::to_string(std::min(2u * c3, 2u)), std::to_string(c2));
      }
    }
  }

  // quadrants of culam[2^k] and culam[2^k+1] against the dyadic patterns
  const int kcap = std::min<int>(8, floor_log2(std::max<std::uint64_t>(o.struct_ymax, 2)));
  for (int k = 1; k <= kcap; ++k) {
    for (int variant = 0; variant < 2; ++variant) {
      const std::uint64_t y = (std::uint64_t{1} << k) + (variant ? 1 : 0);
      const FourParts parts = four_parts(y);
      const int h = parts.c0.width();
      for (int z = 0; z < h; ++z) {
        for (int x = 0; x < h; ++x) {
          const unsigned p1 = variant ? pattern_o1(k, x, z).value() : pattern_e1(k, x, z).value();
          const unsigned p2 = variant ? pattern_o2(k, x, z).value() : pattern_e2(k, x, z).value();
          const unsigned want0 = std::min(2u * p2, 2u);
          const unsigned want12 = std::min(p1 + p2, 2u);
          const unsigned want3 = p1;
          ++out.cases;
          const std::string tag = variant ? " odd " : " even ";
          if (parts.c0.at(x, z).value() != want0)
            out.fail("power-structure c0" + tag + cell_str(y, x, z),
                     std::to_string(want0), std::to_string(parts.c0.at(x, z).value()));
          if (parts.c1.at(x, z).value() != want12 || parts.c2.at(x, z).value() != want12)
            out.fail("power-structure c1/c2" + tag + cell_str(y, x, z),
                     std::to_string(want12), std::to_string(parts.c1.at(x, z).value()));
          if (parts.c3.at(x, z).value() != want3)
            out.fail("power-structure c3" + tag + cell_str(y, x, z),
                     std::to_string(want3), std::to_string(parts.c3.at(x, z).value()));
        }
      }
    }
  }

  // pattern equivalence with the restricted counts
  const int dcap = o.quick ? 6 : 8;
  for (int d = 1; d <= dcap; ++d) {
    const std::uint64_t side = std::uint64_t{1} << d;
    for (std::uint64_t z = 0; z < side; ++z) {
      for (std::uint64_t x = 0; x < side; ++x) {
        ++out.cases;
        if (pattern_e1(d, x, z) != culam_prime_power2(d, PowerVariant::kEven, x, z))
          out.fail("pattern E1 d=" + std::to_string(d) + " " + cell_str(0, x, z),
                   std::to_string(culam_prime_power2(d, PowerVariant::kEven, x, z).value()),
                   std::to_string(pattern_e1(d, x, z).value()));
        if (pattern_o1(d, x, z) != culam_prime_power2(d, PowerVariant::kOdd, x, z))
          out.fail("pattern O1 d=" + std::to_string(d) + " " + cell_str(0, x, z),
                   std::to_string(culam_prime_power2(d, PowerVariant::kOdd, x, z).value()),
                   std::to_string(pattern_o1(d, x, z).value()));
      }
    }
  }
}

// ---- zumkeller closed forms --------------------------------------------

void run_zumkeller(SuiteResult& out, const SuiteOptions& o) {
  std::vector<std::uint64_t> ys;
  for (int k = 0; k <= o.kmax; ++k) {
    const std::uint64_t period = std::uint64_t{1} << (k + 1);
    ys.push_back(period - 1);
    if (k >= 1) ys.push_back(period - 2);
    for (int a = 1; a < k; ++a) ys.push_back(period - (std::uint64_t{1} << a) - 1);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  for (std::uint64_t y : ys) {
    const int span = static_cast<int>(2 * period_of(y));
    const BoolGrid grid = grid_oracle(y, span, span);
    for (int x = 0; x < span; ++x) {
      for (int z = 0; z < span; ++z) {
        const bool g = grid.at(x, z);
        const bool c = member(x, y, z);
        ++out.cases;
        if (g != c)
          out.fail("zumkeller " + cell_str(y, x, z), g ? "ulam" : "not-ulam",
                   c ? "ulam" : "not-ulam");
      }
    }
  }
}

// ---- sharp bounds -------------------------------------------------------

void run_bounds(SuiteResult& out, const SuiteOptions& o) {
  for (std::uint64_t y = 1; y <= o.struct_ymax; ++y) {
    const std::uint64_t period = period_of(y);
    const std::uint64_t span = 2 * period;
    const bool zum = is_zumkeller(y);
    std::uint64_t top = 2 * period - y - 2;
    if ((top & 1) == 0) --top;
    for (std::uint64_t x = 0; x < span; ++x) {
      for (std::uint64_t z = 0; z < span; ++z) {
        const bool m = member(x, y, z);
        const bool nec = necessary_bounds({x, y, z});
        const bool gua = guaranteed_member({x, y, z});
        ++out.cases;
        if (m && !nec)
          out.fail("bounds member-outside-band " + cell_str(y, x, z), "in band", "outside");
        if (gua && !m)
          out.fail("bounds guaranteed-not-member " + cell_str(y, x, z), "ulam", "not-ulam");
        if (m && x + z < y)
          out.fail("bounds not-too-small " + cell_str(y, x, z), "x+z >= y", "member below");
        if (!zum && m && ((x + z) & 1) == 0)
          out.fail("bounds checkerboard " + cell_str(y, x, z), "odd x+z", "even member");
        // both guaranteed diagonals are completely full, with the stated
        // exception at the bottom representative
        const bool exceptional =
            (y == period - 1 || y == period - 2) && x + z == period - 1;
        const bool on_diagonal = (x + z) % period == period - 1 ||
                                 (x % period) + (z % period) == top;
        if (on_diagonal && !exceptional && !m)
          out.fail("bounds diagonal " + cell_str(y, x, z), "ulam", "not-ulam");
        if (exceptional && m)
          out.fail("bounds diagonal-exception " + cell_str(y, x, z), "not-ulam", "ulam");
      }
    }
  }
}

// ---- biperiodicity ------------------------------------------------------

void run_biperiodicity(SuiteResult& out, const SuiteOptions& o) {
  for (std::uint64_t y = 2; y <= o.struct_ymax; ++y) {
    const std::uint64_t period = period_of(y);
    const std::uint64_t span = 2 * period;
    if (!is_zumkeller(y)) {
      for (std::uint64_t x = 0; x < span; ++x) {
        for (std::uint64_t z = 0; z < span; ++z) {
          const bool base = member(x, y, z);
          ++out.cases;
          if (base != member(x + period, y, z) || base != member(x, y, z + period))
            out.fail("biperiodic " + cell_str(y, x, z), base ? "ulam" : "not-ulam",
                     "shift differs");
        }
      }
      // minimality witness on the axes
      for (std::uint64_t x = 0; x < 4 * period; ++x) {
        const bool expect = (x % period) == period - 1;
        ++out.cases;
        if (member(x, y, 0) != expect || member(0, y, x) != expect)
          out.fail("biperiodic axis " + cell_str(y, x, 0),
                   expect ? "ulam" : "not-ulam", "axis mismatch");
      }
    } else {
      // impurities confined to the bottom-left block
      for (std::uint64_t x = 0; x < 3 * period; ++x) {
        for (std::uint64_t z = 0; z < 3 * period; ++z) {
          if (x < period && z < period) continue;
          const bool base = member(x, y, z);
          const bool rep = member(period + x % period, y, period + z % period);
          ++out.cases;
          if (base != rep)
            out.fail("impurity-escape " + cell_str(y, x, z),
                     rep ? "ulam" : "not-ulam", base ? "ulam" : "not-ulam");
        }
      }
    }
  }
}

// ---- odd-even equality ---------------------------------------------------

void run_odd_even(SuiteResult& out, const SuiteOptions& o) {
  for (std::uint64_t y = 3; y <= o.struct_ymax; y += 2) {
    const std::uint64_t period = period_of(y);
    const std::uint64_t span = 2 * period;
    const bool zum = is_zumkeller(y);
    for (std::uint64_t x = 0; x < span; ++x) {
      for (std::uint64_t z = 0; z < span; ++z) {
        if (zum && x < period && z < period) continue;  // impurity block
        ++out.cases;
        if (member(x, y, z) != member(x, y - 1, z))
          out.fail("odd-even " + cell_str(y, x, z),
                   member(x, y - 1, z) ? "ulam" : "not-ulam",
                   member(x, y, z) ? "ulam" : "not-ulam");
      }
    }
  }
}

// ---- fractal --------------------------------------------------------------

void run_fractal(SuiteResult& out, const SuiteOptions& o) {
  // U~(-1): gray exactly on the diagonal x = |z|-1, white exactly on the
  // gasket mask, black elsewhere.
  {
    const Dyadic minus_one = dyadic_from_int(-1, 24);
    const int side = o.quick ? 64 : 128;
    const QuadrantWindow win = u_tilde_window(minus_one, side, side);
    for (int zz = 1; zz <= side; ++zz) {
      for (int x = 0; x < side; ++x) {
        const unsigned v = win.at(x, -zz).value();
        const int k = u_tilde_pick_k(minus_one, static_cast<std::uint64_t>(x),
                                     static_cast<std::uint64_t>(zz));
        const std::uint64_t zp = (std::uint64_t{1} << (k + 1)) - static_cast<std::uint64_t>(zz);
        unsigned expect;
        if (x == zz - 1) expect = 1;
        else if ((static_cast<std::uint64_t>(x) & zp) != 0) expect = 0;
        else expect = 2;
        ++out.cases;
        if (v != expect)
          out.fail("fractal(-1) x=" + std::to_string(x) + " z=-" + std::to_string(zz),
                   std::to_string(expect), std::to_string(v));
      }
    }
  }

  const Dyadic targets[] = {
      dyadic_from_int(-1, 40),
      dyadic_from_ratio(2, 3, 40),
      dyadic_sqrt(-7, 40),
  };
  const char* names[] = {"-1", "2/3", "sqrt(-7)"};

  // well-definedness: the three smallest admissible truncations agree
  {
    const int side = o.quick ? 32 : 64;
    for (int t = 0; t < 3; ++t) {
      for (int zz = 1; zz <= side; ++zz) {
        for (int x = 0; x < side; ++x) {
          int k = u_tilde_pick_k(targets[t], static_cast<std::uint64_t>(x),
                                 static_cast<std::uint64_t>(zz));
          const CavemanCount first = u_tilde_at_k(targets[t], x, -zz, k);
          ++out.cases;
          for (int step = 0; step < 2; ++step) {
            k = u_tilde_pick_k(targets[t], static_cast<std::uint64_t>(x),
                               static_cast<std::uint64_t>(zz), k + 1);
            if (u_tilde_at_k(targets[t], x, -zz, k) != first) {
              out.fail(std::string("well-defined ") + names[t] + " x=" +
                           std::to_string(x) + " z=-" + std::to_string(zz),
                       std::to_string(first.value()), "differs at k=" + std::to_string(k));
              break;
            }
          }
        }
      }
    }
  }

  // rho-convergence: truncation to k+1 bits stays within 1/2^k
  for (int t = 0; t < 3; ++t) {
    for (int k = 1; k <= o.fractal_kmax; ++k) {
      if (!targets[t].bit(k)) continue;  // truncation must keep the top bit
      const std::uint64_t yk = targets[t].mod_pow2(k + 1);
      const int radius = 1 << k;
      const QuadrantWindow full = u_tilde_window(targets[t], radius + 1, radius);
      const QuadrantWindow nat = u_tilde_window_nat(yk, radius + 1, radius);
      const double rho = rho_distance(full, nat, radius);
      ++out.cases;
      if (rho != 0.0)
        out.fail(std::string("rho ") + names[t] + " k=" + std::to_string(k),
                 "<= 1/2^k", "rho=" + std::to_string(rho));
    }
  }
}

using SuiteFn = void (*)(SuiteResult&, const SuiteOptions&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"oracle-agreement", run_oracle_agreement},
    {"tensor-inside", run_tensor_inside},
    {"tensor-outside", run_tensor_outside},
    {"four-parts", run_four_parts},
    {"zumkeller", run_zumkeller},
    {"bounds", run_bounds},
    {"biperiodicity", run_biperiodicity},
    {"odd-even", run_odd_even},
    {"fractal", run_fractal},
};

SuiteResult run_single(const SuiteEntry& entry, const SuiteOptions& o) {
  SuiteResult result;
  result.suite = entry.name;
  const auto start = std::chrono::steady_clock::now();
  entry.fn(result, o);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

void SuiteResult::fail(std::string inputs, std::string expected, std::string got) {
  ++failure_count;
  if (failures.size() < kMaxStoredFailures)
    failures.push_back({std::move(inputs), std::move(expected), std::move(got)});
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, SuiteOptions options) {
  options = effective(options);
  if (name == "all") {
    SuiteResult total;
    total.suite = "all";
    const auto start = std::chrono::steady_clock::now();
    for (const auto& entry : kSuites) {
      SuiteResult sub = run_single(entry, options);
      total.cases += sub.cases;
      total.failure_count += sub.failure_count;
      for (const auto& f : sub.failures) {
        if (total.failures.size() >= kMaxStoredFailures) break;
        total.failures.push_back(f);
      }
      total.subsuites.push_back(std::move(sub));
    }
    total.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return total;
  }
  for (const auto& entry : kSuites)
    if (name == entry.name) return run_single(entry, options);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace ulam
