// Command-line surface: classification verdicts, grid/fractal rendering to
// PGM/PPM, density experiments to CSV, and verification suites to JSON.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ulam/classifier.hpp"
#include "ulam/culam.hpp"
#include "ulam/density.hpp"
#include "ulam/image.hpp"
#include "ulam/oracle.hpp"
#include "ulam/padic.hpp"
#include "ulam/verify.hpp"
#include "ulam/word.hpp"

namespace {

constexpr int kUsageError = 2;

std::string route_text(const ulam::ClassifyResult& r) {
  switch (r.route) {
    case ulam::ClassifyRoute::kEasyY0: return "easy case y=0";
    case ulam::ClassifyRoute::kEasyY1: return "easy case y=1";
    case ulam::ClassifyRoute::kZumkellerAllOnes:
      return "Zumkeller all-ones, k=" + std::to_string(r.k);
    case ulam::ClassifyRoute::kZumkellerPowerMinusTwo:
      return "Zumkeller power-minus-two, k=" + std::to_string(r.k);
    case ulam::ClassifyRoute::kZumkellerInteriorZero:
      return "Zumkeller interior-zero, k=" + std::to_string(r.k) +
             ", a=" + std::to_string(r.a);
    case ulam::ClassifyRoute::kCulam: return "culam, k=" + std::to_string(r.k);
  }
  return "?";
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// ---------- classify ----------

struct ClassifyArgs {
  std::vector<std::uint64_t> two_ones;
  std::vector<std::uint64_t> one_one;
  std::string word;
};

int run_classify(const ClassifyArgs& args) {
  const int forms = (args.two_ones.empty() ? 0 : 1) + (args.one_one.empty() ? 0 : 1) +
                    (args.word.empty() ? 0 : 1);
  if (forms != 1) {
    std::cerr << "classify: provide exactly one of --two-ones, --one-one, --word\n";
    return kUsageError;
  }
  if (!args.two_ones.empty()) {
    const ulam::ClassifyResult r = ulam::classify_two_ones_detail(
        {args.two_ones[0], args.two_ones[1], args.two_ones[2]});
    std::cout << (r.ulam ? "Ulam" : "not Ulam") << " (" << route_text(r) << ")\n";
    return 0;
  }
  if (!args.one_one.empty()) {
    std::cout << (ulam::classify_one_one(args.one_one[0], args.one_one[1]) ? "Ulam"
                                                                           : "not Ulam")
              << "\n";
    return 0;
  }
  const ulam::Word w = ulam::Word::from_string(args.word);
  if (w.length() == 1) {
    std::cout << "Ulam (length-1 base case)\n";
    return 0;
  }
  const unsigned reps = ulam::rep_count_word(w).value();
  if (reps == 1)
    std::cout << "Ulam (1 representation)\n";
  else
    std::cout << "not Ulam (" << reps << " representations)\n";
  return 0;
}

// ---------- render ----------

struct RenderArgs {
  std::string target;  // culam | ulam | fractal | pattern
  std::uint64_t y = 0;
  int size = 64;
  int width = 0, height = 0;
  std::int64_t x0 = 0, z0 = 0;
  std::string pattern_name;
  int d = 5;
  std::optional<std::int64_t> value;
  std::string ratio;
  std::optional<std::int64_t> sqrt_of;
  std::string bits;
  bool negative_branch = false;
  int precision = 32;
  bool ppm = false;
  std::string out = "render.pgm";
};

ulam::Dyadic parse_dyadic(const RenderArgs& a) {
  const int forms = (a.value.has_value() ? 1 : 0) + (a.ratio.empty() ? 0 : 1) +
                    (a.sqrt_of.has_value() ? 1 : 0) + (a.bits.empty() ? 0 : 1);
  if (forms != 1)
    throw CLI::ValidationError(
        "fractal needs exactly one of --value, --ratio, --sqrt, --bits");
  if (a.value) return ulam::dyadic_from_int(*a.value, a.precision);
  if (!a.ratio.empty()) {
    const auto slash = a.ratio.find('/');
    if (slash == std::string::npos)
      throw CLI::ValidationError("--ratio expects the form p/q");
    const std::int64_t p = std::stoll(a.ratio.substr(0, slash));
    const std::int64_t q = std::stoll(a.ratio.substr(slash + 1));
    return ulam::dyadic_from_ratio(p, q, a.precision);
  }
  if (a.sqrt_of) {
    ulam::Dyadic root = ulam::dyadic_sqrt(*a.sqrt_of, a.precision);
    return a.negative_branch ? root.negated() : root;
  }
  return ulam::dyadic_from_bits(a.bits.c_str(), a.precision);
}

int run_render(const RenderArgs& a) {
  const int w = a.width > 0 ? a.width : a.size;
  const int h = a.height > 0 ? a.height : a.size;

  if (a.target == "culam") {
    ulam::LabelGrid grid(w, h, a.x0, a.z0);
    for (std::int64_t z = a.z0; z < a.z0 + h; ++z)
      for (std::int64_t x = a.x0; x < a.x0 + w; ++x)
        grid.set(x, z, ulam::culam_fast(a.y, static_cast<std::uint64_t>(x),
                                        static_cast<std::uint64_t>(z)));
    ulam::write_bytes(a.out, ulam::encode_pgm(w, h, ulam::rasterize(grid)));
  } else if (a.target == "ulam") {
    ulam::BoolGrid grid(w, h, a.x0, a.z0);
    for (std::int64_t z = a.z0; z < a.z0 + h; ++z)
      for (std::int64_t x = a.x0; x < a.x0 + w; ++x)
        grid.set(x, z, ulam::classify_two_ones({static_cast<std::uint64_t>(x), a.y,
                                                static_cast<std::uint64_t>(z)}));
    if (a.ppm) {
      // three colours: member black, non-member white, impurity cells red
      const std::uint64_t period = ulam::period_of(std::max<std::uint64_t>(a.y, 1));
      std::vector<std::uint8_t> rgb;
      rgb.reserve(3u * static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
      for (int row = 0; row < h; ++row) {
        const std::int64_t z = a.z0 + h - 1 - row;
        for (int col = 0; col < w; ++col) {
          const std::int64_t x = a.x0 + col;
          const bool m = grid.at(x, z);
          bool impurity = false;
          if (a.y >= 2 && ulam::is_zumkeller(a.y) && x >= 0 && z >= 0) {
            const bool rep = ulam::classify_two_ones(
                {period + static_cast<std::uint64_t>(x) % period, a.y,
                 period + static_cast<std::uint64_t>(z) % period});
            impurity = (m != rep);
          }
          if (impurity) {
            rgb.push_back(200); rgb.push_back(0); rgb.push_back(0);
          } else {
            const std::uint8_t g = ulam::member_gray(m);
            rgb.push_back(g); rgb.push_back(g); rgb.push_back(g);
          }
        }
      }
      ulam::write_bytes(a.out, ulam::encode_ppm(w, h, rgb));
    } else {
      ulam::write_bytes(a.out, ulam::encode_pgm(w, h, ulam::rasterize(grid)));
    }
  } else if (a.target == "pattern") {
    ulam::CavemanCount (*fn)(int, std::uint64_t, std::uint64_t) = nullptr;
    if (a.pattern_name == "E1") fn = ulam::pattern_e1;
    else if (a.pattern_name == "E2") fn = ulam::pattern_e2;
    else if (a.pattern_name == "O1") fn = ulam::pattern_o1;
    else if (a.pattern_name == "O2") fn = ulam::pattern_o2;
    else throw CLI::ValidationError("--name must be one of E1, E2, O1, O2");
    const int side = 1 << a.d;
    ulam::LabelGrid grid(side, side);
    for (int z = 0; z < side; ++z)
      for (int x = 0; x < side; ++x)
        grid.set(x, z, fn(a.d, static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(z)));
    ulam::write_bytes(a.out, ulam::encode_pgm(side, side, ulam::rasterize(grid)));
  } else {  // fractal
    const ulam::Dyadic ytilde = parse_dyadic(a);
    const ulam::QuadrantWindow win = ulam::u_tilde_window(ytilde, w, h);
    ulam::write_bytes(a.out, ulam::encode_pgm(w, h, ulam::rasterize(win)));
  }
  std::cerr << "wrote " << a.out << "\n";
  return 0;
}

// ---------- density ----------

struct DensityArgs {
  std::vector<int> exact;
  std::vector<int> sample;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  double confidence = 0.90;
  int cap = ulam::kDefaultBuildCap;
  bool trend = false;
  std::string out;
};

void print_csv(std::ostream& os, const std::vector<ulam::DensityRow>& rows) {
  os << "length,mode,trials,successes,proportion,lo,hi,confidence,seed,generator\n";
  for (const auto& r : rows) {
    os << r.length << ',' << (r.mode == ulam::DensityMode::kExact ? "exact" : "sampled")
       << ',' << r.trials << ',' << r.successes << ','
       << fmt_double(r.interval.p_hat) << ',' << fmt_double(r.interval.lo) << ','
       << fmt_double(r.interval.hi) << ',' << fmt_double(r.interval.confidence) << ',';
    if (r.mode == ulam::DensityMode::kSampled) os << r.seed;
    os << ',' << r.generator << '\n';
  }
}

int run_density(const DensityArgs& args) {
  if (args.exact.empty() && args.sample.empty()) {
    std::cerr << "density: nothing to do; pass --exact and/or --sample lengths\n";
    return kUsageError;
  }
  std::vector<ulam::DensityRow> rows;
  for (int n : args.exact)
    rows.push_back(ulam::exact_density(n, args.confidence, args.cap));
  for (int n : args.sample)
    rows.push_back(ulam::sample_density(n, args.trials, args.seed, args.confidence));

  if (!args.out.empty()) {
    std::ofstream f(args.out, std::ios::trunc);
    if (!f) {
      std::cerr << "density: cannot open " << args.out << "\n";
      return 1;
    }
    print_csv(f, rows);
  } else {
    print_csv(std::cout, rows);
  }

  if (args.trend) {
    const auto trend = ulam::density_trend_report(rows);
    std::cerr << "# density trend (descriptive): reference = 0.75 * n^(-log2(4/3))\n"
              << "# length observed reference\n";
    for (const auto& t : trend)
      std::cerr << t.length << ' ' << fmt_double(t.observed) << ' '
                << fmt_double(t.reference) << '\n';
  }
  return 0;
}

// ---------- verify ----------

nlohmann::json suite_json(const ulam::SuiteResult& result) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : result.failures)
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  nlohmann::json j{{"suite", result.suite},
                   {"cases", result.cases},
                   {"failures", failures},
                   {"failure_count", result.failure_count},
                   {"elapsed", result.elapsed_seconds}};
  if (!result.subsuites.empty()) {
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& s : result.subsuites) subs.push_back(suite_json(s));
    j["subsuites"] = subs;
  }
  return j;
}

struct VerifyArgs {
  std::string suite = "all";
  ulam::SuiteOptions options;
};

int run_verify(const VerifyArgs& args) {
  const ulam::SuiteResult result = ulam::run_suite(args.suite, args.options);
  std::cout << suite_json(result).dump(2) << "\n";
  return result.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ulam binary words with two 1's: oracles, classifiers, fractals"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "decide Ulamness of a word");
  classify->add_option("--two-ones", classify_args.two_ones, "x y z of w(x,y,z)")
      ->expected(3);
  classify->add_option("--one-one", classify_args.one_one, "m n of 0^m 1 0^n")
      ->expected(2);
  classify->add_option("--word", classify_args.word, "explicit 0/1 word");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "write a PGM/PPM image");
  render->add_option("target", render_args.target, "culam | ulam | fractal | pattern")
      ->required()
      ->check(CLI::IsMember({"culam", "ulam", "fractal", "pattern"}));
  render->add_option("--y", render_args.y, "zero run between the 1's");
  render->add_option("--size", render_args.size, "square window side (default 64)");
  render->add_option("--width", render_args.width, "window width (overrides --size)");
  render->add_option("--height", render_args.height, "window height (overrides --size)");
  render->add_option("--x0", render_args.x0, "window origin x");
  render->add_option("--z0", render_args.z0, "window origin z");
  render->add_option("--name", render_args.pattern_name, "pattern name: E1 E2 O1 O2");
  render->add_option("--d", render_args.d, "pattern block exponent")->check(CLI::Range(1, 12));
  render->add_option("--value", render_args.value, "integer 2-adic input, e.g. -1");
  render->add_option("--ratio", render_args.ratio, "rational 2-adic input p/q, odd q");
  render->add_option("--sqrt", render_args.sqrt_of, "2-adic square root input, = 1 mod 8");
  render->add_option("--bits", render_args.bits, "2-adic digits, least significant first");
  render->add_flag("--negative-branch", render_args.negative_branch,
                   "use the negated square root");
  render->add_option("--precision", render_args.precision, "dyadic precision bits")
      ->check(CLI::Range(3, 63));
  render->add_flag("--ppm", render_args.ppm, "three-colour PPM for ulam overlays");
  render->add_option("--out", render_args.out, "output path (default render.pgm)");

  DensityArgs density_args;
  auto* density = app.add_subcommand("density", "density rows as CSV");
  density->add_option("--exact", density_args.exact, "lengths for exhaustive counts");
  density->add_option("--sample", density_args.sample, "lengths for Monte-Carlo rows");
  density->add_option("--trials", density_args.trials, "trials per sampled length");
  density->add_option("--seed", density_args.seed, "generator seed");
  density->add_option("--confidence", density_args.confidence, "interval confidence")
      ->check(CLI::Range(1e-6, 1.0 - 1e-6));
  density->add_option("--cap", density_args.cap, "exact-mode length cap");
  density->add_flag("--trend", density_args.trend, "print descriptive trend to stderr");
  density->add_option("--out", density_args.out, "CSV path (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run verification suites, JSON report");
  verify->add_option("--suite", verify_args.suite, "suite name or all")
      ->check(CLI::IsMember(ulam::suite_names()));
  verify->add_option("--ymax", verify_args.options.ymax, "tensor suites y cap");
  verify->add_option("--dmax", verify_args.options.dmax, "inside recursion depth cap");
  verify->add_option("--kmax", verify_args.options.kmax, "zumkeller exponent cap");
  verify->add_option("--lmax", verify_args.options.lmax, "outside recursion cap");
  verify->add_option("--struct-ymax", verify_args.options.struct_ymax,
                     "structural suites y cap");
  verify->add_option("--word-len", verify_args.options.word_len,
                     "oracle agreement exhaustive length")
      ->check(CLI::Range(4, 20));
  verify->add_option("--fractal-kmax", verify_args.options.fractal_kmax,
                     "rho convergence cap");
  verify->add_flag("--quick", verify_args.options.quick, "shrink all caps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return kUsageError;
  }

  try {
    if (classify->parsed()) return run_classify(classify_args);
    if (render->parsed()) return run_render(render_args);
    if (density->parsed()) return run_density(density_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
