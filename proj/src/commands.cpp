#include "lpmtutte/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lpmtutte/detcircuit.hpp"
#include "lpmtutte/engine.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/oracle.hpp"
#include "lpmtutte/rings.hpp"

namespace lpm::cli {

namespace {

// Largest stack dimension the verify command feeds to sDet; a d-dimensional
// stack expands to a 2^d x 2^d minor matrix.
constexpr std::size_t kVerifyTraceDim = 6;

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

Rational random_point_coordinate(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

CheckResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), CheckStatus::Pass, std::move(detail)};
}
CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Fail, std::move(detail)};
}
CheckResult skip(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Skip, std::move(detail)};
}

}  // namespace

RegionSpec random_spec(int n, std::uint64_t seed) {
  auto rng = seeded(seed, static_cast<std::uint64_t>(n));
  LatticeRegion region = random_region(n, rng);
  return {region.lower().to_string(), region.upper().to_string()};
}

std::vector<LatticeRegion> split_at_pinches(const LatticeRegion& region) {
  std::vector<LatticeRegion> parts;
  const std::string lower = region.lower().to_string();
  const std::string upper = region.upper().to_string();
  std::size_t start = 0;
  for (std::size_t i = 1; i <= lower.size(); ++i) {
    if (i < lower.size() && region.band_width(i) != 0) continue;
    parts.push_back(LatticeRegion::parse(lower.substr(start, i - start),
                                         upper.substr(start, i - start)));
    start = i;
  }
  return parts;
}

bool RegionReport::failed() const { return count(CheckStatus::Fail) > 0; }

std::size_t RegionReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

RegionReport verify_region(const LatticeRegion& region, std::uint64_t seed) {
  RegionReport report{region.key(), {}};
  auto& checks = report.checks;
  const BivariatePoly poly = tutte_polynomial(region);

  try {
    PolynomialRing ring;
    const BivariatePoly brute = oracle::tutte_value_bruteforce(region, ring);
    checks.push_back(brute == poly ? pass("engine_vs_bruteforce")
                                   : fail("engine_vs_bruteforce", "oracle gives " + brute.to_text()));
  } catch (const LpmError& e) {
    checks.push_back(skip("engine_vs_bruteforce", e.name()));
  }

  try {
    const BivariatePoly act = oracle::tutte_by_activities(region);
    checks.push_back(act == poly ? pass("engine_vs_activities")
                                 : fail("engine_vs_activities", "oracle gives " + act.to_text()));
  } catch (const LpmError& e) {
    checks.push_back(skip("engine_vs_activities", e.name()));
  }

  auto rng = seeded(seed, 0x5eed);
  const Rational x0 = random_point_coordinate(rng);
  const Rational y0 = random_point_coordinate(rng);
  const std::string at = "at (" + to_string(x0) + ", " + to_string(y0) + ")";
  const auto circuit = lattice_to_circuit(tutte_weighting(region), x0, y0);
  const Rational det_value = circuit_value_det(circuit);
  const Rational eval_value = tutte_eval(region, x0, y0);

  const bool small = std::all_of(circuit.begin(), circuit.end(), [](const StackMatrix& s) {
    return s.rows() <= kVerifyTraceDim && s.cols() <= kVerifyTraceDim;
  });
  if (small) {
    const Rational trace_value = circuit_value_trace(circuit);
    checks.push_back(trace_value == det_value
                         ? pass("trace_vs_det", at)
                         : fail("trace_vs_det", "trace " + to_string(trace_value) + " vs det " +
                                                    to_string(det_value) + " " + at));
  } else {
    checks.push_back(skip("trace_vs_det", "DimensionTooLarge(stack dimension > " +
                                              std::to_string(kVerifyTraceDim) + ")"));
  }

  checks.push_back(det_value - 1 == eval_value && poly.eval(x0, y0) == eval_value
                       ? pass("det_minus_one", at)
                       : fail("det_minus_one", "det - 1 = " + to_string(Rational(det_value - 1)) +
                                               ", eval = " + to_string(eval_value) + " " + at));

  const BivariatePoly dual = tutte_polynomial(region.transposed());
  checks.push_back(dual == poly.swapped() ? pass("duality")
                                          : fail("duality", "transpose gives " + dual.to_text()));

  const Rational at22 = tutte_eval(region, 2, 2);
  BigInt expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(region.n()));
  checks.push_back(at22 == Rational(expected)
                       ? pass("two_pow_n")
                       : fail("two_pow_n", "T(2,2) = " + to_string(at22)));

  const BigInt bases = count_bases(region);
  const BigInt paths = oracle::count_paths_dp(region);
  checks.push_back(bases == paths ? pass("count_bases", bases.get_str())
                                  : fail("count_bases", bases.get_str() + " vs " + paths.get_str()));

  std::string degree_problem;
  if (poly.deg_x() > region.r() || poly.deg_y() > region.m())
    degree_problem = "final degrees (" + std::to_string(poly.deg_x()) + ", " +
                     std::to_string(poly.deg_y()) + ")";
  PolynomialRing debug_ring;
  sweep(region, debug_ring, [&](std::size_t i, const SweepState<BivariatePoly>& state) {
    for (const auto& p : state.values)
      if (p.total_degree() > static_cast<int>(i) + 1 && degree_problem.empty())
        degree_problem = "degree " + std::to_string(p.total_degree()) + " after stack " +
                         std::to_string(i);
  });
  checks.push_back(degree_problem.empty() ? pass("degree_bounds")
                                          : fail("degree_bounds", degree_problem));
  return report;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  const auto k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

namespace {

struct Measured {
  std::uint64_t ops = 0;
  std::uint64_t ring_ops = 0;
  double seconds = 0;
};

Measured measure(BenchMode mode, const LatticeRegion& region, const Rational& x0,
                 const Rational& y0) {
  const auto start = std::chrono::steady_clock::now();
  Measured m;
  if (mode == BenchMode::Eval) {
    RationalRing ring(x0, y0);
    sweep(region, ring);
    m.ops = m.ring_ops = ring.counter().total();
  } else {
    PolynomialRing ring;
    sweep(region, ring);
    m.ops = ring.coefficient_counter().total();
    m.ring_ops = ring.counter().total();
  }
  m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return m;
}

}  // namespace

BenchReport run_bench(BenchMode mode, const std::vector<int>& sizes, const Rational& x0,
                      const Rational& y0, std::uint64_t seed) {
  BenchReport report;
  report.mode = mode;
  for (int n : sizes) {
    BenchRow row;
    row.n = n;
    const Measured widest = measure(mode, widest_region(n), x0, y0);
    const RegionSpec spec = random_spec(n, seed);
    const Measured random = measure(mode, spec.validate(), x0, y0);
    row.ops_widest = widest.ops;
    row.ring_ops_widest = widest.ring_ops;
    row.seconds_widest = widest.seconds;
    row.ops_random = random.ops;
    row.seconds_random = random.seconds;
    row.random_key = spec.key();
    report.rows.push_back(row);
  }
  for (std::size_t k = 1; k < report.rows.size(); ++k)
    report.ratios.push_back(static_cast<double>(report.rows[k].ops_widest) /
                            static_cast<double>(report.rows[k - 1].ops_widest));
  if (report.rows.size() >= 2) {
    std::vector<double> xs, ys;
    for (const auto& row : report.rows) {
      xs.push_back(row.n);
      ys.push_back(static_cast<double>(row.ops_widest));
    }
    report.slope = loglog_slope(xs, ys);
  }
  return report;
}

nlohmann::json BenchReport::to_json() const {
  nlohmann::json j;
  j["mode"] = mode == BenchMode::Eval ? "eval" : "poly";
  j["op_unit"] = mode == BenchMode::Eval ? "ring" : "coefficient";
  auto& sizes = j["sizes"] = nlohmann::json::array();
  auto& ops = j["opCounts"] = nlohmann::json::array();
  auto& ops_random = j["opCountsRandom"] = nlohmann::json::array();
  auto& walls = j["wallTimes"] = nlohmann::json::array();
  auto& walls_random = j["wallTimesRandom"] = nlohmann::json::array();
  auto& regions = j["randomRegions"] = nlohmann::json::array();
  for (const auto& row : rows) {
    sizes.push_back(row.n);
    ops.push_back(std::to_string(row.ops_widest));
    ops_random.push_back(std::to_string(row.ops_random));
    walls.push_back(row.seconds_widest);
    walls_random.push_back(row.seconds_random);
    regions.push_back(row.random_key);
  }
  j["ratios"] = ratios;
  j["slope"] = slope ? nlohmann::json(*slope) : nlohmann::json(nullptr);
  return j;
}

std::string BenchReport::to_text() const {
  std::ostringstream os;
  os << "mode " << (mode == BenchMode::Eval ? "eval (ring operations)" : "poly (coefficient operations)")
     << "\n";
  os << std::setw(6) << "n" << std::setw(16) << "ops(widest)" << std::setw(12) << "sec"
     << std::setw(16) << "ops(random)" << std::setw(12) << "sec" << std::setw(8) << "ratio" << "\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    os << std::setw(6) << row.n << std::setw(16) << row.ops_widest << std::setw(12)
       << std::fixed << std::setprecision(4) << row.seconds_widest << std::setw(16)
       << row.ops_random << std::setw(12) << row.seconds_random;
    if (k > 0) os << std::setw(8) << std::setprecision(2) << ratios[k - 1];
    os << "\n";
  }
  if (slope) os << "log-log slope " << std::setprecision(3) << *slope << "\n";
  return os.str();
}

namespace {

int report_error(const LpmError& e, std::ostream& err) {
  err << e.name() << ": " << e.what() << "\n";
  return is_validation_error(e.kind()) ? kExitInvalidInput : kExitCheckFailed;
}

void print_region_report(const RegionReport& report, std::ostream& out) {
  out << "region " << report.key << "\n";
  for (const auto& c : report.checks) {
    out << "  " << status_name(c.status) << " " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
}

void print_repro(const std::string& key, std::ostream& out) {
  const auto bar = key.find('|');
  out << "reproduce: lpm-tutte verify --lower " << key.substr(0, bar) << " --upper "
      << key.substr(bar + 1) << "\n";
}

int cmd_tutte(const RegionSpec& spec, const std::string& format, std::ostream& out) {
  const LatticeRegion region = spec.validate();
  const BivariatePoly poly = tutte_polynomial(region);
  if (format == "json") {
    out << poly.to_json().dump() << "\n";
  } else if (format == "factored-check") {
    BivariatePoly product = BivariatePoly::constant(1);
    std::string factored;
    for (const LatticeRegion& part : split_at_pinches(region)) {
      const BivariatePoly f = tutte_polynomial(part);
      product = product * f;
      if (!factored.empty()) factored += " * ";
      factored += "(" + f.to_text() + ")";
    }
    const bool ok = product == poly;
    out << poly.to_text() << "\n" << factored << "\n"
        << "factor check: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
  } else {
    out << poly.to_text() << "\n";
  }
  return kExitOk;
}

int cmd_eval(const RegionSpec& spec, const std::string& x, const std::string& y,
             std::ostream& out) {
  const Rational x0 = parse_rational(x);
  const Rational y0 = parse_rational(y);
  const LatticeRegion region = spec.validate();
  out << to_string(tutte_eval(region, x0, y0)) << "\n";
  return kExitOk;
}

int cmd_verify_one(const RegionSpec& spec, std::uint64_t seed, std::ostream& out) {
  const LatticeRegion region = spec.validate();
  const RegionReport report = verify_region(region, seed);
  print_region_report(report, out);
  out << "summary: " << report.count(CheckStatus::Pass) << " passed, "
      << report.count(CheckStatus::Fail) << " failed, " << report.count(CheckStatus::Skip)
      << " skipped\n";
  if (report.failed()) {
    print_repro(report.key, out);
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_verify_random(int count, int max_n, std::uint64_t seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(2, max_n);
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::optional<RegionReport> first_failure;
  for (int k = 0; k < count; ++k) {
    const int n = pick_n(rng);
    const std::uint64_t region_seed = rng();
    const RegionSpec spec = random_spec(n, region_seed);
    const RegionReport report = verify_region(spec.validate(), region_seed);
    passed += report.count(CheckStatus::Pass);
    failed += report.count(CheckStatus::Fail);
    skipped += report.count(CheckStatus::Skip);
    out << "[" << std::setw(4) << k + 1 << "] n=" << std::setw(3) << n << " " << report.key << " "
        << (report.failed() ? "FAIL" : "PASS") << " (" << report.count(CheckStatus::Pass)
        << " pass, " << report.count(CheckStatus::Skip) << " skip)\n";
    if (report.failed() && !first_failure) first_failure = report;
  }
  out << "summary: " << count << " regions, " << passed << " checks passed, " << failed
      << " failed, " << skipped << " skipped\n";
  if (first_failure) {
    out << "first failure:\n";
    print_region_report(*first_failure, out);
    print_repro(first_failure->key, out);
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tutte polynomials of lattice path matroids", "lpm-tutte"};
  app.require_subcommand(1);

  RegionSpec spec;
  std::string format = "text";
  std::string x = "2", y = "3";
  std::uint64_t seed = 0;
  std::vector<int> sizes;
  std::string mode = "eval";
  int random_count = 0;
  int max_n = 10;
  int n = 0;

  auto region_options = [&](CLI::App* sub) {
    sub->add_option("--lower", spec.lower, "lower bounding path over {N,E}")->required();
    sub->add_option("--upper", spec.upper, "upper bounding path over {N,E}")->required();
  };

  auto* tutte = app.add_subcommand("tutte", "print the Tutte polynomial");
  region_options(tutte);
  tutte->add_option("--format", format)->check(CLI::IsMember({"text", "json", "factored-check"}));

  auto* eval = app.add_subcommand("eval", "evaluate the Tutte polynomial at rational (x, y)");
  region_options(eval);
  eval->add_option("--x", x, "p/q or integer")->required();
  eval->add_option("--y", y, "p/q or integer")->required();

  auto* verify = app.add_subcommand("verify", "cross-check the engine against the oracles");
  verify->add_option("--lower", spec.lower);
  verify->add_option("--upper", spec.upper);
  verify->add_option("--random", random_count, "number of random regions")->check(CLI::PositiveNumber);
  verify->add_option("--max-n", max_n)->check(CLI::Range(2, 64));
  verify->add_option("--seed", seed);

  auto* bench = app.add_subcommand("bench", "operation counts and timings on growing sizes");
  bench->add_option("--mode", mode)->check(CLI::IsMember({"eval", "poly"}));
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--x", x);
  bench->add_option("--y", y);
  bench->add_option("--seed", seed);
  bench->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* random = app.add_subcommand("random", "print a seeded random region");
  random->add_option("--n", n)->required()->check(CLI::Range(2, 1 << 20));
  random->add_option("--seed", seed);
  random->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*tutte) return cmd_tutte(spec, format, out);
    if (*eval) return cmd_eval(spec, x, y, out);
    if (*verify) {
      if (random_count > 0) return cmd_verify_random(random_count, max_n, seed, out);
      if (spec.lower.empty() && spec.upper.empty()) {
        err << "verify needs --lower/--upper or --random\n";
        return kExitInvalidInput;
      }
      return cmd_verify_one(spec, seed, out);
    }
    if (*bench) {
      const BenchMode bench_mode = mode == "poly" ? BenchMode::Poly : BenchMode::Eval;
      if (sizes.empty())
        sizes = bench_mode == BenchMode::Eval ? std::vector<int>{64, 128, 256, 512}
                                              : std::vector<int>{16, 32, 64};
      for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] < 2 || sizes[k] % 2 != 0 || (k > 0 && sizes[k] <= sizes[k - 1])) {
          err << "sizes must be even, >= 2 and strictly increasing\n";
          return kExitInvalidInput;
        }
      }
      const BenchReport report =
          run_bench(bench_mode, sizes, parse_rational(x), parse_rational(y), seed);
      if (format == "json")
        out << report.to_json().dump(2) << "\n";
      else
        out << report.to_text();
      return kExitOk;
    }
    if (*random) {
      const RegionSpec r = random_spec(n, seed);
      if (format == "json")
        out << nlohmann::json{{"lower", r.lower}, {"upper", r.upper}}.dump() << "\n";
      else
        out << r.key() << "\n";
      return kExitOk;
    }
  } catch (const LpmError& e) {
    return report_error(e, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInvalidInput;
}

}  // namespace lpm::cli
