// Workflows behind the lpm-tutte command line. Everything here writes to
// caller-supplied streams so the exit-code contract can be tested in-process:
// 0 success, 1 internal check failure, 2 input validation failure.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpmtutte/bivariate_poly.hpp"
#include "lpmtutte/lattice.hpp"

namespace lpm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

struct RegionSpec {
  std::string lower;
  std::string upper;

  std::string key() const { return lower + "|" + upper; }
  /// parse_path + validate_region; throws LpmError.
  LatticeRegion validate() const { return LatticeRegion::parse(lower, upper); }
};

/// Deterministic random region of size n for a seed (n >= 2).
RegionSpec random_spec(int n, std::uint64_t seed);

/// Maximal splits of the region at pinch points (band width 0 strictly
/// inside), as sub-regions in order.
std::vector<LatticeRegion> split_at_pinches(const LatticeRegion& region);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct RegionReport {
  std::string key;
  std::vector<CheckResult> checks;

  bool failed() const;
  std::size_t count(CheckStatus s) const;
};

/// Engine-vs-oracle, trace-vs-det, det-minus-one, duality, 2^n, base count and
/// degree-bound checks for one region. `seed` picks the rational test point.
RegionReport verify_region(const LatticeRegion& region, std::uint64_t seed);

enum class BenchMode { Eval, Poly };

struct BenchRow {
  int n = 0;
  std::uint64_t ops_widest = 0;  // ring ops (eval) or coefficient ops (poly)
  std::uint64_t ops_random = 0;
  std::uint64_t ring_ops_widest = 0;
  double seconds_widest = 0;
  double seconds_random = 0;
  std::string random_key;
};

struct BenchReport {
  BenchMode mode = BenchMode::Eval;
  std::vector<BenchRow> rows;
  std::vector<double> ratios;   // ops_widest[k + 1] / ops_widest[k]
  std::optional<double> slope;  // least-squares log-log slope, >= 2 sizes

  nlohmann::json to_json() const;
  std::string to_text() const;
};

BenchReport run_bench(BenchMode mode, const std::vector<int>& sizes, const Rational& x0,
                      const Rational& y0, std::uint64_t seed);

/// Least-squares slope of log(ys) against log(xs).
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

/// Entry point; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpm::cli
