#include "lpmtutte/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>

namespace lpm::oracle {

std::size_t guard_limit(std::size_t fallback) {
  if (const char* env = std::getenv("LPM_TUTTE_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

namespace {

void require_size(const LatticeRegion& region, std::size_t limit, const char* what) {
  const auto n = static_cast<std::size_t>(region.n());
  if (n > limit || n > 64)
    throw LpmError(ErrorKind::RegionTooLarge,
                   std::string(what) + ": n = " + std::to_string(n) + " exceeds " +
                       std::to_string(std::min<std::size_t>(limit, 64)));
}

bool within_bounds(const LatticeRegion& region, std::size_t i, int north) {
  return region.lower().north_prefix(i) <= north && north <= region.upper().north_prefix(i);
}

void extend(const LatticeRegion& region, std::vector<Step>& prefix, int north,
            std::vector<MonotonePath>& out) {
  const std::size_t i = prefix.size();
  if (i == static_cast<std::size_t>(region.n())) {
    out.emplace_back(prefix);
    return;
  }
  for (Step s : {Step::North, Step::East}) {
    const int next = north + (s == Step::North ? 1 : 0);
    if (!within_bounds(region, i + 1, next)) continue;
    prefix.push_back(s);
    extend(region, prefix, next, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MonotonePath> enumerate_full_paths(const LatticeRegion& region) {
  require_size(region, guard_limit(kEnumerationGuard), "enumerate_full_paths");
  std::vector<MonotonePath> out;
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>(region.n()));
  extend(region, prefix, 0, out);
  return out;
}

std::vector<LatticeEdge> path_edges(const MonotonePath& path) {
  std::vector<LatticeEdge> out;
  out.reserve(path.length());
  LatticePoint at{0, 0};
  for (Step s : path.steps()) {
    LatticeEdge e = s == Step::North ? LatticeEdge::up_from(at) : LatticeEdge::right_from(at);
    out.push_back(e);
    at = e.to;
  }
  return out;
}

BasisSet basis_of(const MonotonePath& path) {
  BasisSet b = 0;
  for (std::size_t i = 0; i < path.length(); ++i)
    if (path.step(i) == Step::North) b |= BasisSet{1} << i;
  return b;
}

WeightTag tutte_weight(const LatticeRegion& region, const LatticeEdge& e) {
  if (e.orientation() == Orientation::Vertical) {
    const auto upper = path_edges(region.upper());
    if (std::find(upper.begin(), upper.end(), e) != upper.end()) return WeightTag::X;
  } else {
    const auto lower = path_edges(region.lower());
    if (std::find(lower.begin(), lower.end(), e) != lower.end()) return WeightTag::Y;
  }
  return WeightTag::One;
}

bool is_basis(const LatticeRegion& region, BasisSet b) {
  const auto n = static_cast<std::size_t>(region.n());
  if (n < 64 && (b >> n) != 0) return false;
  if (std::popcount(b) != region.r()) return false;
  int north = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((b >> i) & 1) ++north;
    if (!within_bounds(region, i + 1, north)) return false;
  }
  return true;
}

BivariatePoly tutte_by_activities(const LatticeRegion& region) {
  require_size(region, guard_limit(kActivityGuard), "tutte_by_activities");
  const auto n = static_cast<std::size_t>(region.n());
  BivariatePoly total;
  for (const MonotonePath& path : enumerate_full_paths(region)) {
    const BasisSet b = basis_of(path);
    int internal = 0;
    int external = 0;
    for (std::size_t e = 0; e < n; ++e) {
      const BasisSet bit_e = BasisSet{1} << e;
      bool active = true;
      for (std::size_t a = 0; a < e && active; ++a) {
        const BasisSet bit_a = BasisSet{1} << a;
        if (b & bit_e) {
          // internal: some smaller a outside B can replace e
          if (!(b & bit_a) && is_basis(region, (b & ~bit_e) | bit_a)) active = false;
        } else {
          // external: e can replace some smaller a inside B
          if ((b & bit_a) && is_basis(region, (b & ~bit_a) | bit_e)) active = false;
        }
      }
      if (!active) continue;
      if (b & bit_e)
        ++internal;
      else
        ++external;
    }
    total = poly_add(total, BivariatePoly::monomial(1, internal, external));
  }
  return total;
}

BigInt count_paths_dp(const LatticeRegion& region) {
  const auto n = static_cast<std::size_t>(region.n());
  // ways[k]: paths of the current length ending with k north steps
  std::vector<BigInt> ways(static_cast<std::size_t>(region.r()) + 2, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> next(ways.size(), 0);
    for (int k = region.lower().north_prefix(i); k <= region.upper().north_prefix(i); ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (ways[uk] == 0) continue;
      if (within_bounds(region, i + 1, k)) next[uk] += ways[uk];
      if (within_bounds(region, i + 1, k + 1)) next[uk + 1] += ways[uk];
    }
    ways.swap(next);
  }
  return ways[static_cast<std::size_t>(region.r())];
}

}  // namespace lpm::oracle
