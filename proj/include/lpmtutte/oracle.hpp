// Brute-force ground truth. Nothing here reuses the region's edge tables or
// the sweep: paths are checked against the raw prefix bounds, and bases are
// tested directly against the matroid definition.
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lpmtutte/bivariate_poly.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/lattice.hpp"
#include "lpmtutte/rings.hpp"

namespace lpm::oracle {

inline constexpr std::size_t kEnumerationGuard = 24;
inline constexpr std::size_t kActivityGuard = 16;

/// `fallback`, unless LPM_TUTTE_MAX_N is set to a positive integer.
std::size_t guard_limit(std::size_t fallback);

/// Subset of [n] as a bitmask; bit i - 1 stands for ground-set element i.
using BasisSet = std::uint64_t;

/// Every full path of the region, North-before-East lexicographic order.
/// Throws RegionTooLarge when n exceeds the enumeration guard.
std::vector<MonotonePath> enumerate_full_paths(const LatticeRegion& region);

std::vector<LatticeEdge> path_edges(const MonotonePath& path);

/// Positions of the North steps.
BasisSet basis_of(const MonotonePath& path);

/// Tutte weight of `e` read off the edge sets of the two bounding paths.
WeightTag tutte_weight(const LatticeRegion& region, const LatticeEdge& e);

/// Sum over full paths of the product of edge weights, with weights given by
/// `weight_of(const LatticeEdge&) -> R::value_type`.
template <Ring R, class WeightFn>
typename R::value_type lattice_value_bruteforce(const LatticeRegion& region, WeightFn&& weight_of,
                                                R& ring) {
  auto total = ring.zero();
  for (const MonotonePath& path : enumerate_full_paths(region)) {
    auto w = ring.one();
    for (const LatticeEdge& e : path_edges(path)) w = ring.mul(w, weight_of(e));
    total = ring.add(total, w);
  }
  return total;
}

template <Ring R>
typename R::value_type lattice_value_bruteforce(const WeightedLattice& weighted, R& ring) {
  return lattice_value_bruteforce(
      weighted.region(), [&](const LatticeEdge& e) { return ring.from_weight(weighted.weight(e)); },
      ring);
}

/// Value of the Tutte weighting with weights from `tutte_weight`.
template <Ring R>
typename R::value_type tutte_value_bruteforce(const LatticeRegion& region, R& ring) {
  return lattice_value_bruteforce(
      region, [&](const LatticeEdge& e) { return ring.from_weight(tutte_weight(region, e)); },
      ring);
}

/// True iff |B| = r and the decoded step sequence stays between the bounds.
bool is_basis(const LatticeRegion& region, BasisSet b);

/// Sum over bases of x^internal(B) y^external(B), ground set ordered 1 < ... < n.
/// Throws RegionTooLarge when n exceeds the activity guard.
BivariatePoly tutte_by_activities(const LatticeRegion& region);

/// Number of full paths by dynamic programming over prefix north-counts.
BigInt count_paths_dp(const LatticeRegion& region);

}  // namespace lpm::oracle
