// Lattice regions bounded by two monotone paths, their edge sets, the Tutte
// weighting of those edges and the anti-diagonal stack decomposition.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpm {

enum class Step : std::uint8_t { North, East };

/// An N/E step sequence with prefix-count tables. Position i of a prefix
/// table counts steps among the first i steps, so tables have length n + 1.
class MonotonePath {
 public:
  /// Parses a string over {N, E} (case-insensitive).
  /// Throws EmptyPath or IllegalCharacter(1-based position).
  static MonotonePath parse(std::string_view text);

  explicit MonotonePath(std::vector<Step> steps);

  std::size_t length() const noexcept { return steps_.size(); }
  std::span<const Step> steps() const noexcept { return steps_; }
  Step step(std::size_t i) const { return steps_[i]; }

  int north_prefix(std::size_t i) const { return north_prefix_[i]; }
  int east_prefix(std::size_t i) const {
    return static_cast<int>(i) - north_prefix_[i];
  }
  int north_count() const noexcept { return north_prefix_.back(); }
  int east_count() const noexcept {
    return static_cast<int>(length()) - north_count();
  }

  /// Same path with N and E exchanged (reflection in the diagonal).
  MonotonePath swapped() const;
  std::string to_string() const;

  bool operator==(const MonotonePath&) const = default;

 private:
  std::vector<Step> steps_;
  std::vector<int> north_prefix_;
};

struct LatticePoint {
  int x = 0;
  int y = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

enum class Orientation : std::uint8_t { Vertical, Horizontal };

struct LatticeEdge {
  LatticePoint from;
  LatticePoint to;

  static LatticeEdge up_from(LatticePoint p) { return {p, {p.x, p.y + 1}}; }
  static LatticeEdge right_from(LatticePoint p) { return {p, {p.x + 1, p.y}}; }

  Orientation orientation() const {
    return to.x == from.x ? Orientation::Vertical : Orientation::Horizontal;
  }
  auto operator<=>(const LatticeEdge&) const = default;
};

enum class WeightTag : std::uint8_t { X, Y, One };

const char* to_string(WeightTag tag);

/// Incoming-by-outgoing block of one vertex. Rows are ordered (left, below),
/// columns (up, right); every entry of column c equals the tag of outgoing
/// edge c. The source carries one row with no incoming edge, the sink one
/// column of One with no outgoing edge.
struct VertexMatrix {
  LatticePoint vertex;
  std::array<LatticeEdge, 2> in_edges{};
  std::array<LatticeEdge, 2> out_edges{};
  std::array<WeightTag, 2> col_tags{WeightTag::One, WeightTag::One};
  std::uint8_t in_degree = 0;
  std::uint8_t out_degree = 0;
  std::uint8_t row_count = 0;
  std::uint8_t col_count = 0;

  std::span<const LatticeEdge> incoming() const {
    return {in_edges.data(), in_degree};
  }
  std::span<const LatticeEdge> outgoing() const {
    return {out_edges.data(), out_degree};
  }
  WeightTag entry(std::size_t /*row*/, std::size_t col) const {
    return col_tags[col];
  }
};

using StackDecomposition = std::vector<std::vector<LatticePoint>>;

/// The pair (P, Q) = (lower, upper) of monotone paths with common endpoint
/// (m, r), P never above Q. Immutable once built.
class LatticeRegion {
 public:
  /// validate_region: throws LengthMismatch, EndpointMismatch or
  /// LowerAboveUpper(first offending prefix index).
  LatticeRegion(MonotonePath lower, MonotonePath upper);

  static LatticeRegion parse(std::string_view lower, std::string_view upper);

  const MonotonePath& lower() const noexcept { return lower_; }
  const MonotonePath& upper() const noexcept { return upper_; }
  int m() const noexcept { return lower_.east_count(); }
  int r() const noexcept { return lower_.north_count(); }
  int n() const noexcept { return static_cast<int>(lower_.length()); }

  /// "lower|upper"
  std::string key() const;

  /// upper.northPrefix[i] - lower.northPrefix[i]
  int band_width(std::size_t i) const {
    return upper_.north_prefix(i) - lower_.north_prefix(i);
  }

  bool contains(LatticePoint p) const;

  bool has_up_edge(LatticePoint p) const;
  bool has_right_edge(LatticePoint p) const;
  bool has_edge(const LatticeEdge& e) const;
  /// Edges lying on at least one full path, sorted.
  std::vector<LatticeEdge> edges() const;

  /// Tutte weighting: X on north steps of the upper path, Y on east steps of
  /// the lower path, One elsewhere.
  WeightTag tutte_tag(const LatticeEdge& e) const;

  std::size_t stack_count() const noexcept { return lower_.length() + 1; }
  std::size_t stack_size(std::size_t i) const {
    return static_cast<std::size_t>(band_width(i)) + 1;
  }
  /// j-th vertex of stack i, counted from the northwest end.
  LatticePoint stack_vertex(std::size_t i, std::size_t j) const {
    return {upper_.east_prefix(i) + static_cast<int>(j),
            upper_.north_prefix(i) - static_cast<int>(j)};
  }
  std::vector<LatticePoint> stack(std::size_t i) const;
  StackDecomposition stacks() const;

  VertexMatrix vertex_matrix(LatticePoint v) const;

  /// Region of the dual presentation: (swap(upper), swap(lower)).
  LatticeRegion transposed() const;

  bool operator==(const LatticeRegion& o) const {
    return lower_ == o.lower_ && upper_ == o.upper_;
  }

 private:
  enum Flag : std::uint8_t { kForward = 1, kBackward = 2 };

  std::size_t cell(LatticePoint p) const {
    return static_cast<std::size_t>(p.x) * static_cast<std::size_t>(r() + 1) +
           static_cast<std::size_t>(p.y);
  }
  bool on_full_path(LatticePoint p) const;

  MonotonePath lower_;
  MonotonePath upper_;
  std::vector<int> min_y_;  // lowest in-region y at each east coordinate
  std::vector<int> max_y_;  // highest in-region y at each east coordinate
  std::vector<std::uint8_t> reach_;
};

/// Total edge -> tag map over a region's edges.
class WeightedLattice {
 public:
  WeightedLattice(const LatticeRegion& region,
                  std::map<LatticeEdge, WeightTag> weights);

  const LatticeRegion& region() const noexcept { return region_; }
  const std::map<LatticeEdge, WeightTag>& weights() const noexcept {
    return weights_;
  }
  WeightTag weight(const LatticeEdge& e) const;

 private:
  LatticeRegion region_;
  std::map<LatticeEdge, WeightTag> weights_;
};

WeightedLattice tutte_weighting(const LatticeRegion& region);

/// Vertex matrix with column tags read from the weighted lattice's map.
VertexMatrix vertex_matrix(const WeightedLattice& weighted, LatticePoint v);

/// Two uniformly random monotone paths with a common endpoint (r uniform in
/// 0..n), combined by pointwise min/max of their north-prefix tables.
LatticeRegion random_region(int n, std::mt19937_64& rng);

/// The widest region with m = r = n / 2: lower E^m N^r, upper N^r E^m.
LatticeRegion widest_region(int n);

}  // namespace lpm
