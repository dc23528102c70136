#include "lpmtutte/lattice.hpp"

#include <algorithm>
#include <cctype>

#include "lpmtutte/error.hpp"

namespace lpm {

MonotonePath MonotonePath::parse(std::string_view text) {
  if (text.empty()) throw LpmError(ErrorKind::EmptyPath, "path has no steps");
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (std::toupper(static_cast<unsigned char>(text[i]))) {
      case 'N': steps.push_back(Step::North); break;
      case 'E': steps.push_back(Step::East); break;
      default:
        throw LpmError(ErrorKind::IllegalCharacter,
                       "unexpected '" + std::string(1, text[i]) + "'", i + 1);
    }
  }
  return MonotonePath(std::move(steps));
}

MonotonePath::MonotonePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw LpmError(ErrorKind::EmptyPath, "path has no steps");
  north_prefix_.resize(steps_.size() + 1);
  north_prefix_[0] = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i)
    north_prefix_[i + 1] = north_prefix_[i] + (steps_[i] == Step::North ? 1 : 0);
}

MonotonePath MonotonePath::swapped() const {
  std::vector<Step> out(steps_.size());
  std::transform(steps_.begin(), steps_.end(), out.begin(), [](Step s) {
    return s == Step::North ? Step::East : Step::North;
  });
  return MonotonePath(std::move(out));
}

std::string MonotonePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::North ? 'N' : 'E');
  return out;
}

const char* to_string(WeightTag tag) {
  switch (tag) {
    case WeightTag::X: return "x";
    case WeightTag::Y: return "y";
    case WeightTag::One: return "1";
  }
  return "?";
}

LatticeRegion::LatticeRegion(MonotonePath lower, MonotonePath upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.length() != upper_.length())
    throw LpmError(ErrorKind::LengthMismatch,
                   std::to_string(lower_.length()) + " vs " +
                       std::to_string(upper_.length()));
  if (lower_.north_count() != upper_.north_count())
    throw LpmError(ErrorKind::EndpointMismatch,
                   "north counts " + std::to_string(lower_.north_count()) +
                       " vs " + std::to_string(upper_.north_count()));
  for (std::size_t i = 0; i <= lower_.length(); ++i)
    if (lower_.north_prefix(i) > upper_.north_prefix(i))
      throw LpmError(ErrorKind::LowerAboveUpper,
                     "lower path is above upper path after " +
                         std::to_string(i) + " steps",
                     i);

  const int mm = m();
  const int rr = r();
  min_y_.assign(static_cast<std::size_t>(mm) + 1, rr);
  max_y_.assign(static_cast<std::size_t>(mm) + 1, 0);
  for (std::size_t i = 0; i <= lower_.length(); ++i) {
    auto lx = static_cast<std::size_t>(lower_.east_prefix(i));
    min_y_[lx] = std::min(min_y_[lx], lower_.north_prefix(i));
    auto ux = static_cast<std::size_t>(upper_.east_prefix(i));
    max_y_[ux] = std::max(max_y_[ux], upper_.north_prefix(i));
  }

  // Forward reachability from the source, then backward from the sink.
  reach_.assign(static_cast<std::size_t>(mm + 1) * static_cast<std::size_t>(rr + 1), 0);
  for (int x = 0; x <= mm; ++x) {
    for (int y = min_y_[x]; y <= max_y_[x]; ++y) {
      LatticePoint p{x, y};
      bool fwd = (x == 0 && y == 0) ||
                 (x > 0 && contains({x - 1, y}) && (reach_[cell({x - 1, y})] & kForward)) ||
                 (y > 0 && contains({x, y - 1}) && (reach_[cell({x, y - 1})] & kForward));
      if (fwd) reach_[cell(p)] |= kForward;
    }
  }
  for (int x = mm; x >= 0; --x) {
    for (int y = max_y_[x]; y >= min_y_[x]; --y) {
      LatticePoint p{x, y};
      bool bwd = (x == mm && y == rr) ||
                 (x < mm && contains({x + 1, y}) && (reach_[cell({x + 1, y})] & kBackward)) ||
                 (y < rr && contains({x, y + 1}) && (reach_[cell({x, y + 1})] & kBackward));
      if (bwd) reach_[cell(p)] |= kBackward;
    }
  }
}

LatticeRegion LatticeRegion::parse(std::string_view lower, std::string_view upper) {
  return LatticeRegion(MonotonePath::parse(lower), MonotonePath::parse(upper));
}

std::string LatticeRegion::key() const {
  return lower_.to_string() + "|" + upper_.to_string();
}

bool LatticeRegion::contains(LatticePoint p) const {
  if (p.x < 0 || p.y < 0 || p.x > m() || p.y > r()) return false;
  auto x = static_cast<std::size_t>(p.x);
  return min_y_[x] <= p.y && p.y <= max_y_[x];
}

bool LatticeRegion::on_full_path(LatticePoint p) const {
  return contains(p) && reach_[cell(p)] == (kForward | kBackward);
}

bool LatticeRegion::has_up_edge(LatticePoint p) const {
  return on_full_path(p) && on_full_path({p.x, p.y + 1});
}

bool LatticeRegion::has_right_edge(LatticePoint p) const {
  return on_full_path(p) && on_full_path({p.x + 1, p.y});
}

bool LatticeRegion::has_edge(const LatticeEdge& e) const {
  if (e.to == LatticePoint{e.from.x, e.from.y + 1}) return has_up_edge(e.from);
  if (e.to == LatticePoint{e.from.x + 1, e.from.y}) return has_right_edge(e.from);
  return false;
}

std::vector<LatticeEdge> LatticeRegion::edges() const {
  std::vector<LatticeEdge> out;
  for (int x = 0; x <= m(); ++x) {
    for (int y = min_y_[x]; y <= max_y_[x]; ++y) {
      if (has_up_edge({x, y})) out.push_back(LatticeEdge::up_from({x, y}));
      if (has_right_edge({x, y})) out.push_back(LatticeEdge::right_from({x, y}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightTag LatticeRegion::tutte_tag(const LatticeEdge& e) const {
  auto i = static_cast<std::size_t>(e.from.x + e.from.y);
  if (i >= lower_.length()) return WeightTag::One;
  if (e.orientation() == Orientation::Vertical) {
    if (upper_.step(i) == Step::North && upper_.east_prefix(i) == e.from.x)
      return WeightTag::X;
  } else {
    if (lower_.step(i) == Step::East && lower_.east_prefix(i) == e.from.x)
      return WeightTag::Y;
  }
  return WeightTag::One;
}

std::vector<LatticePoint> LatticeRegion::stack(std::size_t i) const {
  std::vector<LatticePoint> out;
  out.reserve(stack_size(i));
  for (std::size_t j = 0; j < stack_size(i); ++j) out.push_back(stack_vertex(i, j));
  return out;
}

StackDecomposition LatticeRegion::stacks() const {
  StackDecomposition out;
  out.reserve(stack_count());
  for (std::size_t i = 0; i < stack_count(); ++i) out.push_back(stack(i));
  return out;
}

VertexMatrix LatticeRegion::vertex_matrix(LatticePoint v) const {
  VertexMatrix vm;
  vm.vertex = v;
  if (v.x > 0 && has_right_edge({v.x - 1, v.y}))
    vm.in_edges[vm.in_degree++] = LatticeEdge::right_from({v.x - 1, v.y});
  if (v.y > 0 && has_up_edge({v.x, v.y - 1}))
    vm.in_edges[vm.in_degree++] = LatticeEdge::up_from({v.x, v.y - 1});
  if (has_up_edge(v)) {
    vm.out_edges[vm.out_degree] = LatticeEdge::up_from(v);
    vm.col_tags[vm.out_degree] = tutte_tag(vm.out_edges[vm.out_degree]);
    ++vm.out_degree;
  }
  if (has_right_edge(v)) {
    vm.out_edges[vm.out_degree] = LatticeEdge::right_from(v);
    vm.col_tags[vm.out_degree] = tutte_tag(vm.out_edges[vm.out_degree]);
    ++vm.out_degree;
  }
  const bool source = v == LatticePoint{0, 0};
  const bool sink = v == LatticePoint{m(), r()};
  vm.row_count = source ? 1 : vm.in_degree;
  vm.col_count = sink ? 1 : vm.out_degree;
  if (sink) vm.col_tags = {WeightTag::One, WeightTag::One};
  return vm;
}

LatticeRegion LatticeRegion::transposed() const {
  return LatticeRegion(upper_.swapped(), lower_.swapped());
}

WeightedLattice::WeightedLattice(const LatticeRegion& region,
                                 std::map<LatticeEdge, WeightTag> weights)
    : region_(region), weights_(std::move(weights)) {}

WeightTag WeightedLattice::weight(const LatticeEdge& e) const {
  return weights_.at(e);
}

WeightedLattice tutte_weighting(const LatticeRegion& region) {
  std::map<LatticeEdge, WeightTag> weights;
  for (const LatticeEdge& e : region.edges()) weights.emplace(e, region.tutte_tag(e));
  return WeightedLattice(region, std::move(weights));
}

VertexMatrix vertex_matrix(const WeightedLattice& weighted, LatticePoint v) {
  VertexMatrix vm = weighted.region().vertex_matrix(v);
  for (std::size_t c = 0; c < vm.out_degree; ++c)
    vm.col_tags[c] = weighted.weight(vm.out_edges[c]);
  return vm;
}

namespace {

std::vector<int> random_north_prefix(int n, int r, std::mt19937_64& rng) {
  std::vector<Step> steps(static_cast<std::size_t>(n), Step::East);
  std::fill_n(steps.begin(), r, Step::North);
  std::shuffle(steps.begin(), steps.end(), rng);
  std::vector<int> prefix(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i)
    prefix[i + 1] = prefix[i] + (steps[i] == Step::North ? 1 : 0);
  return prefix;
}

MonotonePath from_prefix(const std::vector<int>& prefix) {
  std::vector<Step> steps(prefix.size() - 1);
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
    steps[i] = prefix[i + 1] > prefix[i] ? Step::North : Step::East;
  return MonotonePath(std::move(steps));
}

}  // namespace

LatticeRegion random_region(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_r(0, n);
  const int r = pick_r(rng);
  auto a = random_north_prefix(n, r, rng);
  auto b = random_north_prefix(n, r, rng);
  std::vector<int> lo(a.size()), hi(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    lo[i] = std::min(a[i], b[i]);
    hi[i] = std::max(a[i], b[i]);
  }
  return LatticeRegion(from_prefix(lo), from_prefix(hi));
}

LatticeRegion widest_region(int n) {
  const int m = n / 2;
  const int r = n - m;
  std::vector<Step> lower, upper;
  lower.insert(lower.end(), static_cast<std::size_t>(m), Step::East);
  lower.insert(lower.end(), static_cast<std::size_t>(r), Step::North);
  upper.insert(upper.end(), static_cast<std::size_t>(r), Step::North);
  upper.insert(upper.end(), static_cast<std::size_t>(m), Step::East);
  return LatticeRegion(MonotonePath(std::move(lower)), MonotonePath(std::move(upper)));
}

}  // namespace lpm
