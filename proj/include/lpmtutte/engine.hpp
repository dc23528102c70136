// Stack-by-stack sweep of a lattice region. The running row vector T is
// multiplied by each stack's block-diagonal matrix one vertex block at a
// time; the direct sum is never formed.
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

#include "lpmtutte/bivariate_poly.hpp"
#include "lpmtutte/lattice.hpp"
#include "lpmtutte/rings.hpp"

namespace lpm {

/// T after a stack has been applied, together with the segment lengths that
/// align it with the incoming edges of the next stack's vertices (empty after
/// the sink stack).
template <class V>
struct SweepState {
  std::vector<V> values;
  std::vector<std::size_t> partition;
};

namespace detail {

inline void stack_blocks(const LatticeRegion& region, std::size_t i,
                         std::vector<VertexMatrix>& out) {
  out.clear();
  const std::size_t width = region.stack_size(i);
  for (std::size_t j = 0; j < width; ++j)
    out.push_back(region.vertex_matrix(region.stack_vertex(i, j)));
}

inline void partition_of(const std::vector<VertexMatrix>& blocks,
                         std::vector<std::size_t>& out) {
  out.clear();
  for (const auto& b : blocks) out.push_back(b.row_count);
}

}  // namespace detail

struct NoObserver {
  template <class State>
  void operator()(std::size_t, const State&) const noexcept {}
};

/// Value of the Tutte-weighted lattice of `region` in `ring`. `observe` is
/// called as observe(stack_index, const SweepState<V>&) after every stack.
template <Ring R, class Observer = NoObserver>
typename R::value_type sweep(const LatticeRegion& region, R& ring, Observer&& observe = {}) {
  using V = typename R::value_type;
  const std::array<V, 3> weight{ring.from_weight(WeightTag::X),
                                ring.from_weight(WeightTag::Y),
                                ring.from_weight(WeightTag::One)};

  SweepState<V> state;
  state.values.push_back(ring.one());
  std::vector<V> next;
  std::vector<VertexMatrix> blocks, next_blocks;
  detail::stack_blocks(region, 0, blocks);
  detail::partition_of(blocks, state.partition);

  for (std::size_t i = 0; i < region.stack_count(); ++i) {
    std::size_t rows = 0;
    for (std::size_t len : state.partition) rows += len;
    if (rows != state.values.size())
      throw std::logic_error("sweep: stack " + std::to_string(i) + " expects " +
                             std::to_string(rows) + " entries, T has " +
                             std::to_string(state.values.size()));

    next.clear();
    std::size_t cursor = 0;
    for (const VertexMatrix& block : blocks) {
      for (std::size_t c = 0; c < block.col_count; ++c) {
        if (block.row_count == 0) {
          next.push_back(ring.zero());
          continue;
        }
        const V& w = weight[static_cast<std::size_t>(block.entry(0, c))];
        V acc = ring.mul(state.values[cursor], w);
        for (std::size_t r = 1; r < block.row_count; ++r)
          acc = ring.add(acc, ring.mul(state.values[cursor + r],
                                       weight[static_cast<std::size_t>(block.entry(r, c))]));
        next.push_back(std::move(acc));
      }
      cursor += block.row_count;
    }
    state.values.swap(next);

    if (i + 1 < region.stack_count()) {
      detail::stack_blocks(region, i + 1, next_blocks);
      detail::partition_of(next_blocks, state.partition);
      blocks.swap(next_blocks);
    } else {
      state.partition.clear();
    }
    observe(i, std::as_const(state));
  }

  if (state.values.size() != 1)
    throw std::logic_error("sweep: final vector has length " +
                           std::to_string(state.values.size()));
  return std::move(state.values.front());
}

/// The Tutte polynomial of the lattice path matroid M[lower, upper].
BivariatePoly tutte_polynomial(const LatticeRegion& region);

/// T(x0, y0), computed directly over the rationals.
Rational tutte_eval(const LatticeRegion& region, const Rational& x0, const Rational& y0);

/// Number of bases, i.e. T(1, 1) (the number of full paths).
BigInt count_bases(const LatticeRegion& region);

}  // namespace lpm
