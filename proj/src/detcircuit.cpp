#include "lpmtutte/detcircuit.hpp"

#include <bit>
#include <string>

namespace lpm {

Rational determinant(Matrix<Rational> m) {
  if (m.rows() != m.cols())
    throw LpmError(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  det.canonicalize();
  return det;
}

Rational minor(const StackMatrix& m, std::uint32_t row_subset, std::uint32_t col_subset) {
  const int k = std::popcount(row_subset);
  if (k != std::popcount(col_subset)) return 0;
  if (k == 0) return 1;
  Matrix<Rational> sub(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  std::size_t si = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!((row_subset >> i) & 1u)) continue;
    std::size_t sj = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!((col_subset >> j) & 1u)) continue;
      sub(si, sj++) = m(i, j);
    }
    ++si;
  }
  return determinant(std::move(sub));
}

SDetMatrix sdet(const StackMatrix& m) {
  if (m.rows() > kSDetGuard || m.cols() > kSDetGuard)
    throw LpmError(ErrorKind::DimensionTooLarge,
                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       " exceeds the sDet guard of " + std::to_string(kSDetGuard));
  const std::uint32_t rows = std::uint32_t{1} << m.rows();
  const std::uint32_t cols = std::uint32_t{1} << m.cols();
  SDetMatrix out{m.rows(), m.cols(), Matrix<Rational>(rows, cols)};
  auto& t = out.entries;
  t(0, 0) = 1;
  // Laplace expansion along the first selected row; I without its lowest
  // bit is numerically smaller than I, so its minors are already filled in.
  for (std::uint32_t i = 1; i < rows; ++i) {
    const int k = std::popcount(i);
    const auto first = static_cast<std::size_t>(std::countr_zero(i));
    const std::uint32_t rest = i & (i - 1);
    for (std::uint32_t j = 1; j < cols; ++j) {
      if (std::popcount(j) != k) continue;
      Rational sum = 0;
      int rank = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!((j >> c) & 1u)) continue;
        if (m(first, c) != 0) {
          const Rational term = m(first, c) * t(rest, j & ~(std::uint32_t{1} << c));
          if (rank % 2 == 0)
            sum += term;
          else
            sum -= term;
        }
        ++rank;
      }
      t(i, j) = sum;
    }
  }
  return out;
}

namespace {

void check_closed(std::span<const StackMatrix> stacks) {
  if (stacks.empty()) throw LpmError(ErrorKind::EmptyCircuit, "a circuit needs at least one stack");
  for (std::size_t i = 0; i < stacks.size(); ++i) {
    const StackMatrix& here = stacks[i];
    const StackMatrix& next = stacks[(i + 1) % stacks.size()];
    if (here.cols() != next.rows())
      throw LpmError(ErrorKind::DimensionMismatch,
                     "stack " + std::to_string(i) + " has " + std::to_string(here.cols()) +
                         " columns but the next stack has " + std::to_string(next.rows()) +
                         " rows");
  }
}

}  // namespace

StackMatrix compose_circuit(std::span<const StackMatrix> stacks) {
  check_closed(stacks);
  StackMatrix product = stacks.front();
  for (std::size_t i = 1; i < stacks.size(); ++i) product = product * stacks[i];
  return product;
}

Rational circuit_value_trace(std::span<const StackMatrix> stacks) {
  check_closed(stacks);
  Matrix<Rational> product = sdet(stacks.front()).entries;
  for (std::size_t i = 1; i < stacks.size(); ++i) product = product * sdet(stacks[i]).entries;
  Rational trace = 0;
  for (std::size_t i = 0; i < product.rows(); ++i) trace += product(i, i);
  trace.canonicalize();
  return trace;
}

Rational circuit_value_det(std::span<const StackMatrix> stacks) {
  StackMatrix product = compose_circuit(stacks);
  for (std::size_t i = 0; i < product.rows(); ++i) product(i, i) += 1;
  return determinant(std::move(product));
}

std::vector<StackMatrix> lattice_to_circuit(const WeightedLattice& weighted, const Rational& x0,
                                            const Rational& y0) {
  auto value = [&](const LatticeEdge& e) -> Rational {
    switch (weighted.weight(e)) {
      case WeightTag::X: return x0;
      case WeightTag::Y: return y0;
      case WeightTag::One: break;
    }
    return 1;
  };
  return stack_matrices<Rational>(weighted.region(), value, Rational(1));
}

std::vector<StackMatrix> lattice_to_circuit(
    const LatticeRegion& region, const std::function<Rational(const LatticeEdge&)>& weight_of) {
  return stack_matrices<Rational>(region, weight_of, Rational(1));
}

}  // namespace lpm
