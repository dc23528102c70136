// Determinantal circuits at test scale: the explicit minor matrix sDet(M),
// the trace and determinant evaluations of a closed circuit, and the
// circuit obtained from a weighted lattice by taking direct sums of vertex
// matrices along each stack.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lpmtutte/bivariate_poly.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/lattice.hpp"

namespace lpm {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
      : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols)
      throw LpmError(ErrorKind::DimensionMismatch, "entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw LpmError(ErrorKind::DimensionMismatch,
                     std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                         std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using StackMatrix = Matrix<Rational>;

inline constexpr std::size_t kSDetGuard = 12;

/// sDet(M): rows and columns indexed by subsets in binary-counter order
/// (bit k of the index <=> row/column k + 1 is in the subset).
struct SDetMatrix {
  std::size_t base_rows = 0;
  std::size_t base_cols = 0;
  Matrix<Rational> entries;

  const Rational& at(std::uint32_t row_subset, std::uint32_t col_subset) const {
    return entries(row_subset, col_subset);
  }
};

/// Exact determinant by rational Gaussian elimination.
Rational determinant(Matrix<Rational> m);

/// Minor on the given row and column subsets: 1 when both are empty,
/// 0 when their sizes differ.
Rational minor(const StackMatrix& m, std::uint32_t row_subset, std::uint32_t col_subset);

/// Throws DimensionTooLarge beyond kSDetGuard rows or columns.
SDetMatrix sdet(const StackMatrix& m);

/// Tr(prod sDet(S_i)). Throws EmptyCircuit, DimensionMismatch or
/// DimensionTooLarge.
Rational circuit_value_trace(std::span<const StackMatrix> stacks);

/// det(I + prod S_i). Throws EmptyCircuit or DimensionMismatch.
Rational circuit_value_det(std::span<const StackMatrix> stacks);

/// Product of the stacks after checking the circuit closes.
StackMatrix compose_circuit(std::span<const StackMatrix> stacks);

/// Direct sum of the vertex matrices of every stack, NW to SE, with entries
/// from `weight_of(out_edge)` and the sink column set to `one`.
template <class T, class WeightFn>
std::vector<Matrix<T>> stack_matrices(const LatticeRegion& region, WeightFn&& weight_of,
                                      const T& one) {
  std::vector<Matrix<T>> out;
  out.reserve(region.stack_count());
  for (std::size_t i = 0; i < region.stack_count(); ++i) {
    std::vector<VertexMatrix> blocks;
    std::size_t rows = 0, cols = 0;
    for (const LatticePoint& v : region.stack(i)) {
      blocks.push_back(region.vertex_matrix(v));
      rows += blocks.back().row_count;
      cols += blocks.back().col_count;
    }
    Matrix<T> s(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const VertexMatrix& b : blocks) {
      for (std::size_t c = 0; c < b.col_count; ++c) {
        const T w = c < b.out_degree ? T(weight_of(b.out_edges[c])) : one;
        for (std::size_t r = 0; r < b.row_count; ++r) s(r0 + r, c0 + c) = w;
      }
      r0 += b.row_count;
      c0 += b.col_count;
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Circuit of the weighted lattice with X = x0, Y = y0.
std::vector<StackMatrix> lattice_to_circuit(const WeightedLattice& weighted, const Rational& x0,
                                            const Rational& y0);

/// Circuit of a lattice with arbitrary rational edge weights.
std::vector<StackMatrix> lattice_to_circuit(
    const LatticeRegion& region, const std::function<Rational(const LatticeEdge&)>& weight_of);

}  // namespace lpm
