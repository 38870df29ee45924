#pragma once

// Exact Gaussian elimination: rank, right kernels and minimal circuits.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "halfint/rational.hpp"

namespace halfint {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination with full normalization after every pivot.
/// Pivot rows are chosen as the first row with a nonzero entry in the
/// current column, so the result is deterministic.
inline Echelon row_reduce(RatMatrix m) {
  Echelon out;
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && m(p, c).is_zero()) ++p;
    if (p == n_rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < n_cols; ++k) std::swap(m(p, k), m(r, k));
    }
    const Rational inv = m(r, c).inverse();
    for (std::size_t k = c; k < n_cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      for (std::size_t k = c; k < n_cols; ++k) {
        if (!m(r, k).is_zero()) m(i, k).sub_mul(factor, m(r, k));
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

/// Dimension of the row span.
inline std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return row_reduce(m).pivot_cols.size();
}

inline std::size_t rank(std::span<const RatPoint> vectors) {
  if (vectors.empty()) return 0;
  return rank(RatMatrix(std::vector<RatPoint>(vectors.begin(), vectors.end())));
}

namespace detail {

/// Matrix whose k-th column is generators[k].
inline RatMatrix columns_of(std::span<const RatPoint> generators) {
  const std::size_t dim = generators.front().dim();
  RatMatrix m(dim, generators.size());
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].dim() != dim) throw UsageError("generators of different dimension");
    for (std::size_t i = 0; i < dim; ++i) m(i, k) = generators[k][i];
  }
  return m;
}

/// Kernel vector attached to a free column of an RREF matrix.
inline RatPoint free_column_kernel_vector(const Echelon& e, std::size_t free_col) {
  RatPoint x(e.reduced.cols());
  x[free_col] = 1;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    x[e.pivot_cols[r]] = -e.reduced(r, free_col);
  }
  return x;
}

}  // namespace detail

/// Basis of { x : sum_k x_k generators[k] = 0 }, one vector per non-pivot
/// column in increasing column order. Empty iff the generators are
/// independent.
inline std::vector<RatPoint> kernel_basis(std::span<const RatPoint> generators) {
  std::vector<RatPoint> basis;
  if (generators.empty()) return basis;
  const Echelon e = row_reduce(detail::columns_of(generators));
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < generators.size(); ++c) {
    if (next_pivot < e.pivot_cols.size() && e.pivot_cols[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    basis.push_back(detail::free_column_kernel_vector(e, c));
  }
  return basis;
}

/// Kernel of the matrix whose columns are the rows of m.
inline std::vector<RatPoint> kernel_basis(const RatMatrix& m) { return kernel_basis(m.row_list()); }

/// An inclusion-minimal dependent subset with its dependence coefficients.
struct Circuit {
  std::vector<std::size_t> indices;   // increasing
  std::vector<Rational> coefficients; // aligned with indices, first is +1
};

/// Minimal linearly dependent subset of `generators`, or nullopt when they
/// are independent.
///
/// The circuit is the fundamental circuit of the first generator that lies
/// in the span of its predecessors: it is written in the basis formed by
/// the earlier pivot generators, which makes the support minimal. The
/// coefficients are scaled so the lowest-index coefficient is +1.
inline std::optional<Circuit> minimal_circuit(std::span<const RatPoint> generators) {
  if (generators.empty()) return std::nullopt;
  const Echelon e = row_reduce(detail::columns_of(generators));
  std::size_t free_col = generators.size();
  for (std::size_t c = 0; c < generators.size(); ++c) {
    if (c >= e.pivot_cols.size() || e.pivot_cols[c] != c) {
      free_col = c;
      break;
    }
  }
  if (free_col == generators.size()) return std::nullopt;

  const RatPoint x = detail::free_column_kernel_vector(e, free_col);
  Circuit circuit;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (x[k].is_zero()) continue;
    circuit.indices.push_back(k);
    circuit.coefficients.push_back(x[k]);
  }
  const Rational scale = circuit.coefficients.front().inverse();
  for (auto& c : circuit.coefficients) c *= scale;
  return circuit;
}

}  // namespace halfint
