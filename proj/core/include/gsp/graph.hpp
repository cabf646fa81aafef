#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <optional>
#include <string>

#include "gsp/errors.hpp"

namespace gsp {

using SparseMatrixd = Eigen::SparseMatrix<double>;

struct GraphDims {
  Eigen::Index num_rows = 0;
  Eigen::Index num_cols = 0;
  /// Stored structural nonzeros as reported by the source (for symmetric
  /// storage this counts each mirrored pair once).
  Eigen::Index num_nonzeros = 0;

  bool operator==(const GraphDims&) const = default;
};

/// Undirected weighted graph: symmetric non-negative weights, zero
/// diagonal, optional planar vertex coordinates and provenance text.
struct SparseGraph {
  SparseMatrixd weights;                   // n x n, full symmetric storage
  std::optional<Eigen::MatrixX2d> coords;  // one (x, y) row per vertex
  GraphDims dims;
  std::string info;

  Eigen::Index size() const { return weights.rows(); }
};

/// Checks the SparseGraph invariants; throws ValidationError naming the
/// first offending entry.
void validate_graph(const SparseGraph& g);

/// Builds a validated graph. The first overload derives dims from the
/// weight matrix (num_nonzeros = stored entry count).
SparseGraph make_sparse_graph(SparseMatrixd weights,
                              std::optional<Eigen::MatrixX2d> coords = std::nullopt,
                              std::string info = {});
SparseGraph make_sparse_graph(SparseMatrixd weights,
                              std::optional<Eigen::MatrixX2d> coords,
                              GraphDims dims, std::string info);

/// Row sums of the weight matrix.
Eigen::VectorXd degrees(const SparseGraph& g);

/// Unnormalized Laplacian L = D - W with D_ii the degree of vertex i.
SparseMatrixd laplacian_mat(const SparseGraph& g);

}  // namespace gsp
