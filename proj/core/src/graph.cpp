#include "gsp/graph.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace gsp {

namespace {

std::string entry_str(Eigen::Index i, Eigen::Index j, double v) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ") = " << v;
  return os.str();
}

}  // namespace

void validate_graph(const SparseGraph& g) {
  const auto& w = g.weights;
  if (w.rows() != w.cols()) {
    throw ValidationError("weight matrix is not square: " +
                          std::to_string(w.rows()) + " x " +
                          std::to_string(w.cols()));
  }
  if (g.dims.num_rows != w.rows() || g.dims.num_cols != w.cols()) {
    throw ValidationError("dims disagree with the weight matrix: dims say " +
                          std::to_string(g.dims.num_rows) + " x " +
                          std::to_string(g.dims.num_cols) + ", matrix is " +
                          std::to_string(w.rows()) + " x " +
                          std::to_string(w.cols()));
  }
  for (int k = 0; k < w.outerSize(); ++k) {
    for (SparseMatrixd::InnerIterator it(w, k); it; ++it) {
      const double v = it.value();
      if (!std::isfinite(v)) {
        throw ValidationError("non-finite weight at " +
                              entry_str(it.row(), it.col(), v));
      }
      if (it.row() == it.col() && v != 0.0) {
        throw ValidationError("self-loop at " +
                              entry_str(it.row(), it.col(), v));
      }
      if (v < 0.0) {
        throw ValidationError("negative weight at " +
                              entry_str(it.row(), it.col(), v));
      }
      const double mirrored = w.coeff(it.col(), it.row());
      if (mirrored != v) {
        throw ValidationError("weight matrix asymmetric at " +
                              entry_str(it.row(), it.col(), v) + " vs (" +
                              std::to_string(it.col()) + ", " +
                              std::to_string(it.row()) + ") = " +
                              std::to_string(mirrored));
      }
    }
  }
  if (g.coords && g.coords->rows() != w.rows()) {
    throw ValidationError("coordinate table has " +
                          std::to_string(g.coords->rows()) + " rows for " +
                          std::to_string(w.rows()) + " vertices");
  }
}

SparseGraph make_sparse_graph(SparseMatrixd weights,
                              std::optional<Eigen::MatrixX2d> coords,
                              std::string info) {
  GraphDims dims{weights.rows(), weights.cols(), weights.nonZeros()};
  return make_sparse_graph(std::move(weights), std::move(coords), dims,
                           std::move(info));
}

SparseGraph make_sparse_graph(SparseMatrixd weights,
                              std::optional<Eigen::MatrixX2d> coords,
                              GraphDims dims, std::string info) {
  weights.makeCompressed();
  SparseGraph g{std::move(weights), std::move(coords), dims, std::move(info)};
  validate_graph(g);
  return g;
}

Eigen::VectorXd degrees(const SparseGraph& g) {
  validate_graph(g);
  Eigen::VectorXd deg = Eigen::VectorXd::Zero(g.size());
  for (int k = 0; k < g.weights.outerSize(); ++k) {
    for (SparseMatrixd::InnerIterator it(g.weights, k); it; ++it) {
      deg[it.row()] += it.value();
    }
  }
  return deg;
}

SparseMatrixd laplacian_mat(const SparseGraph& g) {
  const Eigen::VectorXd deg = degrees(g);  // validates
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(g.weights.nonZeros() + g.size());
  for (int k = 0; k < g.weights.outerSize(); ++k) {
    for (SparseMatrixd::InnerIterator it(g.weights, k); it; ++it) {
      triplets.emplace_back(it.row(), it.col(), -it.value());
    }
  }
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    triplets.emplace_back(i, i, deg[i]);
  }
  SparseMatrixd lap(g.size(), g.size());
  lap.setFromTriplets(triplets.begin(), triplets.end());
  lap.makeCompressed();
  return lap;
}

}  // namespace gsp
