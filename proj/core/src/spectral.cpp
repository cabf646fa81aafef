#include "gsp/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "gsp/errors.hpp"

namespace gsp {

namespace {

// Deterministic sign convention: largest-magnitude component positive,
// ties broken by lowest index.
void fix_eigenvector_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Eigen::Index lead = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double mag = std::abs(vectors(r, c));
      if (mag > best) {
        best = mag;
        lead = r;
      }
    }
    if (vectors(lead, c) < 0.0) {
      vectors.col(c) = -vectors.col(c);
    }
  }
}

}  // namespace

EigenSystem eigensort(const SparseMatrixd& matrix, Eigen::Index max_size) {
  if (matrix.rows() != matrix.cols()) {
    throw ValidationError("eigensort needs a square matrix, got " +
                          std::to_string(matrix.rows()) + " x " +
                          std::to_string(matrix.cols()));
  }
  if (matrix.rows() > max_size) {
    throw ValidationError("dense eigendecomposition too large: n = " +
                          std::to_string(matrix.rows()) + " exceeds the cap " +
                          std::to_string(max_size));
  }
  Eigen::MatrixXd dense(matrix);
  for (Eigen::Index j = 0; j < dense.cols(); ++j) {
    for (Eigen::Index i = 0; i < dense.rows(); ++i) {
      if (!std::isfinite(dense(i, j))) {
        throw ValidationError("non-finite entry at (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
      }
      if (dense(i, j) != dense(j, i)) {
        throw ValidationError("matrix asymmetric at (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("symmetric eigendecomposition did not converge");
  }
  EigenSystem es;
  es.evalues = solver.eigenvalues();  // ascending
  es.evectors = solver.eigenvectors();
  fix_eigenvector_signs(es.evectors);
  es.lmax = es.evalues[es.evalues.size() - 1];
  return es;
}

}  // namespace gsp
