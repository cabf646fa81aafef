#pragma once

#include <Eigen/Dense>

#include "gsp/graph.hpp"

namespace gsp {

/// Full symmetric eigendecomposition, eigenvalues ascending. Column i of
/// `evectors` pairs with `evalues[i]`; eigenvector signs are fixed so the
/// largest-magnitude component of each column is positive (ties broken by
/// lowest index).
struct EigenSystem {
  Eigen::VectorXd evalues;
  Eigen::MatrixXd evectors;
  double lmax = 0.0;  // == evalues[n-1]

  Eigen::Index size() const { return evalues.size(); }
};

inline constexpr Eigen::Index kDefaultEigensortCap = 4096;

/// Dense symmetric eigendecomposition of a (sparse) symmetric matrix.
/// Refuses matrices larger than `max_size` instead of silently densifying
/// something huge.
EigenSystem eigensort(const SparseMatrixd& matrix,
                      Eigen::Index max_size = kDefaultEigensortCap);

}  // namespace gsp
