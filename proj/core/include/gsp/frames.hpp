#pragma once

#include <Eigen/Dense>

#include "gsp/spectral.hpp"

namespace gsp {

/// Base window for the filter partition. Equal to 1 on [0, 1/b], 0 on
/// [1, inf), raised-cosine in between; continuous and non-increasing.
double omega(double x, double b);

/// Largest scale index J for a spectrum reaching lmax:
/// J = floor(log(lmax)/log(b)) + 2, with the integer part decided by
/// comparing powers of b to lmax at relative tolerance 1e-12 so exact
/// powers of b land on the same J on every platform.
int scale_count(double lmax, double b);

/// The filters psi_0..psi_J forming a partition of unity on [0, lmax]:
/// psi_0(x) = omega(x), psi_j(x) = omega(b^-j x) - omega(b^-j+1 x).
class FilterBank {
 public:
  FilterBank(double lmax, double b);

  double b() const { return b_; }
  double lmax() const { return lmax_; }
  int max_scale() const { return max_scale_; }     // J
  int num_filters() const { return max_scale_ + 1; }

  /// psi_j evaluated at x; x is clamped to [0, lmax] first so eigenvalue
  /// jitter just past the spectrum edge keeps the partition identity.
  double psi(int j, double x) const;

 private:
  double lmax_;
  double b_;
  int max_scale_;
};

struct FilterCurves {
  Eigen::VectorXd x;       // num_samples points, uniform on [0, lmax]
  Eigen::MatrixXd values;  // num_samples x (J+1), column j = psi_j(x)
};

FilterCurves filter_curves(const FilterBank& bank, int num_samples);

/// Stacked frame matrix of shape n(J+1) x n. Row block j (rows jn..(j+1)n-1)
/// is sqrt(psi_j)(L) = U diag(sqrt(psi_j(lambda))) U^T.
struct TightFrame {
  Eigen::MatrixXd matrix;
  double b = 0.0;
  int max_scale = 0;  // J

  Eigen::Index signal_size() const { return matrix.cols(); }
  int num_filters() const { return max_scale + 1; }
  auto block(int j) const {
    return matrix.middleRows(static_cast<Eigen::Index>(j) * matrix.cols(),
                             matrix.cols());
  }
};

TightFrame tight_frame(const EigenSystem& es, double b);

}  // namespace gsp
