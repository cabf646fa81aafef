#pragma once

#include <Eigen/Dense>

#include "gsp/frames.hpp"

namespace gsp {

/// Wavelet coefficients in scale-major layout: block j = values[jn..(j+1)n-1]
/// holds the scale-j coefficients of every vertex.
struct WaveletCoeffs {
  Eigen::VectorXd values;  // length n * (J+1)
  Eigen::Index n = 0;
  int max_scale = 0;  // J

  int num_scales() const { return max_scale + 1; }
  auto block(int j) const { return values.segment(static_cast<Eigen::Index>(j) * n, n); }
  auto block(int j) { return values.segment(static_cast<Eigen::Index>(j) * n, n); }
};

/// Forward transform through the explicit frame: values = frame.matrix * f.
WaveletCoeffs analysis(const Eigen::VectorXd& f, const TightFrame& frame);

/// Adjoint transform: frame.matrix^T * wc. For a tight frame this inverts
/// analysis exactly.
Eigen::VectorXd synthesis(const WaveletCoeffs& wc, const TightFrame& frame);
Eigen::VectorXd synthesis(const Eigen::VectorXd& coeffs, const TightFrame& frame);

/// Fast forward transform in the eigenbasis: one U^T f projection shared
/// across all J+1 scales, no frame matrix materialized.
WaveletCoeffs forward_sgwt(const Eigen::VectorXd& f, const EigenSystem& es,
                           double b);

/// Fast inverse, the adjoint of forward_sgwt.
Eigen::VectorXd inverse_sgwt(const WaveletCoeffs& wc, const EigenSystem& es,
                             double b);

}  // namespace gsp
