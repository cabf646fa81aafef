#include "gsp/frames.hpp"

#include <algorithm>
#include <cmath>

#include "gsp/errors.hpp"

namespace gsp {

double omega(double x, double b) {
  if (!(b > 1.0)) {
    throw ValidationError("scale parameter b must be > 1, got " +
                          std::to_string(b));
  }
  if (x < 0.0) {
    throw ValidationError("omega is defined on x >= 0, got " +
                          std::to_string(x));
  }
  if (b * x <= 1.0) return 1.0;
  if (x >= 1.0) return 0.0;
  return 0.5 * (1.0 + std::cos(M_PI * (b * x - 1.0) / (b - 1.0)));
}

int scale_count(double lmax, double b) {
  if (!(b > 1.0)) {
    throw ValidationError("scale parameter b must be > 1, got " +
                          std::to_string(b));
  }
  if (!(lmax > 0.0) || !std::isfinite(lmax)) {
    throw ValidationError("degenerate spectrum: lmax must be positive, got " +
                          std::to_string(lmax));
  }
  // Integer part of log_b(lmax), settled by comparing powers of b against
  // lmax at relative tolerance 1e-12 so lmax == b^k never straddles a J.
  const double rel = 1.0 + 1e-12;
  int k = static_cast<int>(std::floor(std::log(lmax) / std::log(b)));
  while (std::pow(b, k + 1) <= lmax * rel) ++k;
  while (std::pow(b, k) > lmax * rel) --k;
  return k + 2;
}

FilterBank::FilterBank(double lmax, double b)
    : lmax_(lmax), b_(b), max_scale_(scale_count(lmax, b)) {}

double FilterBank::psi(int j, double x) const {
  if (j < 0 || j > max_scale_) {
    throw ValidationError("scale index " + std::to_string(j) +
                          " outside [0, " + std::to_string(max_scale_) + "]");
  }
  x = std::clamp(x, 0.0, lmax_);
  if (j == 0) return omega(x, b_);
  return omega(std::pow(b_, -j) * x, b_) - omega(std::pow(b_, -j + 1) * x, b_);
}

FilterCurves filter_curves(const FilterBank& bank, int num_samples) {
  if (num_samples < 2) {
    throw ValidationError("filter_curves needs at least 2 samples, got " +
                          std::to_string(num_samples));
  }
  FilterCurves curves;
  curves.x.resize(num_samples);
  curves.values.resize(num_samples, bank.num_filters());
  for (int s = 0; s < num_samples; ++s) {
    const double x = bank.lmax() * s / (num_samples - 1);
    curves.x[s] = x;
    for (int j = 0; j <= bank.max_scale(); ++j) {
      curves.values(s, j) = bank.psi(j, x);
    }
  }
  return curves;
}

TightFrame tight_frame(const EigenSystem& es, double b) {
  const Eigen::Index n = es.size();
  if (n == 0) {
    throw ValidationError("empty eigensystem");
  }
  if (!(es.lmax > 0.0)) {
    throw ValidationError("degenerate spectrum: lmax = " +
                          std::to_string(es.lmax));
  }
  FilterBank bank(es.lmax, b);

  TightFrame frame;
  frame.b = b;
  frame.max_scale = bank.max_scale();
  frame.matrix.resize(n * bank.num_filters(), n);
  Eigen::VectorXd scaled(n);
  for (int j = 0; j <= bank.max_scale(); ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      scaled[i] = std::sqrt(bank.psi(j, es.evalues[i]));
    }
    frame.matrix.middleRows(j * n, n) =
        es.evectors * scaled.asDiagonal() * es.evectors.transpose();
  }
  return frame;
}

}  // namespace gsp
