#include "gsp/denoise.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gsp/rng.hpp"

namespace gsp {

namespace {

// Shrinkage factor tau(x, t)/x in [0, 1]. t == 0 is the identity map;
// |x| <= t is killed (right-continuous at the boundary).
double shrink_factor(double x, double t, Beta beta) {
  if (t == 0.0) return 1.0;
  const double ax = std::abs(x);
  if (ax <= t) return 0.0;
  if (beta.is_hard()) return 1.0;
  return 1.0 - std::pow(t / ax, beta.value());
}

// A.e. derivative of the componentwise shrinkage, same conventions.
double shrink_derivative(double x, double t, Beta beta) {
  if (t == 0.0) return 1.0;
  const double ax = std::abs(x);
  if (ax <= t) return 0.0;
  if (beta.is_hard()) return 1.0;
  return 1.0 + (beta.value() - 1.0) * std::pow(t / ax, beta.value());
}

double component_threshold(double t, ThreshPolicy policy, double diag_wwt_i) {
  return policy == ThreshPolicy::Uniform ? t : t * std::sqrt(diag_wwt_i);
}

void check_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("sigma must be finite and > 0, got " +
                          std::to_string(sigma));
  }
}

void check_diag(const WaveletCoeffs& wc, const Eigen::VectorXd& diag_wwt) {
  if (diag_wwt.size() != wc.values.size()) {
    throw ValidationError("diag_wwt length " + std::to_string(diag_wwt.size()) +
                          " does not match coefficient length " +
                          std::to_string(wc.values.size()));
  }
}

}  // namespace

Beta::Beta(double value) : value_(value), hard_(false) {
  if (!std::isfinite(value) || value < 1.0) {
    throw ValidationError("beta must be >= 1 (use Beta::hard() for the "
                          "hard-threshold limit), got " +
                          std::to_string(value));
  }
}

Eigen::VectorXd betathresh(const Eigen::VectorXd& x, double t, Beta beta) {
  if (!(t >= 0.0)) {
    throw ValidationError("threshold must be >= 0, got " + std::to_string(t));
  }
  Eigen::VectorXd y(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    y[i] = x[i] * shrink_factor(x[i], t, beta);
  }
  return y;
}

Eigen::VectorXd apply_threshold(const WaveletCoeffs& wc, double t, Beta beta,
                                ThreshPolicy policy,
                                const Eigen::VectorXd& diag_wwt) {
  if (!(t >= 0.0)) {
    throw ValidationError("threshold must be >= 0, got " + std::to_string(t));
  }
  check_diag(wc, diag_wwt);
  Eigen::VectorXd y(wc.values.size());
  for (Eigen::Index i = 0; i < wc.values.size(); ++i) {
    const double ti = component_threshold(t, policy, diag_wwt[i]);
    y[i] = wc.values[i] * shrink_factor(wc.values[i], ti, beta);
  }
  return y;
}

double sure_value(const WaveletCoeffs& wc_noisy, double t, Beta beta,
                  double sigma, const Eigen::VectorXd& diag_wwt,
                  ThreshPolicy policy) {
  check_sigma(sigma);
  check_diag(wc_noisy, diag_wwt);
  if (!(t >= 0.0)) {
    throw ValidationError("threshold must be >= 0, got " + std::to_string(t));
  }
  const double n = static_cast<double>(wc_noisy.n);
  double residual = 0.0;
  double derivative_term = 0.0;
  for (Eigen::Index i = 0; i < wc_noisy.values.size(); ++i) {
    const double x = wc_noisy.values[i];
    const double ti = component_threshold(t, policy, diag_wwt[i]);
    const double h = x * shrink_factor(x, ti, beta);
    residual += (h - x) * (h - x);
    derivative_term += diag_wwt[i] * shrink_derivative(x, ti, beta);
  }
  return -n * sigma * sigma + residual +
         2.0 * sigma * sigma * derivative_term;
}

ThreshSweepResult sure_mse_thresh(const WaveletCoeffs& wc_noisy,
                                  const WaveletCoeffs& wc_clean,
                                  const Eigen::VectorXd& thresholds,
                                  const Eigen::VectorXd& diag_wwt, Beta beta,
                                  double sigma, ThreshPolicy policy,
                                  bool keepwc) {
  check_sigma(sigma);
  check_diag(wc_noisy, diag_wwt);
  if (wc_clean.values.size() != wc_noisy.values.size()) {
    throw ValidationError("clean coefficient length " +
                          std::to_string(wc_clean.values.size()) +
                          " does not match noisy length " +
                          std::to_string(wc_noisy.values.size()));
  }
  if (thresholds.size() == 0) {
    throw ValidationError("empty threshold grid");
  }
  for (Eigen::Index k = 0; k + 1 < thresholds.size(); ++k) {
    if (thresholds[k] > thresholds[k + 1]) {
      throw ValidationError("threshold grid not ascending at index " +
                            std::to_string(k + 1));
    }
  }
  if (!(thresholds[0] >= 0.0)) {
    throw ValidationError("thresholds must be >= 0");
  }

  const Eigen::Index num_t = thresholds.size();
  ThreshSweepResult result;
  result.thresholds = thresholds;
  result.mse.resize(num_t);
  result.sure.resize(num_t);
  if (keepwc) {
    result.kept_coeffs.emplace(wc_noisy.values.size(), num_t);
  }

  for (Eigen::Index k = 0; k < num_t; ++k) {
    const Eigen::VectorXd kept =
        apply_threshold(wc_noisy, thresholds[k], beta, policy, diag_wwt);
    result.mse[k] = (kept - wc_clean.values).squaredNorm();
    result.sure[k] =
        sure_value(wc_noisy, thresholds[k], beta, sigma, diag_wwt, policy);
    if (result.kept_coeffs) {
      result.kept_coeffs->col(k) = kept;
    }
  }

  // smallest-index tie break
  result.min_mse_idx = 0;
  result.min_sure_idx = 0;
  for (Eigen::Index k = 1; k < num_t; ++k) {
    if (result.mse[k] < result.mse[result.min_mse_idx]) result.min_mse_idx = k;
    if (result.sure[k] < result.sure[result.min_sure_idx]) result.min_sure_idx = k;
  }
  return result;
}

Eigen::VectorXd donoho_johnstone_grid(const WaveletCoeffs& wc) {
  Eigen::VectorXd grid = wc.values.cwiseAbs();
  std::sort(grid.begin(), grid.end());
  return grid;
}

Eigen::VectorXd diag_frame_gram(const TightFrame& frame) {
  return frame.matrix.rowwise().squaredNorm();
}

Eigen::VectorXd estimate_gamma_mc(const EigenSystem& es, double b, double sigma,
                                  int num_draws, std::uint64_t seed) {
  if (num_draws < 1) {
    throw ValidationError("num_draws must be >= 1, got " +
                          std::to_string(num_draws));
  }
  if (sigma < 0.0 || !std::isfinite(sigma)) {
    throw ValidationError("sigma must be finite and >= 0, got " +
                          std::to_string(sigma));
  }
  const Eigen::Index n = es.size();
  FilterBank bank(es.lmax, b);
  Eigen::VectorXd second_moment =
      Eigen::VectorXd::Zero(n * bank.num_filters());
  Rng rng(seed);
  Eigen::VectorXd noise(n);
  for (int m = 0; m < num_draws; ++m) {
    for (Eigen::Index i = 0; i < n; ++i) {
      noise[i] = sigma * rng.normal();
    }
    const WaveletCoeffs wc = forward_sgwt(noise, es, b);
    second_moment += wc.values.cwiseAbs2();
  }
  return second_moment / static_cast<double>(num_draws);
}

Eigen::VectorXd randsignal(double eta, int k, const SparseGraph& g,
                           std::uint64_t seed) {
  if (!(eta > 0.0) || eta > 1.0) {
    throw ValidationError("eta must lie in (0, 1], got " + std::to_string(eta));
  }
  if (k < 0) {
    throw ValidationError("diffusion power k must be >= 0, got " +
                          std::to_string(k));
  }
  validate_graph(g);
  const Eigen::Index n = g.size();

  double spectral_radius = 0.0;
  if (k >= 1) {
    if (g.weights.nonZeros() == 0) {
      throw ValidationError("diffusion needs at least one edge when k >= 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        Eigen::MatrixXd(g.weights), Eigen::EigenvaluesOnly);
    spectral_radius = solver.eigenvalues().maxCoeff();
  }

  Rng rng(seed);
  Eigen::VectorXd x(n);
  bool any = false;
  for (int attempt = 0; attempt < 100 && !any; ++attempt) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const bool on = rng.bernoulli(eta);
      const double sign = rng.rademacher();
      x[i] = on ? sign : 0.0;
      any = any || on;
    }
  }
  if (!any) {
    throw ValidationError("signal support empty after 100 draws (eta = " +
                          std::to_string(eta) + ")");
  }

  for (int step = 0; step < k; ++step) {
    x = (g.weights * x) / spectral_radius;
  }
  const double norm = x.norm();
  if (norm == 0.0) {
    throw ValidationError("signal support empty after diffusion");
  }
  return x / norm;
}

double snr(const Eigen::VectorXd& f, const Eigen::VectorXd& fhat) {
  if (f.size() != fhat.size()) {
    throw ValidationError("snr length mismatch: " + std::to_string(f.size()) +
                          " vs " + std::to_string(fhat.size()));
  }
  const double signal = f.squaredNorm();
  if (signal == 0.0) {
    throw ValidationError("snr of an identically zero signal");
  }
  const double error = (f - fhat).squaredNorm();
  if (error == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / error);
}

Eigen::VectorXd add_noise(const Eigen::VectorXd& f, const NoiseModel& noise,
                          std::uint64_t seed) {
  check_sigma(noise.sigma);
  Rng rng(seed);
  Eigen::VectorXd noisy(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    noisy[i] = f[i] + noise.sigma * rng.normal();
  }
  return noisy;
}

}  // namespace gsp
