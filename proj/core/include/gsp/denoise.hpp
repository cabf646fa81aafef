#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "gsp/graph.hpp"
#include "gsp/sgwt.hpp"

namespace gsp {

/// Thresholding exponent: finite beta >= 1, or the hard-threshold limit
/// (beta -> infinity) as an explicit variant so no large float ever enters
/// a pow().
class Beta {
 public:
  Beta(double value);  // throws ValidationError unless finite and >= 1
  static Beta hard() { return Beta(kHardTag{}); }

  bool is_hard() const { return hard_; }
  double value() const { return value_; }

 private:
  struct kHardTag {};
  explicit Beta(kHardTag) : value_(0.0), hard_(true) {}
  double value_;
  bool hard_;
};

enum class ThreshPolicy {
  Uniform,    // the same threshold t for every coefficient
  Dependent,  // t scaled per coefficient by its noise sd, t_i = t*sqrt(diag_wwt_i)
};

struct NoiseModel {
  double sigma = 0.0;  // noise standard deviation, finite and > 0
};

struct ThreshSweepResult {
  Eigen::VectorXd thresholds;  // candidate grid, ascending
  Eigen::VectorXd mse;         // ||h_t(noisy) - clean||^2 per candidate
  Eigen::VectorXd sure;        // SURE per candidate
  Eigen::Index min_mse_idx = 0;   // argmins, ties broken by smallest index
  Eigen::Index min_sure_idx = 0;
  std::optional<Eigen::MatrixXd> kept_coeffs;  // n(J+1) x num_thresholds
};

/// Componentwise shrinkage tau(x, t) = x * max(1 - t^beta |x|^-beta, 0);
/// hard keeps x wherever |x| > t. Components with |x| <= t are killed
/// (right-continuous convention at |x| == t); t == 0 is the identity.
Eigen::VectorXd betathresh(const Eigen::VectorXd& x, double t, Beta beta);

/// Shrinkage with per-coefficient thresholds t_i derived from the policy.
Eigen::VectorXd apply_threshold(const WaveletCoeffs& wc, double t, Beta beta,
                                ThreshPolicy policy,
                                const Eigen::VectorXd& diag_wwt);

/// Stein unbiased risk estimate of the coefficient-space squared error:
///   -n sigma^2 + ||h(x) - x||^2 + 2 sum_i sigma^2 diag_wwt_i dh_i(x),
/// where n is the signal length and dh_i the a.e. derivative of the
/// componentwise shrinkage.
double sure_value(const WaveletCoeffs& wc_noisy, double t, Beta beta,
                  double sigma, const Eigen::VectorXd& diag_wwt,
                  ThreshPolicy policy);

/// Sweeps an ascending candidate grid, recording MSE against the clean
/// coefficients and SURE per candidate. Pass the sorted absolute noisy
/// coefficients (donoho_johnstone_grid) for the usual grid.
ThreshSweepResult sure_mse_thresh(const WaveletCoeffs& wc_noisy,
                                  const WaveletCoeffs& wc_clean,
                                  const Eigen::VectorXd& thresholds,
                                  const Eigen::VectorXd& diag_wwt, Beta beta,
                                  double sigma, ThreshPolicy policy,
                                  bool keepwc);

/// sort(abs(wc.values)) ascending.
Eigen::VectorXd donoho_johnstone_grid(const WaveletCoeffs& wc);

/// Diagonal of the frame Gram operator W W*: component i is the squared
/// norm of frame row i. Sums to n for a tight frame.
Eigen::VectorXd diag_frame_gram(const TightFrame& frame);

/// Monte-Carlo estimate of the per-coefficient noise variance: empirical
/// second moment of forward_sgwt(xi) over num_draws draws xi ~ N(0, sigma^2 I).
/// Converges to sigma^2 * diag_frame_gram.
Eigen::VectorXd estimate_gamma_mc(const EigenSystem& es, double b, double sigma,
                                  int num_draws, std::uint64_t seed);

/// Random unit-norm test signal: sparse Rademacher seed x (support density
/// eta), diffused k times by the spectrally normalized weights A/lmax(A),
/// then l2-normalized. Larger k gives smoother signals.
Eigen::VectorXd randsignal(double eta, int k, const SparseGraph& g,
                           std::uint64_t seed);

/// 10 log10(sum f^2 / sum (f - fhat)^2); +infinity when fhat == f exactly.
double snr(const Eigen::VectorXd& f, const Eigen::VectorXd& fhat);

/// f + xi with xi i.i.d. N(0, sigma^2), deterministic in the seed.
Eigen::VectorXd add_noise(const Eigen::VectorXd& f, const NoiseModel& noise,
                          std::uint64_t seed);

}  // namespace gsp
