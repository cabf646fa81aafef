#include "gsp/sgwt.hpp"

#include <cmath>

#include "gsp/errors.hpp"

namespace gsp {

namespace {

void check_signal_length(Eigen::Index got, Eigen::Index want) {
  if (got != want) {
    throw ValidationError("signal length " + std::to_string(got) +
                          " does not match graph size " + std::to_string(want));
  }
}

}  // namespace

WaveletCoeffs analysis(const Eigen::VectorXd& f, const TightFrame& frame) {
  check_signal_length(f.size(), frame.signal_size());
  WaveletCoeffs wc;
  wc.n = frame.signal_size();
  wc.max_scale = frame.max_scale;
  wc.values = frame.matrix * f;
  return wc;
}

Eigen::VectorXd synthesis(const Eigen::VectorXd& coeffs,
                          const TightFrame& frame) {
  if (coeffs.size() != frame.matrix.rows()) {
    throw ValidationError("coefficient length " + std::to_string(coeffs.size()) +
                          " does not match frame rows " +
                          std::to_string(frame.matrix.rows()));
  }
  return frame.matrix.transpose() * coeffs;
}

Eigen::VectorXd synthesis(const WaveletCoeffs& wc, const TightFrame& frame) {
  return synthesis(wc.values, frame);
}

WaveletCoeffs forward_sgwt(const Eigen::VectorXd& f, const EigenSystem& es,
                           double b) {
  check_signal_length(f.size(), es.size());
  FilterBank bank(es.lmax, b);
  const Eigen::Index n = es.size();

  WaveletCoeffs wc;
  wc.n = n;
  wc.max_scale = bank.max_scale();
  wc.values.resize(n * bank.num_filters());

  const Eigen::VectorXd spectrum = es.evectors.transpose() * f;
  Eigen::VectorXd scaled(n);
  for (int j = 0; j <= bank.max_scale(); ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      scaled[i] = std::sqrt(bank.psi(j, es.evalues[i])) * spectrum[i];
    }
    wc.values.segment(j * n, n) = es.evectors * scaled;
  }
  return wc;
}

Eigen::VectorXd inverse_sgwt(const WaveletCoeffs& wc, const EigenSystem& es,
                             double b) {
  FilterBank bank(es.lmax, b);
  const Eigen::Index n = es.size();
  const Eigen::Index expected = n * bank.num_filters();
  if (wc.values.size() != expected) {
    throw ValidationError(
        "scale count mismatch: " + std::to_string(wc.values.size()) +
        " coefficients, but lmax and b imply " + std::to_string(expected) +
        " (" + std::to_string(bank.num_filters()) + " scales of " +
        std::to_string(n) + ")");
  }

  Eigen::VectorXd accum = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd spectrum(n);
  for (int j = 0; j <= bank.max_scale(); ++j) {
    spectrum = es.evectors.transpose() * wc.values.segment(j * n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      accum[i] += std::sqrt(bank.psi(j, es.evalues[i])) * spectrum[i];
    }
  }
  return es.evectors * accum;
}

}  // namespace gsp
