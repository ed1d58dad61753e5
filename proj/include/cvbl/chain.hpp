#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvbl/gsampler.hpp"

namespace cvbl {

enum class EtaMode { gamma_hyper, fixed };

/// Shared Gibbs chain configuration (noise, hyperprior, lengths).
struct ChainConfig {
  double sigma2 = 1.0;       // noise variance of the observation model
  double r = 1.0;            // hyperprior shape
  double delta = 1e-3;       // hyperprior rate
  int n_samples = 5000;      // N_M, total Gibbs iterations
  int burn_in = 200;         // B; samples with iteration index >= B are retained
  double zero_threshold = 1e-8;
  EtaMode eta_mode = EtaMode::gamma_hyper;
  double eta_hat = 1e-2;     // point estimate used when eta_mode == fixed
  int n_truncation_attempts = 10;  // N_s before the RSM fallback
  CgConfig cg;

  int retained() const { return n_samples - burn_in + 1; }
  void validate() const {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("ChainConfig: sigma2 must be positive");
    if (!(r > 0.0) || !(delta > 0.0))
      throw std::invalid_argument("ChainConfig: r and delta must be positive");
    if (burn_in < 0 || burn_in >= n_samples)
      throw std::invalid_argument("ChainConfig: need 0 <= burn_in < n_samples");
    if (eta_mode == EtaMode::fixed && !(eta_hat > 0.0))
      throw std::invalid_argument("ChainConfig: eta_hat must be positive");
  }
  double eta_inv2_fixed() const { return 1.0 / (eta_hat * eta_hat); }
};

/// Retained post-burn-in samples plus per-iteration scalars. `samples` holds
/// exactly the columns named in `columns`, one retained draw per row; the
/// retained rows correspond to iterations burn_in .. n_samples (inclusive,
/// n_samples - burn_in + 1 rows).
struct ChainResult {
  Eigen::MatrixXd samples;
  std::vector<std::string> columns;
  Eigen::VectorXd eta_inv2_trace;  // one entry per iteration 1..N_M
  Eigen::VectorXd tau2_mean;       // scale-mixture mean over retained sweeps (k entries)
  int n_samples = 0;
  int burn_in = 0;
  double wall_seconds = 0.0;
  std::string sampler;

  int col(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return static_cast<int>(i);
    throw std::out_of_range("ChainResult: no column " + name);
  }
  /// Block of columns with a common prefix (e.g. all "g_*" columns).
  Eigen::MatrixXd block(const std::string& prefix, int count) const {
    const int c0 = col(prefix + "0");
    return samples.middleCols(c0, count);
  }
};

}  // namespace cvbl
