#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "cvbl/rng.hpp"

namespace cvbl {

struct CgConfig {
  double rel_tol = 1e-8;
  int max_iters = -1;  // -1: 10 n
  bool jacobi = false; // use the supplied diagonal as preconditioner
};

class CgFailure : public std::runtime_error {
 public:
  CgFailure(const std::string& what, double residual, int iters)
      : std::runtime_error(what), final_residual(residual), iterations(iters) {}
  double final_residual;
  int iterations;
};

class TruncationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using LinOp = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Process-wide CG effort counters, for per-run diagnostics.
struct CgCounters {
  long long solves = 0;
  long long iterations = 0;
};
CgCounters cg_counters();
void reset_cg_counters();

/// Solve A x = b for symmetric positive definite A by conjugate gradients with
/// minimal-residual smoothing, which makes the reported residual sequence
/// non-increasing. Returns x with ||A x - b|| <= rel_tol ||b||; throws
/// CgFailure otherwise. `residual_trace`, when given, receives the smoothed
/// residual norms. `diag`, when given with cfg.jacobi, preconditions by 1/diag.
Eigen::VectorXd cg_solve(const LinOp& A, const Eigen::VectorXd& b, const CgConfig& cfg = {},
                         const Eigen::VectorXd* diag = nullptr,
                         std::vector<double>* residual_trace = nullptr);

/// Posterior Gaussian target
///   precision = L^T D(prior_var)^{-1} L + (1/like_var) F^T F
///   precision * mean = L^T D(prior_var)^{-1} prior_mean + (1/like_var) F^T data
/// where F maps R^n to the (possibly split) data space of dimension d.
struct GaussianTarget {
  LinOp fwd;                 // n -> d
  LinOp fwd_adj;             // d -> n
  LinOp sp;                  // n -> k
  LinOp sp_adj;              // k -> n
  Eigen::VectorXd data;        // d
  Eigen::VectorXd prior_mean;  // k
  Eigen::VectorXd prior_var;   // k, strictly positive
  double like_var = 1.0;
  int n = 0;
  Eigen::VectorXd precision_diag;  // diag of the posterior precision; enables Jacobi CG

  Eigen::VectorXd precision_apply(const Eigen::VectorXd& v) const;
  Eigen::VectorXd mean_rhs() const;  // right-hand side defining the mean
  void validate() const;
};

/// One draw from N(mean, precision^{-1}) by perturbation-optimization:
/// perturb the prior mean and the data, then solve one normal-equations
/// system by CG.
Eigen::VectorXd sample_gaussian_po(RngStream& rng, const GaussianTarget& target,
                                   const CgConfig& cfg = {});

/// Zero-mean draw w ~ N(0, precision^{-1}) (perturbations only).
Eigen::VectorXd sample_gaussian_po_zero_mean(RngStream& rng, const GaussianTarget& target,
                                             const CgConfig& cfg = {});

/// Mode of the target density restricted to the nonnegative orthant:
/// argmin_{x >= 0} (1/2) x^T P x - x^T (P mean), found by an active-set
/// method with CG inner solves; stops at KKT residual kkt_tol (relative).
Eigen::VectorXd nonneg_mode(const GaussianTarget& target, const CgConfig& cfg = {},
                            double kkt_tol = 1e-8);

struct TruncatedDraw {
  Eigen::VectorXd x;
  int attempts = 0;    // total proposals consumed
  bool used_rsm = false;
};

/// Exact draw from the target Gaussian restricted to the nonnegative orthant.
/// Plain rejection from the untruncated density for up to n_attempts draws;
/// afterwards rejection sampling from the mode: proposals N(mode, P^{-1}) are
/// accepted with probability exp(-zeta^T x), zeta = P (mode - mean) >= 0, which
/// bounds the density ratio by the mode's KKT conditions. Hard cap of 10^4 RSM
/// proposals, then TruncationFailure.
TruncatedDraw sample_truncated_nonneg(RngStream& rng, const GaussianTarget& target,
                                      int n_attempts = 10, const CgConfig& cfg = {});

}  // namespace cvbl
