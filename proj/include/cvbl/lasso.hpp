#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cvbl/linops.hpp"

namespace cvbl {

struct AdmmConfig {
  double lambda = 1.0;   // regularization weight, >= 0
  double rho = 1.0;      // penalty parameter, fixed (no adaptation)
  int max_iters = 2000;
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
};

struct AdmmFailure : std::runtime_error {
  AdmmFailure(const std::string& what, double primal, double dual)
      : std::runtime_error(what), primal_residual(primal), dual_residual(dual) {}
  double primal_residual;
  double dual_residual;
};

struct AdmmInfo {
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  std::vector<double> objective_trace;  // ||F w - y||^2 + lambda * penalty(w) per iteration
  int outer_iterations = 0;             // generalized solver only
  double outer_rel_change = 0.0;
};

/// Proximal map of t * ||(a, b)||_2: shrink towards the origin, exactly zero
/// inside the threshold.
std::pair<double, double> group_soft_threshold(double a, double b, double t);

/// Classical complex LASSO, min ||F z - y||^2 + lambda sum_j |z_j|, by ADMM
/// with the group (modulus) soft threshold.
Eigen::VectorXcd lasso_admm_sparse(const Eigen::VectorXcd& y, const Operator& F,
                                   const AdmmConfig& cfg, AdmmInfo* info = nullptr);

/// Generalized LASSO with phase fixing, min ||F z - y||^2 + lambda ||L |z|||_1,
/// solved by alternating a fixed unit-phase diagonal Theta with an inner ADMM
/// on min ||F z - y||^2 + lambda ||L Theta^H z||_1. The outer loop has no
/// convergence guarantee; info reports the outer count and final change.
Eigen::VectorXcd lasso_admm_generalized(const Eigen::VectorXcd& y, const Operator& F,
                                        const Sparsifier& L, const AdmmConfig& cfg,
                                        AdmmInfo* info = nullptr);

}  // namespace cvbl
