#pragma once

#include <optional>

#include "cvbl/chain.hpp"
#include "cvbl/linops.hpp"

namespace cvbl {

struct RvblState {
  Eigen::VectorXd x;
  Eigen::VectorXd tau2;
  double eta_inv2 = 1.0;
};

/// Draw x | tau2 from N(xbar, G^{-1}) with
///   G = (1/sigma2) F^T F + L^T D(tau2)^{-1} L,  xbar = (1/sigma2) G^{-1} F^T y,
/// by perturbation-optimization. F must be a real operator.
Eigen::VectorXd sample_x_conditional(RngStream& rng, const Eigen::VectorXd& y, const Operator& F,
                                     const Sparsifier& L, const Eigen::VectorXd& tau2,
                                     double sigma2, const CgConfig& cfg = {});

/// Componentwise tau2 update: when |[Lx]_j| >= zero_threshold draw
/// nu2 ~ InverseGaussian(sqrt(eta_inv2/[Lx]_j^2), eta_inv2) and return 1/nu2,
/// otherwise draw tau2_j ~ Gamma(1/2, eta_inv2/2) directly. Coordinate j
/// consumes from rng.child(j), so the sweep is order-independent.
Eigen::VectorXd sample_tau_conditional(RngStream& rng, const Eigen::VectorXd& Lx,
                                       double eta_inv2, double zero_threshold = 1e-8);

/// eta^{-2} | tau2 ~ Gamma(r + k, delta + sum(tau2)/2).
double sample_eta_conditional(RngStream& rng, const Eigen::VectorXd& tau2, double r, double delta);

/// Real-valued Bayesian LASSO Gibbs chain over (x, tau2, eta^{-2}).
/// Starts from x = F^T y, tau2 = 1, eta^{-2} = 1 unless `init` is given;
/// `start_iter` resumes mid-chain with substreams keyed by absolute iteration,
/// so a split run reproduces an unsplit one bit-exactly.
ChainResult rvbl_run(RngStream& rng, const Eigen::VectorXd& y, const Operator& F,
                     const Sparsifier& L, const ChainConfig& cfg,
                     const std::optional<RvblState>& init = std::nullopt, int start_iter = 1,
                     RvblState* final_state = nullptr);

}  // namespace cvbl
