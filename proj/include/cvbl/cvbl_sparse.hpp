#pragma once

#include <optional>
#include <utility>

#include "cvbl/chain.hpp"
#include "cvbl/linops.hpp"

namespace cvbl {

struct CvblSparseState {
  Eigen::VectorXd a;  // real part
  Eigen::VectorXd b;  // imaginary part
  Eigen::VectorXd tau2;
  double eta_inv2 = 1.0;
};

/// Split residuals y1 = ytilde - tilde(F)* b and y2 = ytilde - tilde(F) a.
std::pair<Eigen::VectorXd, Eigen::VectorXd> split_residuals(const Eigen::VectorXcd& y,
                                                            const Operator& F,
                                                            const Eigen::VectorXd& a,
                                                            const Eigen::VectorXd& b);

/// Draw the real part a | y, b, tau2 from N(abar, G^{-1}) with
/// G = (2/sigma2) tilde(F)^T tilde(F) + D(tau2)^{-1} by perturbation-optimization.
Eigen::VectorXd sample_a_conditional(RngStream& rng, const Eigen::VectorXd& y1,
                                     const SplitOperator& Ft, const Eigen::VectorXd& tau2,
                                     double sigma2, const CgConfig& cfg = {});

/// Symmetric update of the imaginary part using tilde(F)* and y2.
Eigen::VectorXd sample_b_conditional(RngStream& rng, const Eigen::VectorXd& y2,
                                     const SplitOperator& Ft, const Eigen::VectorXd& tau2,
                                     double sigma2, const CgConfig& cfg = {});

/// Componentwise tau2 update driven by a_j^2 + b_j^2; Gamma branch when the
/// modulus falls below `threshold`. Coordinate j consumes from rng.child(j).
Eigen::VectorXd sample_tau_conditional_complex(RngStream& rng, const Eigen::VectorXd& a,
                                               const Eigen::VectorXd& b, double eta_inv2,
                                               double threshold = 1e-8);

/// CVBL Gibbs chain for complex signals with sparse magnitude, alternating
/// a, b, tau2 and eta^{-2} updates. Chain columns: re_z_*, im_z_*, eta_inv2.
ChainResult cvbl_sparse_run(RngStream& rng, const Eigen::VectorXcd& y, const Operator& F,
                            const ChainConfig& cfg,
                            const std::optional<CvblSparseState>& init = std::nullopt,
                            int start_iter = 1, CvblSparseState* final_state = nullptr);

}  // namespace cvbl
