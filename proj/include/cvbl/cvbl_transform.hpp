#pragma once

#include <optional>
#include <utility>

#include "cvbl/chain.hpp"
#include "cvbl/linops.hpp"

namespace cvbl {

struct CvblTransformState {
  Eigen::VectorXd g;    // magnitude, nonnegative after burn-in
  Eigen::VectorXd phi;  // phase in [-pi, pi)
  Eigen::VectorXd tau2;
  double eta_inv2 = 1.0;
};

struct MagnitudeDraw {
  Eigen::VectorXd g;
  int attempts = 1;
  bool used_rsm = false;
};

/// Conditional magnitude draw from the Gaussian with
///   Gamma = L^T D(tau2)^{-1} L + (2/sigma2) tilde(F1)^T tilde(F1),
///   Gamma gbar = (2/sigma2) tilde(F1)^T ytilde,      F1 = F D(e^{i phi}).
/// During burn-in returns |g*| of an untruncated draw; otherwise a nonnegative
/// draw via rejection with the RSM fallback after n_attempts failures.
MagnitudeDraw magnitude_conditional(RngStream& rng, const Eigen::VectorXcd& y, const Operator& F,
                                    const Sparsifier& L, const Eigen::VectorXd& phi,
                                    const Eigen::VectorXd& tau2, double sigma2, int n_attempts,
                                    bool burn_in_phase, const CgConfig& cfg = {});

/// von Mises parameters (kappa_i, mu_i) of the single-site phase conditional:
/// with A = F2^H F2, F2 = F D(g), F2^H y = q e^{i varphi},
///   u_i + i v_i = (2/sigma2) ( [F2^H y]_i - sum_{k != i} A_{ik} e^{i phi_k} ),
///   kappa_i = |u + iv|, mu_i = atan2(v, u).
std::pair<double, double> phase_vm_params(const Eigen::VectorXcd& y, const Operator& F,
                                          const Eigen::VectorXd& g, double sigma2,
                                          const Eigen::VectorXd& phi, int i);

enum class PhasePath {
  automatic,   // product for unitary F, colored blocks for banded F, else sequential
  product,     // independent von Mises per coordinate (exact only for unitary F)
  sequential,  // single-site Gibbs sweep through Theorem-4.3 parameters
};

/// One phase sweep. Coordinate i consumes from rng.child(i); kappa = 0
/// coordinates draw uniformly on [-pi, pi).
Eigen::VectorXd sample_phase(RngStream& rng, const Eigen::VectorXcd& y, const Operator& F,
                             const Eigen::VectorXd& g, double sigma2, const Eigen::VectorXd& phi,
                             PhasePath path = PhasePath::automatic);

/// CVBL Gibbs chain for signals whose magnitude is sparse under L.
/// Chain columns: g_*, phi_*, eta_inv2, reject_count, rsm_used.
ChainResult cvbl_transform_run(RngStream& rng, const Eigen::VectorXcd& y, const Operator& F,
                               const Sparsifier& L, const ChainConfig& cfg,
                               const std::optional<CvblTransformState>& init = std::nullopt,
                               int start_iter = 1, CvblTransformState* final_state = nullptr);

namespace detail_transform {
/// Conditional magnitude target behind magnitude_conditional; takes the
/// Corollary-4.2 identity form when F is unitary. F1 must outlive the target.
GaussianTarget make_g_target(const Eigen::VectorXcd& y, const Operator& F, const Sparsifier& L,
                             const SplitOperator& F1, const Eigen::VectorXd& tau2, double sigma2);
}  // namespace detail_transform

}  // namespace cvbl
