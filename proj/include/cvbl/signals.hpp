#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "cvbl/linops.hpp"
#include "cvbl/rng.hpp"

namespace cvbl {

enum class SignalKind { sparse_1d, piecewise_1d, sparse_2d, shepp_logan_2d };

std::string to_string(SignalKind kind);
SignalKind signal_kind_from_string(const std::string& s);

struct SignalSpec {
  SignalKind kind = SignalKind::piecewise_1d;
  int n1 = 200;
  int n2 = 1;
  int sparsity = 5;          // on-pixel count for the sparse generators
  std::uint64_t seed = 0;
  int n() const { return n1 * n2; }
};

struct ComplexSignal {
  Eigen::VectorXd g;    // magnitude >= 0
  Eigen::VectorXd phi;  // phase in [-pi, pi)
  Eigen::VectorXcd z() const {
    Eigen::VectorXcd out(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i)
      out[i] = g[i] * std::complex<double>(std::cos(phi[i]), std::sin(phi[i]));
    return out;
  }
};

/// Piecewise test magnitude on [-pi, pi): plateaus of height 2 on
/// [-2.8, -2.1] and 1.5 on [-1.6, -1.3], the Gaussian bump
/// 1 + 1.5 exp(-((t - pi/2) / (2/3))^2) for t > 0, and 1 elsewhere.
double piecewise_magnitude(double t);

/// Shepp-Logan head phantom on a unit square grid, from the standard
/// ten-ellipse table (Shepp & Logan 1974); values in [0, 2].
Eigen::VectorXd shepp_logan(int n1, int n2);

/// Ground-truth signal per the spec: seeded, uniform i.i.d. phases.
ComplexSignal gen_signal(const SignalSpec& spec);

struct Observation {
  Eigen::VectorXcd y;
  double sigma2 = 0.0;
  double realized_snr_db = 0.0;
};

/// y = F z + eps at the target SNR. Complex circular noise by default;
/// real_noise draws eps ~ N(0, sigma2) per entry for real-signal problems.
Observation gen_observation(const ComplexSignal& sig, const Operator& F, double snr_db_target,
                            std::uint64_t noise_seed, bool real_noise = false);

}  // namespace cvbl
