#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cvbl {

// Generator identifier written into output file headers for reproducibility.
inline constexpr const char* kGeneratorName = "splitmix64+xoshiro256++ v1";

/// Seeded, splittable random stream.
///
/// The state is a xoshiro256++ generator keyed by (seed, stream_id) through
/// splitmix64. child(a, b, c) derives an independent stream from the parent's
/// key, so per-coordinate updates can consume from substreams keyed by
/// (iteration, coordinate) and stay reproducible regardless of evaluation
/// order. Identical keys give identical variate sequences on every platform;
/// no std::distribution is used anywhere.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  /// Independent substream derived from this stream's key (not its position).
  RngStream child(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const;

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1]; safe to pass to log().
  double uniform_pos();
  /// Standard normal via Box-Muller (second value cached).
  double normal();

 private:
  RngStream() = default;
  void seed_state(std::uint64_t key);

  std::uint64_t key_ = 0;
  std::array<std::uint64_t, 4> s_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Inverse Gaussian (Wald) draw with mean mu and shape lambda,
/// density f(y) ∝ y^{-3/2} exp(-lambda (y-mu)^2 / (2 mu^2 y)).
/// Transformation-with-root-selection method: one normal, one uniform.
double sample_inverse_gaussian(RngStream& rng, double mu, double lambda);

/// Gamma draw with the (shape, rate) convention, mean = shape/rate.
/// Marsaglia-Tsang squeeze for shape >= 1, boosted for shape < 1.
double sample_gamma(RngStream& rng, double shape, double rate);

/// von Mises draw with location mu and concentration kappa > 0, via the
/// Best-Fisher wrapped-Cauchy acceptance-rejection scheme. Result in [-pi, pi).
double sample_von_mises(RngStream& rng, double mu, double kappa);

/// m-vector of circularly-symmetric complex Gaussians with E|e_j|^2 = sigma2
/// (real and imaginary parts independent N(0, sigma2/2)).
Eigen::VectorXcd sample_complex_gaussian(RngStream& rng, int m, double sigma2);

/// Wrap an angle to [-pi, pi).
double wrap_angle(double theta);

}  // namespace cvbl
