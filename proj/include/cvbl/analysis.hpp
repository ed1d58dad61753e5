#pragma once

#include <utility>

#include <Eigen/Dense>

#include "cvbl/linops.hpp"

namespace cvbl {

/// SNR in decibels: 10 log10(||F z||^2 / (m sigma2)).
double snr_db(const Operator& F, const Eigen::VectorXcd& z_exact, double sigma2);

/// Noise variance realizing a target SNR: sigma2 = ||F z||^2 / (m 10^(SNR/10)).
double sigma2_for_snr(const Operator& F, const Eigen::VectorXcd& z_exact, double target_snr_db);

/// Equal-tailed per-column empirical credible interval at level beta, with
/// linear interpolation between order statistics.
std::pair<Eigen::VectorXd, Eigen::VectorXd> credible_interval(const Eigen::MatrixXd& samples,
                                                              double beta);

/// von Mises kernel density estimate of circular data, evaluated on `grid`.
/// The concentration follows the resultant-length rule of thumb
/// kappa_bw = kappa_hat(Rbar) * S^(2/5) unless kappa_bw > 0 is supplied.
Eigen::VectorXd circular_kde(const Eigen::VectorXd& phase_samples, const Eigen::VectorXd& grid,
                             double kappa_bw = 0.0);

/// Density threshold of the highest-density region containing `mass` of the
/// KDE on a uniform circular grid; f(theta) >= threshold <=> theta in HDR.
double kde_hdr_threshold(const Eigen::VectorXd& density, double mass);

/// Circular distance |wrap(a - b)| in [0, pi].
double circular_distance(double a, double b);

struct ErrorMetrics {
  double mag_rel_l2 = 0.0;
  double phase_mae_all = 0.0;
  double phase_mae_support = 0.0;
  double coverage_fraction = -1.0;  // -1 when no samples were supplied
};

/// Errors of an estimate against the truth, both given as magnitude/phase
/// pairs. Support pixels are those with truth magnitude > 5% of its maximum.
/// When `mag_samples` (S x n) is given, coverage_fraction reports the share of
/// pixels whose true magnitude falls inside the equal-tailed beta interval.
ErrorMetrics error_metrics(const Eigen::VectorXd& g_true, const Eigen::VectorXd& phi_true,
                           const Eigen::VectorXd& g_est, const Eigen::VectorXd& phi_est,
                           const Eigen::MatrixXd* mag_samples = nullptr, double beta = 0.90);

/// Modified Bessel functions of the first kind (series / asymptotic), used by
/// the KDE normalization and tests.
double bessel_i0_scaled(double x);  // e^{-x} I0(x)
double bessel_i1_scaled(double x);  // e^{-x} I1(x)

}  // namespace cvbl
