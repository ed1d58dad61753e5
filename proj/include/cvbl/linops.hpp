#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cvbl {

enum class OpKind { dft, blur, undersampled_dft, custom_dense };

/// Declarative description of a forward operator. 2D signals are vectorized
/// row-major (n = n1*n2); 1D uses n2 = 1.
struct OperatorSpec {
  OpKind kind = OpKind::dft;
  int n1 = 0;
  int n2 = 1;
  double nu = 1.0;            // undersampled_dft: sample rate in (0, 1]
  std::uint64_t mask_seed = 0;
  int bandwidth = 2;          // blur half-width
  double blur_sigma = 0.0;    // > 0: Gaussian taps with this std instead of the 2^(2-|d|) taps
  Eigen::MatrixXcd dense;     // custom_dense only, n <= 512

  int n() const { return n1 * n2; }
  bool is_2d() const { return n2 > 1; }
};

std::string to_string(OpKind kind);
OpKind op_kind_from_string(const std::string& s);

/// Row indices retained by the undersampled DFT: m = ceil(nu*n) distinct
/// indices, always containing the zeroth-frequency row, the remaining m-1
/// drawn uniformly without replacement from the other n-1 rows. Deterministic
/// in (n, nu, seed); returned sorted ascending.
std::vector<int> make_undersample_mask(int n, double nu, std::uint64_t seed);

/// Matrix-free forward operator F. Immutable after construction; apply and
/// adjoint are pure and safe to call concurrently.
class Operator {
 public:
  explicit Operator(OperatorSpec spec);

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;    // F x,  n -> m
  Eigen::VectorXcd adjoint(const Eigen::VectorXcd& y) const;  // F^H y, m -> n

  int rows() const { return m_; }
  int cols() const { return spec_.n(); }
  bool unitary() const;
  /// ||F e_i||^2, used for the diagonal of F^H F.
  double col_norm2(int i) const;
  /// Dense Gram matrix F^H F, cached on first use. Only available for
  /// n <= kGramCacheMax; used by the sequential phase sweep.
  const Eigen::MatrixXcd& gram() const;

  const OperatorSpec& spec() const { return spec_; }
  const std::vector<int>& mask() const { return mask_; }

  static constexpr int kGramCacheMax = 1024;
  static constexpr int kCustomDenseMax = 512;

 private:
  Eigen::VectorXcd apply_blur(const Eigen::VectorXcd& x, bool conj_taps) const;

  OperatorSpec spec_;
  int m_ = 0;
  std::vector<int> mask_;      // undersampled rows
  Eigen::VectorXd taps_;       // blur taps, index 0..2*bandwidth
  mutable std::unique_ptr<Eigen::MatrixXcd> gram_;  // lazy, set once
};

enum class SpKind { identity, first_difference_1d, gradient_2d_stacked };

std::string to_string(SpKind kind);
SpKind sp_kind_from_string(const std::string& s);

/// Sparsifying transform L (k x n) with zero boundary conditions.
///   identity:            k = n, L = I
///   first_difference_1d: k = n, (Lx)_1 = x_1, (Lx)_i = x_i - x_{i-1}
///   gradient_2d_stacked: k = 2n, vertical differences stacked over horizontal
struct SparsifierSpec {
  SpKind kind = SpKind::identity;
  int n1 = 0;
  int n2 = 1;
  int n() const { return n1 * n2; }
};

class Sparsifier {
 public:
  explicit Sparsifier(SparsifierSpec spec);

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;    // n -> k
  Eigen::VectorXd adjoint(const Eigen::VectorXd& v) const;  // k -> n
  /// diag(L^T D(w) L) for a k-vector of weights; used by Jacobi CG.
  Eigen::VectorXd gram_diag(const Eigen::VectorXd& w) const;

  int k() const { return k_; }
  int n() const { return spec_.n(); }
  const SparsifierSpec& spec() const { return spec_; }

 private:
  SparsifierSpec spec_;
  int k_ = 0;
};

/// Real/imaginary splitting of a complex operator, optionally composed with a
/// right diagonal:  F1 = F D(d),
///   tilde(F1)  = [Re(F1); Im(F1)]   (2m x n, applied to real vectors)
///   tilde(F1)* = [-Im(F1); Re(F1)]
/// All four maps are evaluated through the complex operator, never assembled.
class SplitOperator {
 public:
  explicit SplitOperator(const Operator& op);
  SplitOperator(const Operator& op, Eigen::VectorXcd right_diag);

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;         // tilde(F1) x
  Eigen::VectorXd adjoint(const Eigen::VectorXd& yt) const;      // tilde(F1)^T yt
  Eigen::VectorXd apply_star(const Eigen::VectorXd& x) const;    // tilde(F1)* x
  Eigen::VectorXd adjoint_star(const Eigen::VectorXd& yt) const; // tilde(F1)*^T yt

  int rows() const { return 2 * op_->rows(); }  // split dimension 2m
  int cols() const { return op_->cols(); }
  const Operator& op() const { return *op_; }

  static Eigen::VectorXd split(const Eigen::VectorXcd& y);    // [Re(y); Im(y)]
  static Eigen::VectorXcd unsplit(const Eigen::VectorXd& yt);

 private:
  Eigen::VectorXcd diag_mul(const Eigen::VectorXd& x) const;
  Eigen::VectorXcd diag_conj_mul(const Eigen::VectorXcd& w) const;

  const Operator* op_;
  std::optional<Eigen::VectorXcd> right_diag_;
};

/// Gamma v = L^T D(tau2)^{-1} L v + (2/sigma2) tilde(F1)^T tilde(F1) v,
/// the precision of the conditional magnitude density.
Eigen::VectorXd precision_apply(const Sparsifier& L, const SplitOperator& F1,
                                const Eigen::VectorXd& tau2, double sigma2,
                                const Eigen::VectorXd& v);

/// G v = L^T D(tau2)^{-1} L v + (1/sigma2) F^T F v for a real operator F
/// (imaginary part zero), the real-signal conditional precision.
Eigen::VectorXd precision_apply_real(const Sparsifier& L, const Operator& F,
                                     const Eigen::VectorXd& tau2, double sigma2,
                                     const Eigen::VectorXd& v);

namespace detail {
/// Normalized DFT by direct summation; reference path for any n.
Eigen::VectorXcd dft_direct(const Eigen::VectorXcd& x, bool adjoint);
/// Normalized DFT: radix-2 FFT when n is a power of two, direct otherwise.
Eigen::VectorXcd dft_1d(const Eigen::VectorXcd& x, bool adjoint);
}  // namespace detail

}  // namespace cvbl
