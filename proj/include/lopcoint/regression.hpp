#pragma once

#include <Eigen/Dense>

namespace lopcoint {

/// Multi-equation least squares with a shared regressor matrix.
///
/// Solved by column-pivoting Householder QR. A numerically rank-deficient
/// design raises NumericalError instead of returning a minimum-norm fit.
struct LeastSquares {
  Eigen::MatrixXd coef;       // regressors x equations
  Eigen::MatrixXd residuals;  // observations x equations
  Eigen::MatrixXd xtx_inv;    // (X'X)^{-1}

  Eigen::Index nobs() const { return residuals.rows(); }
  Eigen::Index nreg() const { return coef.rows(); }
  Eigen::VectorXd ssr() const { return residuals.colwise().squaredNorm().transpose(); }
  /// Residual variance per equation with denominator nobs - nreg.
  Eigen::VectorXd s2() const;
  Eigen::MatrixXd std_errors() const;
  Eigen::MatrixXd t_stats() const;
  /// Coefficient covariance of one equation: s2_eq * (X'X)^{-1}.
  Eigen::MatrixXd coef_cov(Eigen::Index equation) const { return s2()(equation) * xtx_inv; }
};

LeastSquares least_squares(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y);

/// Residuals of Y after projecting on the columns of Z (Z may have zero columns).
Eigen::MatrixXd partial_out(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y);

/// Log-determinant of a symmetric positive definite matrix; throws when it is not.
double logdet_spd(const Eigen::MatrixXd& A, const char* what = "matrix");

/// Gaussian log-likelihood -n/2 (K (1 + ln 2pi) + ln|Sigma|) with Sigma = E'E / n.
double gaussian_loglik(const Eigen::MatrixXd& residuals);

}  // namespace lopcoint
