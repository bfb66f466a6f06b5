#include "lopcoint/regression.hpp"

#include <cmath>
#include <numbers>

#include "lopcoint/errors.hpp"

namespace lopcoint {

Eigen::VectorXd LeastSquares::s2() const {
  const double dof = static_cast<double>(nobs() - nreg());
  if (dof <= 0) throw NumericalError("no residual degrees of freedom");
  return ssr() / dof;
}

Eigen::MatrixXd LeastSquares::std_errors() const {
  Eigen::VectorXd diag = xtx_inv.diagonal().cwiseMax(0.0);
  return diag.cwiseSqrt() * s2().cwiseSqrt().transpose();
}

Eigen::MatrixXd LeastSquares::t_stats() const { return coef.cwiseQuotient(std_errors()); }

LeastSquares least_squares(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
  if (X.rows() != Y.rows()) throw NumericalError("regressor and response row counts differ");
  const Eigen::Index m = X.cols();
  LeastSquares out;
  if (m == 0) {
    out.coef = Eigen::MatrixXd::Zero(0, Y.cols());
    out.residuals = Y;
    out.xtx_inv = Eigen::MatrixXd::Zero(0, 0);
    return out;
  }
  if (X.rows() < m) throw NumericalError("fewer observations than regressors");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  if (qr.rank() < m) throw NumericalError("rank-deficient regressor matrix");
  out.coef = qr.solve(Y);
  out.residuals = Y - X * out.coef;

  // (X'X)^{-1} = P R^{-1} R^{-T} P'
  Eigen::MatrixXd R = qr.matrixR().topLeftCorner(m, m).template triangularView<Eigen::Upper>();
  Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(m, m));
  Eigen::MatrixXd inner = Rinv * Rinv.transpose();
  const auto& perm = qr.colsPermutation();
  out.xtx_inv = perm * inner * perm.transpose();
  return out;
}

Eigen::MatrixXd partial_out(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y) {
  if (Z.cols() == 0) return Y;
  return least_squares(Z, Y).residuals;
}

double logdet_spd(const Eigen::MatrixXd& A, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success) throw NumericalError(std::string(what) + " is not positive definite");
  const auto& L = llt.matrixL();
  double s = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    const double d = L(i, i);
    if (!(d > 0.0)) throw NumericalError(std::string(what) + " is singular");
    s += std::log(d);
  }
  return 2.0 * s;
}

double gaussian_loglik(const Eigen::MatrixXd& residuals) {
  const double n = static_cast<double>(residuals.rows());
  const double K = static_cast<double>(residuals.cols());
  Eigen::MatrixXd sigma = residuals.transpose() * residuals / n;
  return -0.5 * n * (K * (1.0 + std::log(2.0 * std::numbers::pi)) + logdet_spd(sigma, "residual covariance"));
}

}  // namespace lopcoint
