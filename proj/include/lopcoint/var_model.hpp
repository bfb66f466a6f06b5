#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lopcoint/data.hpp"

namespace lopcoint {

struct DeterministicTerms {
  bool constant = true;
  bool trend = false;
  int count() const { return (constant ? 1 : 0) + (trend ? 1 : 0); }
};

/// Information criteria on the per-observation scale used throughout:
/// AIC = (-2 logL + 2n)/T, SC = (-2 logL + n ln T)/T, HQ = (-2 logL + 2n ln ln T)/T.
struct InformationCriteria {
  double aic = 0.0;
  double sc = 0.0;
  double hq = 0.0;
};

InformationCriteria information_criteria(double loglik, int n_params, int nobs);

/// VAR(p) in levels estimated equation by equation.
///
/// Regressor order: lags grouped by variable (var 1 lags 1..p, var 2 lags 1..p, ...),
/// then the constant, the trend (panel row index), then the dummies.
struct VarModel {
  int order = 0;
  int K = 0;
  int T_eff = 0;
  Eigen::Index sample_start = 0;  // panel row of the first dependent observation
  std::vector<std::string> names;
  std::vector<std::string> regressor_names;
  std::vector<YearMonth> sample_dates;
  DeterministicTerms det;
  std::vector<std::string> dummy_names;

  std::vector<Eigen::MatrixXd> lag_matrices;  // pi_i, K x K, row = equation
  Eigen::MatrixXd coef;                       // regressors x K
  Eigen::MatrixXd std_errors;
  Eigen::MatrixXd t_stats;
  Eigen::MatrixXd X;          // T_eff x regressors
  Eigen::MatrixXd Y;          // T_eff x K
  Eigen::MatrixXd residuals;  // T_eff x K
  Eigen::MatrixXd sigma_ml;   // E'E / T_eff
  Eigen::MatrixXd sigma;      // E'E / (T_eff - regressors)

  Eigen::VectorXd adj_r2;
  Eigen::VectorXd eq_loglik;
  Eigen::VectorXd eq_aic;
  Eigen::VectorXd eq_sc;
  double loglik = 0.0;
  InformationCriteria ic;
  int n_params = 0;  // K * regressors

  int regressors_per_equation() const { return static_cast<int>(coef.rows()); }
  Eigen::MatrixXd deterministic_coef() const;  // K x det.count()
  Eigen::MatrixXd dummy_coef() const;          // K x d
};

/// Fits a VAR(p). `sample_start` (>= p) fixes the first dependent row; by
/// default it is p, i.e. the whole panel is used.
VarModel fit_var(const PricePanel& panel, int p, DeterministicTerms det, const DummyMatrix& dummies,
                 std::optional<Eigen::Index> sample_start = std::nullopt);

struct LagSelectionRow {
  int lag = 0;
  double loglik = 0.0;
  double lr = 0.0;  // NaN for lag 0
  double lr_p = 1.0;
  double fpe = 0.0;
  InformationCriteria ic;
  int n_params = 0;
};

struct LagSelectionTable {
  std::vector<LagSelectionRow> rows;
  int T_eff = 0;
  int selected_lr = 0;
  int selected_fpe = 0;
  int selected_aic = 0;
  int selected_sc = 0;
  int selected_hq = 0;
};

/// Fits lags 0..max_lag on the common sample rows max_lag..T-1.
///
/// LR is the sequential modified statistic (T - m)(ln|S_{l-1}| - ln|S_l|) with
/// m regressors per equation in the lag-l model, chi-square with K^2 df; the
/// selected LR lag is the largest lag whose test rejects at `lr_level`.
/// FPE = |S_l| ((T + m)/(T - m))^K. Ties go to the smaller lag.
LagSelectionTable lag_order_selection(const PricePanel& panel, int max_lag, DeterministicTerms det,
                                      const DummyMatrix& dummies, double lr_level = 0.05);

struct SerialCorrelationRow {
  int h = 0;
  double lre = 0.0;
  int lre_df = 0;
  double lre_p = 1.0;
  double rao_f = 0.0;
  double f_df1 = 0.0;
  double f_df2 = 0.0;
  double f_p = 1.0;
};

/// Residual LM test for serial correlation at each single lag h = 1..h_max.
///
/// Auxiliary regression of the residuals on the original regressors and the
/// residuals lagged h (presample values zero). Edgerton-Shukur LR:
/// LRE = N ln(|S_r|/|S_u|), N = T - k - K - 1/2 with k original regressors,
/// chi-square with K^2 df; and Rao's F with (K^2, N s - K^2/2 + 1) df.
std::vector<SerialCorrelationRow> lm_serial_test(const VarModel& model, int h_max);

struct NormalityRow {
  std::string label;
  double skewness = 0.0;  // third standardized moment
  double kurtosis = 0.0;  // fourth standardized moment
  double jb = 0.0;
  int df = 2;
  double p = 1.0;
};

struct NormalityReport {
  std::vector<NormalityRow> components;
  NormalityRow joint;
};

/// Jarque-Bera on residuals orthogonalized by the lower Cholesky factor of
/// their (centered, divisor T) covariance, in column order.
NormalityReport jarque_bera_cholesky(const Eigen::MatrixXd& residuals);
NormalityReport jarque_bera_test(const VarModel& model);

struct StabilityReport {
  std::vector<std::complex<double>> roots;  // sorted by modulus, descending
  std::vector<double> moduli;
  bool stable = true;
};

StabilityReport companion_roots(const std::vector<Eigen::MatrixXd>& lag_matrices);
StabilityReport stability_roots(const VarModel& model);

struct DiagnosticsReport {
  std::vector<SerialCorrelationRow> serial;
  NormalityReport normality;
  StabilityReport stability;
};

DiagnosticsReport diagnose(const VarModel& model, int h_max = 4);

}  // namespace lopcoint
