#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lopcoint/data.hpp"
#include "lopcoint/johansen.hpp"
#include "lopcoint/var_model.hpp"

namespace lopcoint {

struct NormalizedBeta {
  Eigen::MatrixXd beta;  // pivot entry of column j is exactly 1, other pivots 0
  std::vector<int> pivots;
};

/// Scales beta so that beta(pivots, :) = I, i.e. beta (c' beta)^{-1}.
/// Empty `pivots` means 0..r-1.
NormalizedBeta normalize_beta(const Eigen::MatrixXd& beta, std::vector<int> pivots = {});

/// "MW = -1.9085*NE + 1.1484*SO + ... + 0.0477" for one normalized vector.
/// `names` has one entry per row of the vector. `relation_constant` is c in
/// beta' p + c, so it appears on the right-hand side with its sign flipped.
std::string long_run_equation(const Eigen::VectorXd& vector, const std::vector<std::string>& names, int pivot,
                              std::optional<double> relation_constant = std::nullopt, int decimals = 4);

/// VECM at rank r:
///   dp_t = alpha (beta' pbar_{t-1}) + sum_i Gamma_i dp_{t-i} + det + Phi D_t + e_t
///
/// Regressor order: the r error-correction terms, lagged differences grouped by
/// variable (var 1 lags 1..L, var 2 lags 1..L, ...), C (cases 3-5), trend
/// (case 5), dummies. In case 3 the error-correction regressor is demeaned:
/// ce_intercept = -mean(beta' p_{t-1}) is reported as the relation's constant.
///
/// Standard errors of beta follow the usual likelihood-based result for the
/// pivot-normalized vectors: with H selecting the non-pivot rows,
///   Cov(vec psi) = T^{-1} (alpha' Omega^{-1} alpha)^{-1} (x) (H' S11 H)^{-1},
/// Omega the ML residual covariance. Pivot rows carry NaN.
struct VecmModel {
  int rank = 0;
  int K = 0;
  int lags = 0;  // lagged differences, k - 1
  JohansenCase jcase = JohansenCase::unrestricted_constant;
  int T_eff = 0;
  Eigen::Index sample_start = 0;
  std::vector<std::string> names;       // K regions
  std::vector<std::string> beta_names;  // regions plus restricted term
  std::vector<YearMonth> sample_dates;
  std::vector<std::string> regressor_names;
  std::vector<std::string> dummy_names;

  std::vector<int> pivots;
  Eigen::MatrixXd beta;  // p1 x r
  Eigen::MatrixXd beta_se;
  Eigen::MatrixXd beta_t;
  Eigen::VectorXd ce_intercept;  // r entries in case 3, empty otherwise

  Eigen::MatrixXd alpha;  // K x r
  Eigen::MatrixXd alpha_se;
  Eigen::MatrixXd alpha_t;
  std::vector<Eigen::MatrixXd> gamma;  // Gamma_i, K x K, row = equation
  std::vector<Eigen::MatrixXd> gamma_t;

  Eigen::MatrixXd coef;  // regressors x K
  Eigen::MatrixXd std_errors;
  Eigen::MatrixXd t_stats;
  Eigen::MatrixXd xtx_inv;
  Eigen::MatrixXd X;
  Eigen::MatrixXd Y;
  Eigen::MatrixXd residuals;
  Eigen::MatrixXd sigma_ml;
  Eigen::MatrixXd sigma;

  Eigen::VectorXd adj_r2;
  Eigen::VectorXd eq_loglik;
  Eigen::VectorXd eq_aic;
  Eigen::VectorXd eq_sc;
  double loglik = 0.0;
  InformationCriteria ic;
  int n_params = 0;  // K * regressors + r (p1 - r)

  Eigen::MatrixXd levels_lagged;  // pbar_{t-1}, T_eff x p1
  Eigen::MatrixXd ect;            // beta' pbar_{t-1}, T_eff x r
  JohansenResult johansen;

  /// Levels part of alpha beta', K x K.
  Eigen::MatrixXd pi() const;
  /// Column index in X of lag `lag` (1-based) of variable `var`'s difference.
  int lagged_difference_column(int var, int lag) const { return rank + var * lags + (lag - 1); }
  Eigen::MatrixXd deterministic_coef() const;  // K x (unrestricted deterministic count)
  Eigen::MatrixXd dummy_coef() const;          // K x d
};

/// `lags` is the number of lagged differences (k - 1 >= 1).
VecmModel fit_vecm(const PricePanel& panel, int lags, int rank, JohansenCase jcase, const DummyMatrix& dummies,
                   std::vector<int> pivots = {});

/// beta' pbar_{t-1} recomputed from the stored vectors and lagged levels.
Eigen::MatrixXd ect_series(const VecmModel& model);

/// Levels VAR(k) coefficients from Pi and Gamma_1..Gamma_{k-1}:
/// pi_1 = I + Pi + Gamma_1, pi_i = Gamma_i - Gamma_{i-1}, pi_k = -Gamma_{k-1}.
std::vector<Eigen::MatrixXd> vecm_to_var(const Eigen::MatrixXd& Pi, const std::vector<Eigen::MatrixXd>& gamma);
/// Inverse mapping: Pi = -(I - sum pi_i), Gamma_i = -sum_{j > i} pi_j.
std::pair<Eigen::MatrixXd, std::vector<Eigen::MatrixXd>> var_to_vecm(const std::vector<Eigen::MatrixXd>& pi);

struct GrangerRow {
  int dependent = 0;
  int excluded = 0;  // -1 for the joint "All" row
  double chi2 = 0.0;
  int df = 0;
  double p = 1.0;
  bool reject = false;
};

struct GrangerResult {
  std::vector<std::string> names;
  std::vector<GrangerRow> pairs;  // grouped by dependent equation
  std::vector<GrangerRow> all;    // one per dependent equation
  double level = 0.05;
};

/// Wald exclusion tests on the lagged differences using s^2 (X'X)^{-1}.
GrangerResult granger_wald(const VecmModel& model, double level = 0.05);

/// Pattern of fixed values (nullopt = free) for each cointegration vector.
/// Text form: entries separated by ',', vectors by ';', free entries '*'.
struct RestrictionSpec {
  std::vector<std::vector<std::optional<double>>> pattern;
  std::string label;

  static RestrictionSpec parse(const std::string& text, std::string label = {});
  std::string to_string() const;
};

struct SwitchingOptions {
  double tolerance = 1e-10;  // log-likelihood gain
  int max_iterations = 10000;
  int starts = 5;
  std::uint64_t seed = 20240601;
};

struct RestrictionResult {
  std::string label;
  double lr = 0.0;
  int df = 0;
  double p_value = 1.0;
  double loglik_restricted = 0.0;
  double loglik_unrestricted = 0.0;
  Eigen::MatrixXd beta;   // restricted estimate, p1 x r
  Eigen::MatrixXd alpha;  // K x r
  int iterations = 0;
};

/// Linear restrictions vec(beta) = h + H phi and zero rows of alpha,
/// estimated by switching between the alpha/Omega and beta steps.
struct RestrictedFit {
  Eigen::MatrixXd alpha;
  Eigen::MatrixXd beta;
  Eigen::MatrixXd omega;
  double loglik = 0.0;
  int iterations = 0;
  bool converged = false;
};

RestrictedFit fit_restricted(const JohansenResult& jr, int rank, const Eigen::MatrixXd& H, const Eigen::VectorXd& h,
                             const std::vector<int>& alpha_zero_rows, const SwitchingOptions& options = {});

/// Aligns a pattern with the p1 rows of `jr`: a trailing free entry for a
/// restricted term absent from the model is dropped, and a missing one is
/// appended as free.
RestrictionSpec align_restriction(const RestrictionSpec& spec, const JohansenResult& jr, int rank);

RestrictionResult restriction_lr_test(const JohansenResult& jr, int rank, const RestrictionSpec& spec,
                                      const SwitchingOptions& options = {});
RestrictionResult restriction_lr_test(const PricePanel& panel, int lags, int rank, JohansenCase jcase,
                                      const DummyMatrix& dummies, const RestrictionSpec& spec,
                                      const SwitchingOptions& options = {});

/// LR test of a zero adjustment row, df = r. Closed form by conditioning on
/// the variable's own difference.
RestrictionResult weak_exogeneity_test(const JohansenResult& jr, int rank, int variable);
RestrictionResult weak_exogeneity_test(const PricePanel& panel, int lags, int rank, JohansenCase jcase,
                                       const DummyMatrix& dummies, int variable);

struct PairwiseLopRow {
  int i = 0;
  int j = 0;
  RestrictionResult result;
  bool reject = false;
};

struct PairwiseLopTable {
  std::vector<std::string> names;
  std::vector<PairwiseLopRow> rows;
  double level = 0.01;

  /// K x K: -1 on the diagonal, 1 where LOP is rejected, 0 otherwise.
  Eigen::MatrixXi decisions() const;
};

/// beta' = [.., 1, .., -1, .., *] for every unordered pair; requires r = 1.
PairwiseLopTable pairwise_lop(const JohansenResult& jr, int rank, double level = 0.01,
                              const SwitchingOptions& options = {});
PairwiseLopTable pairwise_lop(const PricePanel& panel, int lags, int rank, JohansenCase jcase,
                              const DummyMatrix& dummies, double level = 0.01, const SwitchingOptions& options = {});

/// Every vector of the form e_1 - e_{j+1}, which requires rank K - 1.
RestrictionResult joint_lop_test(const JohansenResult& jr, int rank, const SwitchingOptions& options = {});
RestrictionResult joint_lop_test(const PricePanel& panel, int lags, int rank, JohansenCase jcase,
                                 const DummyMatrix& dummies, const SwitchingOptions& options = {});

}  // namespace lopcoint
