#include "lopcoint/var_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "lopcoint/distributions.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/regression.hpp"

namespace lopcoint {

InformationCriteria information_criteria(double loglik, int n_params, int nobs) {
  const double T = nobs;
  const double base = -2.0 * loglik / T;
  return {base + 2.0 * n_params / T, base + n_params * std::log(T) / T,
          base + 2.0 * n_params * std::log(std::log(T)) / T};
}

Eigen::MatrixXd VarModel::deterministic_coef() const {
  const Eigen::Index first = static_cast<Eigen::Index>(K) * order;
  return coef.middleRows(first, det.count()).transpose();
}

Eigen::MatrixXd VarModel::dummy_coef() const {
  const Eigen::Index first = static_cast<Eigen::Index>(K) * order + det.count();
  return coef.middleRows(first, static_cast<Eigen::Index>(dummy_names.size())).transpose();
}

namespace {

struct Design {
  Eigen::MatrixXd X, Y;
  std::vector<std::string> names;
};

Design var_design(const PricePanel& panel, int p, DeterministicTerms det, const DummyMatrix& dummies,
                  Eigen::Index start) {
  const auto& v = panel.values();
  const Eigen::Index T = v.rows(), K = v.cols();
  const Eigen::Index n = T - start;
  const Eigen::Index m = K * p + det.count() + dummies.cols();
  Design d{Eigen::MatrixXd(n, m), v.bottomRows(n), {}};
  for (Eigen::Index j = 0; j < K; ++j)
    for (int i = 1; i <= p; ++i) {
      d.X.col(j * p + (i - 1)) = v.col(j).segment(start - i, n);
      d.names.push_back(panel.names()[static_cast<std::size_t>(j)] + "(-" + std::to_string(i) + ")");
    }
  Eigen::Index c = K * p;
  if (det.constant) {
    d.X.col(c++).setOnes();
    d.names.emplace_back("C");
  }
  if (det.trend) {
    for (Eigen::Index r = 0; r < n; ++r) d.X(r, c) = static_cast<double>(start + r);
    ++c;
    d.names.emplace_back("trend");
  }
  for (Eigen::Index j = 0; j < dummies.cols(); ++j) {
    d.X.col(c++) = dummies.values.col(j).segment(start, n);
    d.names.push_back(dummies.names[static_cast<std::size_t>(j)]);
  }
  return d;
}

}  // namespace

VarModel fit_var(const PricePanel& panel, int p, DeterministicTerms det, const DummyMatrix& dummies,
                 std::optional<Eigen::Index> sample_start) {
  if (p < 0) throw DataError("VAR order must be non-negative");
  const Eigen::Index T = panel.rows(), K = panel.cols();
  if (dummies.values.rows() != T) throw DataError("dummy matrix is not aligned with the panel");
  const Eigen::Index start = sample_start.value_or(p);
  if (start < p || start >= T) throw DataError("invalid VAR estimation sample");
  const Eigen::Index n = T - start;
  const Eigen::Index m = K * p + det.count() + dummies.cols();
  if (n <= m) throw DataError("insufficient sample: " + std::to_string(n) + " observations for " +
                              std::to_string(m) + " regressors per equation");

  auto d = var_design(panel, p, det, dummies, start);
  auto fit = least_squares(d.X, d.Y);

  VarModel out;
  out.order = p;
  out.K = static_cast<int>(K);
  out.T_eff = static_cast<int>(n);
  out.sample_start = start;
  out.names = panel.names();
  out.regressor_names = std::move(d.names);
  out.sample_dates.assign(panel.dates().begin() + start, panel.dates().end());
  out.det = det;
  out.dummy_names = dummies.names;
  out.coef = fit.coef;
  out.std_errors = fit.std_errors();
  out.t_stats = fit.coef.cwiseQuotient(out.std_errors);
  out.X = std::move(d.X);
  out.Y = std::move(d.Y);
  out.residuals = fit.residuals;
  out.sigma_ml = out.residuals.transpose() * out.residuals / static_cast<double>(n);
  out.sigma = out.residuals.transpose() * out.residuals / static_cast<double>(n - m);

  out.lag_matrices.assign(static_cast<std::size_t>(p), Eigen::MatrixXd::Zero(K, K));
  for (int i = 1; i <= p; ++i)
    for (Eigen::Index j = 0; j < K; ++j)
      out.lag_matrices[static_cast<std::size_t>(i - 1)].col(j) = out.coef.row(j * p + (i - 1)).transpose();

  const double nd = static_cast<double>(n);
  const Eigen::VectorXd ssr = fit.ssr();
  out.adj_r2.resize(K);
  out.eq_loglik.resize(K);
  out.eq_aic.resize(K);
  out.eq_sc.resize(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    const double sst = (out.Y.col(k).array() - out.Y.col(k).mean()).square().sum();
    out.adj_r2(k) = 1.0 - (ssr(k) / (nd - m)) / (sst / (nd - 1.0));
    out.eq_loglik(k) = -0.5 * nd * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(ssr(k) / nd));
    auto ic = information_criteria(out.eq_loglik(k), static_cast<int>(m), static_cast<int>(n));
    out.eq_aic(k) = ic.aic;
    out.eq_sc(k) = ic.sc;
  }
  out.loglik = gaussian_loglik(out.residuals);
  out.n_params = static_cast<int>(K * m);
  out.ic = information_criteria(out.loglik, out.n_params, out.T_eff);
  return out;
}

LagSelectionTable lag_order_selection(const PricePanel& panel, int max_lag, DeterministicTerms det,
                                      const DummyMatrix& dummies, double lr_level) {
  if (max_lag < 1) throw DataError("max_lag must be at least 1");
  LagSelectionTable table;
  const int K = static_cast<int>(panel.cols());
  std::vector<double> logdets;
  for (int lag = 0; lag <= max_lag; ++lag) {
    auto model = fit_var(panel, lag, det, dummies, max_lag);
    const int m = model.regressors_per_equation();
    const double T = model.T_eff;
    LagSelectionRow row;
    row.lag = lag;
    row.loglik = model.loglik;
    row.n_params = model.n_params;
    row.ic = model.ic;
    const double logdet = logdet_spd(model.sigma_ml, "residual covariance");
    row.fpe = std::exp(logdet) * std::pow((T + m) / (T - m), K);
    if (lag == 0) {
      row.lr = std::numeric_limits<double>::quiet_NaN();
      row.lr_p = std::numeric_limits<double>::quiet_NaN();
    } else {
      row.lr = (T - m) * (logdets.back() - logdet);
      row.lr_p = dist::chi2_sf(row.lr, static_cast<double>(K) * K);
    }
    logdets.push_back(logdet);
    table.T_eff = model.T_eff;
    table.rows.push_back(row);
  }
  auto argmin = [&](auto value) {
    int best = 0;
    for (int i = 1; i <= max_lag; ++i)
      if (value(table.rows[static_cast<std::size_t>(i)]) < value(table.rows[static_cast<std::size_t>(best)]))
        best = i;
    return best;
  };
  table.selected_fpe = argmin([](const LagSelectionRow& r) { return r.fpe; });
  table.selected_aic = argmin([](const LagSelectionRow& r) { return r.ic.aic; });
  table.selected_sc = argmin([](const LagSelectionRow& r) { return r.ic.sc; });
  table.selected_hq = argmin([](const LagSelectionRow& r) { return r.ic.hq; });
  table.selected_lr = 0;
  for (int i = max_lag; i >= 1; --i) {
    if (table.rows[static_cast<std::size_t>(i)].lr_p < lr_level) {
      table.selected_lr = i;
      break;
    }
  }
  return table;
}

std::vector<SerialCorrelationRow> lm_serial_test(const VarModel& model, int h_max) {
  if (h_max < 1) throw DataError("h_max must be at least 1");
  const Eigen::Index T = model.residuals.rows();
  const Eigen::Index K = model.K;
  const Eigen::Index k = model.X.cols();
  const double Kd = static_cast<double>(K);
  if (T - k - K <= 1) throw DataError("insufficient residual sample for the LM auxiliary regression");

  const Eigen::MatrixXd& U = model.residuals;
  const double logdet_r = logdet_spd(partial_out(model.X, U).transpose() * partial_out(model.X, U) /
                                         static_cast<double>(T),
                                     "restricted residual covariance");

  const double q = Kd * Kd / 2.0 - 1.0;
  const double s2_den = Kd * Kd + Kd * Kd - 5.0;
  const double s = s2_den > 0 ? std::sqrt((Kd * Kd * Kd * Kd - 4.0) / s2_den) : 1.0;
  const double N = static_cast<double>(T - k) - Kd - 0.5;

  std::vector<SerialCorrelationRow> rows;
  for (int h = 1; h <= h_max; ++h) {
    if (h >= T) throw DataError("lag h exceeds the residual sample");
    Eigen::MatrixXd Xa(T, k + K);
    Xa.leftCols(k) = model.X;
    Xa.rightCols(K).setZero();
    Xa.bottomRightCorner(T - h, K) = U.topRows(T - h);
    auto fit = least_squares(Xa, U);
    const double logdet_u =
        logdet_spd(fit.residuals.transpose() * fit.residuals / static_cast<double>(T), "auxiliary covariance");
    const double log_ratio = logdet_r - logdet_u;

    SerialCorrelationRow row;
    row.h = h;
    row.lre = N * log_ratio;
    row.lre_df = static_cast<int>(K * K);
    row.lre_p = dist::chi2_sf(row.lre, row.lre_df);
    row.f_df1 = Kd * Kd;
    row.f_df2 = N * s - q;
    row.rao_f = (std::exp(log_ratio / s) - 1.0) * row.f_df2 / row.f_df1;
    row.f_p = dist::f_sf(row.rao_f, row.f_df1, row.f_df2);
    rows.push_back(row);
  }
  return rows;
}

NormalityReport jarque_bera_cholesky(const Eigen::MatrixXd& residuals) {
  const Eigen::Index T = residuals.rows(), K = residuals.cols();
  if (T < 3) throw DataError("too few residuals for a normality test");
  Eigen::MatrixXd centered = residuals.rowwise() - residuals.colwise().mean();
  Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(T);
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw NumericalError("singular residual covariance");
  Eigen::MatrixXd L = llt.matrixL();
  for (Eigen::Index i = 0; i < K; ++i)
    if (!(L(i, i) > 1e-14 * std::sqrt(cov.diagonal().maxCoeff())))
      throw NumericalError("singular residual covariance");
  // w_t = L^{-1} u_t, stored row-wise
  Eigen::MatrixXd W = L.triangularView<Eigen::Lower>().solve(centered.transpose()).transpose();

  NormalityReport rep;
  const double Td = static_cast<double>(T);
  double joint = 0.0, joint_skew = 0.0, joint_kurt = 0.0;
  for (Eigen::Index k = 0; k < K; ++k) {
    const auto w = W.col(k).array();
    NormalityRow row;
    row.label = std::to_string(k + 1);
    row.skewness = w.cube().mean();
    row.kurtosis = w.square().square().mean();
    const double skew_stat = Td * row.skewness * row.skewness / 6.0;
    const double kurt_stat = Td * (row.kurtosis - 3.0) * (row.kurtosis - 3.0) / 24.0;
    row.jb = skew_stat + kurt_stat;
    row.df = 2;
    row.p = dist::chi2_sf(row.jb, 2.0);
    joint += row.jb;
    joint_skew += skew_stat;
    joint_kurt += kurt_stat;
    rep.components.push_back(row);
  }
  rep.joint.label = "Joint";
  rep.joint.jb = joint;
  rep.joint.df = static_cast<int>(2 * K);
  rep.joint.p = dist::chi2_sf(joint, 2.0 * K);
  rep.joint.skewness = std::numeric_limits<double>::quiet_NaN();
  rep.joint.kurtosis = std::numeric_limits<double>::quiet_NaN();
  return rep;
}

NormalityReport jarque_bera_test(const VarModel& model) { return jarque_bera_cholesky(model.residuals); }

StabilityReport companion_roots(const std::vector<Eigen::MatrixXd>& lags) {
  StabilityReport rep;
  if (lags.empty()) return rep;
  const Eigen::Index K = lags.front().rows();
  const Eigen::Index p = static_cast<Eigen::Index>(lags.size());
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(K * p, K * p);
  for (Eigen::Index i = 0; i < p; ++i) C.block(0, i * K, K, K) = lags[static_cast<std::size_t>(i)];
  if (p > 1) C.bottomLeftCorner(K * (p - 1), K * (p - 1)).setIdentity();
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  if (es.info() != Eigen::Success) throw NumericalError("companion eigenvalue computation failed");
  const Eigen::VectorXcd ev = es.eigenvalues();
  rep.roots.assign(ev.data(), ev.data() + ev.size());
  std::stable_sort(rep.roots.begin(), rep.roots.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return a.imag() > b.imag();
  });
  for (const auto& r : rep.roots) {
    rep.moduli.push_back(std::abs(r));
    if (!(std::abs(r) < 1.0)) rep.stable = false;
  }
  return rep;
}

StabilityReport stability_roots(const VarModel& model) { return companion_roots(model.lag_matrices); }

DiagnosticsReport diagnose(const VarModel& model, int h_max) {
  return {lm_serial_test(model, h_max), jarque_bera_test(model), stability_roots(model)};
}

}  // namespace lopcoint
