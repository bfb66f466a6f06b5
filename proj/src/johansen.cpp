#include "lopcoint/johansen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "lopcoint/detail/johansen_tables.hpp"
#include "lopcoint/distributions.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/regression.hpp"

namespace lopcoint {

std::string to_string(JohansenCase c) {
  switch (c) {
    case JohansenCase::none: return "none";
    case JohansenCase::restricted_constant: return "restricted_constant";
    case JohansenCase::unrestricted_constant: return "unrestricted_constant";
    case JohansenCase::restricted_trend: return "restricted_trend";
    case JohansenCase::unrestricted_trend: return "unrestricted_trend";
  }
  return "?";
}

JohansenCase johansen_case_from_string(const std::string& s) {
  if (s == "1" || s == "none") return JohansenCase::none;
  if (s == "2" || s == "restricted_constant") return JohansenCase::restricted_constant;
  if (s == "3" || s == "unrestricted_constant") return JohansenCase::unrestricted_constant;
  if (s == "4" || s == "restricted_trend") return JohansenCase::restricted_trend;
  if (s == "5" || s == "unrestricted_trend") return JohansenCase::unrestricted_trend;
  throw DataError("unknown Johansen case '" + s + "' (use 1-5 or a case name)");
}

int restricted_rows(JohansenCase c) {
  return c == JohansenCase::restricted_constant || c == JohansenCase::restricted_trend ? 1 : 0;
}

double JohansenResult::loglik(int rank) const {
  if (rank < 0 || rank > K) throw ModelError("rank out of range");
  double s = 0.0;
  for (int i = 0; i < rank; ++i) s += std::log1p(-eigenvalues(i));
  return -0.5 * T_eff *
         (K * (1.0 + std::log(2.0 * std::numbers::pi)) + logdet_spd(S00, "S00") + s);
}

namespace {

void require_well_conditioned(const Eigen::MatrixXd& S, const char* what) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  const double hi = es.eigenvalues().maxCoeff();
  const double lo = es.eigenvalues().minCoeff();
  if (!(hi > 0.0) || lo <= 1e-12 * hi)
    throw NumericalError(std::string(what) + " is singular (collinear inputs)");
}

}  // namespace

JohansenResult reduced_rank_regression(const PricePanel& panel, int lags, JohansenCase jcase,
                                       const DummyMatrix& dummies) {
  if (lags < 1) throw DataError("VAR order k must be at least 1");
  const Eigen::Index T = panel.rows(), K = panel.cols();
  if (lags >= T) throw DataError("VAR order k must be smaller than the sample size");
  if (dummies.values.rows() != T) throw DataError("dummy matrix is not aligned with the panel");
  const auto& y = panel.values();
  const Eigen::Index start = lags;
  const Eigen::Index n = T - start;
  const int extra = restricted_rows(jcase);
  const Eigen::Index p1 = K + extra;

  const bool u_const = jcase == JohansenCase::unrestricted_constant || jcase == JohansenCase::restricted_trend ||
                       jcase == JohansenCase::unrestricted_trend;
  const bool u_trend = jcase == JohansenCase::unrestricted_trend;
  const Eigen::Index q = K * (lags - 1) + (u_const ? 1 : 0) + (u_trend ? 1 : 0) + dummies.cols();
  if (n <= q + p1) throw DataError("insufficient sample for the reduced-rank regression");

  Eigen::MatrixXd Z0(n, K), Z1(n, p1), Z2(n, q);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::Index t = start + r;
    Z0.row(r) = y.row(t) - y.row(t - 1);
    Z1.row(r).head(K) = y.row(t - 1);
    if (jcase == JohansenCase::restricted_constant) Z1(r, K) = 1.0;
    if (jcase == JohansenCase::restricted_trend) Z1(r, K) = static_cast<double>(t);
    Eigen::Index c = 0;
    for (Eigen::Index j = 0; j < K; ++j)
      for (int i = 1; i < lags; ++i) Z2(r, c++) = y(t - i, j) - y(t - i - 1, j);
    if (u_const) Z2(r, c++) = 1.0;
    if (u_trend) Z2(r, c++) = static_cast<double>(t);
    for (Eigen::Index j = 0; j < dummies.cols(); ++j) Z2(r, c++) = dummies.values(t, j);
  }

  JohansenResult out;
  out.jcase = jcase;
  out.K = static_cast<int>(K);
  out.lags = lags;
  out.T_eff = static_cast<int>(n);
  out.sample_start = start;
  out.names = panel.names();
  if (jcase == JohansenCase::restricted_constant) out.names.emplace_back("C");
  if (jcase == JohansenCase::restricted_trend) out.names.emplace_back("trend");

  out.R0 = partial_out(Z2, Z0);
  out.R1 = partial_out(Z2, Z1);
  out.Z2 = std::move(Z2);
  const double nd = static_cast<double>(n);
  out.S00 = out.R0.transpose() * out.R0 / nd;
  out.S11 = out.R1.transpose() * out.R1 / nd;
  out.S01 = out.R0.transpose() * out.R1 / nd;
  require_well_conditioned(out.S00, "S00");
  require_well_conditioned(out.S11, "S11");

  // Cholesky reduction: S11 = L L', C = L^{-1} S10 S00^{-1} S01 L^{-T}.
  Eigen::LLT<Eigen::MatrixXd> l11(out.S11);
  Eigen::LLT<Eigen::MatrixXd> l00(out.S00);
  Eigen::MatrixXd L = l11.matrixL();
  Eigen::MatrixXd G = L.triangularView<Eigen::Lower>().solve(out.S01.transpose());  // L^{-1} S10
  Eigen::MatrixXd C = G * l00.solve(G.transpose());
  C = 0.5 * (C + C.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
  if (es.info() != Eigen::Success) throw NumericalError("eigenvalue problem did not converge");

  out.eigenvalues.resize(K);
  out.eigenvectors.resize(p1, K);
  for (Eigen::Index i = 0; i < K; ++i) {
    const Eigen::Index src = p1 - 1 - i;  // ascending -> descending
    out.eigenvalues(i) = std::clamp(es.eigenvalues()(src), 0.0, 1.0 - 1e-15);
    out.eigenvectors.col(i) = L.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors().col(src));
  }

  out.trace.resize(K);
  out.max_eigen.resize(K);
  double acc = 0.0;
  for (Eigen::Index i = K - 1; i >= 0; --i) {
    const double term = -nd * std::log1p(-out.eigenvalues(i));
    acc += term;
    out.trace(i) = acc;
    out.max_eigen(i) = term;
  }
  return out;
}

namespace {

const double* quantiles_for(int dim, JohansenCase jcase, JohansenStatistic which) {
  if (dim < 1 || dim > detail::kJohansenMaxDim)
    throw ModelError("no embedded critical values for K - r = " + std::to_string(dim) + " (supported: 1.." +
                     std::to_string(detail::kJohansenMaxDim) + ")");
  return detail::kJohansenQuantileTable[static_cast<int>(jcase) - 1][dim - 1]
                                       [which == JohansenStatistic::trace ? 0 : 1];
}

double tail_z(int i) { return dist::normal_quantile(1.0 - detail::kJohansenTail[i]); }

}  // namespace

double johansen_pvalue(double statistic, int dim, JohansenCase jcase, JohansenStatistic which) {
  constexpr double lo = 1e-4, hi = 0.9999;
  const double* q = quantiles_for(dim, jcase, which);
  constexpr int n = detail::kJohansenQuantiles;
  if (!(statistic > q[0])) return hi;
  if (statistic >= q[n - 1]) return lo;
  int i = 0;
  while (i + 1 < n - 1 && statistic >= q[i + 1]) ++i;
  const double span = q[i + 1] - q[i];
  const double w = span > 0 ? (statistic - q[i]) / span : 0.0;
  const double z = tail_z(i) + w * (tail_z(i + 1) - tail_z(i));
  return std::clamp(1.0 - dist::normal_cdf(z), lo, hi);
}

double johansen_critical_value(double level, int dim, JohansenCase jcase, JohansenStatistic which) {
  const double* q = quantiles_for(dim, jcase, which);
  constexpr int n = detail::kJohansenQuantiles;
  if (level > detail::kJohansenTail[0] || level < detail::kJohansenTail[n - 1])
    throw ModelError("significance level outside the tabulated range");
  const double z = dist::normal_quantile(1.0 - level);
  int i = 0;
  while (i + 1 < n - 1 && z > tail_z(i + 1)) ++i;
  const double w = (z - tail_z(i)) / (tail_z(i + 1) - tail_z(i));
  return q[i] + w * (q[i + 1] - q[i]);
}

namespace {

RankTestTable rank_table(const JohansenResult& res, double level, JohansenStatistic which) {
  RankTestTable table;
  const Eigen::VectorXd& stats = which == JohansenStatistic::trace ? res.trace : res.max_eigen;
  for (int r = 0; r < res.K; ++r) {
    RankTestRow row;
    row.r = r;
    row.eigenvalue = res.eigenvalues(r);
    row.statistic = stats(r);
    row.critical_value = johansen_critical_value(level, res.K - r, res.jcase, which);
    row.p_value = johansen_pvalue(row.statistic, res.K - r, res.jcase, which);
    row.reject = row.p_value < level;
    table.push_back(row);
  }
  return table;
}

int first_not_rejected(const RankTestTable& t) {
  for (const auto& row : t)
    if (!row.reject) return row.r;
  return static_cast<int>(t.size());
}

}  // namespace

RankTestTable trace_test(const JohansenResult& result, double level) {
  return rank_table(result, level, JohansenStatistic::trace);
}

RankTestTable max_eigen_test(const JohansenResult& result, double level) {
  return rank_table(result, level, JohansenStatistic::max_eigen);
}

RankPolicy rank_policy_from_string(const std::string& s) {
  if (s == "trace") return RankPolicy::trace;
  if (s == "maxeig" || s == "max_eigen") return RankPolicy::max_eigen;
  if (s == "agree") return RankPolicy::agree;
  throw DataError("unknown rank policy '" + s + "' (trace, maxeig, agree)");
}

RankSelection select_rank(const RankTestTable& trace, const RankTestTable& max_eigen, RankPolicy policy) {
  if (trace.size() != max_eigen.size()) throw ModelError("rank tables come from different results");
  const int K = static_cast<int>(trace.size());
  const int rt = first_not_rejected(trace);
  const int rm = first_not_rejected(max_eigen);
  int r = 0;
  switch (policy) {
    case RankPolicy::trace: r = rt; break;
    case RankPolicy::max_eigen: r = rm; break;
    case RankPolicy::agree:
      if (rt != rm)
        throw ModelError("trace (r = " + std::to_string(rt) + ") and maximum-eigenvalue (r = " + std::to_string(rm) +
                         ") tests disagree");
      r = rt;
      break;
  }
  RankSelection sel;
  if (r >= K) {
    sel.rank = K - 1;
    sel.warning = "every hypothesis up to r = " + std::to_string(K - 1) +
                  " is rejected; full rank suggests stationary levels";
  } else {
    sel.rank = r;
  }
  return sel;
}

}  // namespace lopcoint
