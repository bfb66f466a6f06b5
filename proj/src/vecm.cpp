#include "lopcoint/vecm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "lopcoint/detail/text.hpp"
#include "lopcoint/distributions.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/regression.hpp"
#include "lopcoint/rng.hpp"

namespace lopcoint {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool has_unrestricted_constant(JohansenCase c) {
  return c == JohansenCase::unrestricted_constant || c == JohansenCase::restricted_trend ||
         c == JohansenCase::unrestricted_trend;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  Eigen::MatrixXd out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

double concentrated_loglik(const Eigen::MatrixXd& omega, int T) {
  const auto K = static_cast<double>(omega.rows());
  return -0.5 * T * (K * (1.0 + std::log(2.0 * std::numbers::pi)) + logdet_spd(omega, "residual covariance"));
}

}  // namespace

NormalizedBeta normalize_beta(const Eigen::MatrixXd& beta, std::vector<int> pivots) {
  const Eigen::Index r = beta.cols();
  if (pivots.empty())
    for (int j = 0; j < r; ++j) pivots.push_back(j);
  if (static_cast<Eigen::Index>(pivots.size()) != r) throw ModelError("one pivot per cointegration vector is required");
  Eigen::MatrixXd c(r, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    if (pivots[j] < 0 || pivots[j] >= beta.rows()) throw ModelError("pivot index out of range");
    if (std::count(pivots.begin(), pivots.end(), pivots[j]) > 1) throw ModelError("pivots must be distinct");
    c.row(j) = beta.row(pivots[j]);
  }
  const double scale = beta.cwiseAbs().maxCoeff();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(c);
  if (!(scale > 0) || svd.singularValues()(r - 1) <= 1e-12 * scale)
    throw ModelError("pivot coefficient is zero; choose another variable");
  NormalizedBeta out;
  out.beta = beta * c.inverse();
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i < r; ++i) out.beta(pivots[i], j) = i == j ? 1.0 : 0.0;
  out.pivots = std::move(pivots);
  return out;
}

std::string long_run_equation(const Eigen::VectorXd& vector, const std::vector<std::string>& names, int pivot,
                              std::optional<double> relation_constant, int decimals) {
  if (static_cast<Eigen::Index>(names.size()) != vector.size()) throw ModelError("names do not match the vector");
  if (pivot < 0 || pivot >= vector.size() || vector(pivot) == 0.0)
    throw ModelError("pivot coefficient is zero; choose another variable");
  std::string out = names[pivot] + " =";
  bool first = true;
  auto term = [&](double v, const std::string& label) {
    const char* sign = v < 0 ? "-" : "+";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, std::abs(v));
    const std::string mag = buf;
    if (first)
      out += v < 0 ? " -" : " ";
    else
      out += std::string(" ") + sign + " ";
    out += mag;
    if (!label.empty()) out += "*" + label;
    first = false;
  };
  for (Eigen::Index i = 0; i < vector.size(); ++i) {
    if (i == pivot) continue;
    const double v = -vector(i) / vector(pivot);
    term(v, names[i] == "C" ? std::string() : names[i]);
  }
  if (relation_constant) term(-*relation_constant / vector(pivot), "");
  if (first) out += " 0";
  return out;
}

Eigen::MatrixXd VecmModel::pi() const { return alpha * beta.topRows(K).transpose(); }

Eigen::MatrixXd VecmModel::deterministic_coef() const {
  const int start = rank + K * lags;
  const int n = (has_unrestricted_constant(jcase) ? 1 : 0) + (jcase == JohansenCase::unrestricted_trend ? 1 : 0);
  return coef.middleRows(start, n).transpose();
}

Eigen::MatrixXd VecmModel::dummy_coef() const {
  const auto d = static_cast<Eigen::Index>(dummy_names.size());
  return coef.bottomRows(d).transpose();
}

VecmModel fit_vecm(const PricePanel& panel, int lags, int rank, JohansenCase jcase, const DummyMatrix& dummies,
                   std::vector<int> pivots) {
  const int K = static_cast<int>(panel.cols());
  if (lags < 1) throw ModelError("VECM needs at least one lagged difference (k >= 2)");
  if (rank < 1 || rank > K - 1)
    throw ModelError("cointegration rank must be between 1 and " + std::to_string(K - 1) + ", got " +
                     std::to_string(rank));

  VecmModel m;
  m.johansen = reduced_rank_regression(panel, lags + 1, jcase, dummies);
  const auto& jr = m.johansen;
  m.rank = rank;
  m.K = K;
  m.lags = lags;
  m.jcase = jcase;
  m.T_eff = jr.T_eff;
  m.sample_start = jr.sample_start;
  m.names = panel.names();
  m.beta_names = jr.names;
  m.dummy_names = dummies.names;
  m.sample_dates.assign(panel.dates().begin() + m.sample_start, panel.dates().end());

  auto nb = normalize_beta(jr.eigenvectors.leftCols(rank), std::move(pivots));
  m.beta = nb.beta;
  m.pivots = nb.pivots;

  const Eigen::Index n = jr.T_eff, p1 = m.beta.rows();
  const auto& y = panel.values();
  m.levels_lagged.resize(n, p1);
  Eigen::MatrixXd dY(n, K);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Eigen::Index t = m.sample_start + r;
    m.levels_lagged.row(r).head(K) = y.row(t - 1);
    if (jcase == JohansenCase::restricted_constant) m.levels_lagged(r, K) = 1.0;
    if (jcase == JohansenCase::restricted_trend) m.levels_lagged(r, K) = static_cast<double>(t);
    dY.row(r) = y.row(t) - y.row(t - 1);
  }
  m.ect = m.levels_lagged * m.beta;
  Eigen::MatrixXd ec = m.ect;
  if (jcase == JohansenCase::unrestricted_constant) {
    m.ce_intercept = -m.ect.colwise().mean().transpose();
    ec.rowwise() += m.ce_intercept.transpose();
  }

  const bool u_const = has_unrestricted_constant(jcase);
  const bool u_trend = jcase == JohansenCase::unrestricted_trend;
  const Eigen::Index ncols = rank + K * lags + (u_const ? 1 : 0) + (u_trend ? 1 : 0) + dummies.cols();
  Eigen::MatrixXd X(n, ncols);
  X.leftCols(rank) = ec;
  for (int j = 0; j < rank; ++j) m.regressor_names.push_back("CointEq" + std::to_string(j + 1));
  for (int v = 0; v < K; ++v)
    for (int i = 1; i <= lags; ++i) {
      for (Eigen::Index r = 0; r < n; ++r) {
        const Eigen::Index t = m.sample_start + r;
        X(r, m.lagged_difference_column(v, i)) = y(t - i, v) - y(t - i - 1, v);
      }
      m.regressor_names.push_back("D(" + m.names[v] + "(-" + std::to_string(i) + "))");
    }
  Eigen::Index c = rank + K * lags;
  if (u_const) {
    X.col(c++).setOnes();
    m.regressor_names.emplace_back("C");
  }
  if (u_trend) {
    for (Eigen::Index r = 0; r < n; ++r) X(r, c) = static_cast<double>(m.sample_start + r);
    ++c;
    m.regressor_names.emplace_back("trend");
  }
  for (Eigen::Index j = 0; j < dummies.cols(); ++j) {
    X.col(c++) = dummies.values.col(j).segment(m.sample_start, n);
    m.regressor_names.push_back(dummies.names[j]);
  }

  const LeastSquares ls = least_squares(X, dY);
  m.X = std::move(X);
  m.Y = std::move(dY);
  m.coef = ls.coef;
  m.std_errors = ls.std_errors();
  m.t_stats = ls.t_stats();
  m.xtx_inv = ls.xtx_inv;
  m.residuals = ls.residuals;
  const double nd = static_cast<double>(n);
  const double mreg = static_cast<double>(ncols);
  m.sigma_ml = m.residuals.transpose() * m.residuals / nd;
  m.sigma = m.residuals.transpose() * m.residuals / (nd - mreg);

  m.alpha = m.coef.topRows(rank).transpose();
  m.alpha_se = m.std_errors.topRows(rank).transpose();
  m.alpha_t = m.t_stats.topRows(rank).transpose();
  for (int i = 1; i <= lags; ++i) {
    Eigen::MatrixXd g(K, K), gt(K, K);
    for (int v = 0; v < K; ++v) {
      g.col(v) = m.coef.row(m.lagged_difference_column(v, i)).transpose();
      gt.col(v) = m.t_stats.row(m.lagged_difference_column(v, i)).transpose();
    }
    m.gamma.push_back(g);
    m.gamma_t.push_back(gt);
  }

  // beta inference
  std::vector<Eigen::Index> free_rows;
  for (Eigen::Index i = 0; i < p1; ++i)
    if (std::find(m.pivots.begin(), m.pivots.end(), static_cast<int>(i)) == m.pivots.end()) free_rows.push_back(i);
  const auto nf = static_cast<Eigen::Index>(free_rows.size());
  Eigen::MatrixXd HSH(nf, nf);
  for (Eigen::Index a = 0; a < nf; ++a)
    for (Eigen::Index b = 0; b < nf; ++b) HSH(a, b) = jr.S11(free_rows[a], free_rows[b]);
  const Eigen::MatrixXd M = m.alpha.transpose() * m.sigma_ml.ldlt().solve(m.alpha);
  const Eigen::MatrixXd Minv = M.inverse();
  const Eigen::MatrixXd Winv = HSH.inverse();
  m.beta_se = Eigen::MatrixXd::Constant(p1, rank, kNaN);
  m.beta_t = Eigen::MatrixXd::Constant(p1, rank, kNaN);
  for (Eigen::Index j = 0; j < rank; ++j)
    for (Eigen::Index a = 0; a < nf; ++a) {
      const double se = std::sqrt(Minv(j, j) * Winv(a, a) / nd);
      m.beta_se(free_rows[a], j) = se;
      m.beta_t(free_rows[a], j) = m.beta(free_rows[a], j) / se;
    }

  m.adj_r2.resize(K);
  m.eq_loglik.resize(K);
  m.eq_aic.resize(K);
  m.eq_sc.resize(K);
  const Eigen::VectorXd ssr = ls.ssr();
  for (Eigen::Index k = 0; k < K; ++k) {
    const double sst = (m.Y.col(k).array() - m.Y.col(k).mean()).square().sum();
    m.adj_r2(k) = 1.0 - (ssr(k) / (nd - mreg)) / (sst / (nd - 1.0));
    m.eq_loglik(k) = -0.5 * nd * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(ssr(k) / nd));
    const auto ic = information_criteria(m.eq_loglik(k), static_cast<int>(ncols), static_cast<int>(n));
    m.eq_aic(k) = ic.aic;
    m.eq_sc(k) = ic.sc;
  }
  m.loglik = gaussian_loglik(m.residuals);
  m.n_params = static_cast<int>(K * ncols + rank * (p1 - rank));
  m.ic = information_criteria(m.loglik, m.n_params, static_cast<int>(n));
  return m;
}

Eigen::MatrixXd ect_series(const VecmModel& model) { return model.levels_lagged * model.beta; }

std::vector<Eigen::MatrixXd> vecm_to_var(const Eigen::MatrixXd& Pi, const std::vector<Eigen::MatrixXd>& gamma) {
  const Eigen::Index K = Pi.rows();
  const std::size_t L = gamma.size();
  std::vector<Eigen::MatrixXd> pi(L + 1);
  pi[0] = Eigen::MatrixXd::Identity(K, K) + Pi + (L > 0 ? gamma[0] : Eigen::MatrixXd::Zero(K, K));
  for (std::size_t i = 1; i < L; ++i) pi[i] = gamma[i] - gamma[i - 1];
  if (L > 0) pi[L] = -gamma[L - 1];
  return pi;
}

std::pair<Eigen::MatrixXd, std::vector<Eigen::MatrixXd>> var_to_vecm(const std::vector<Eigen::MatrixXd>& pi) {
  if (pi.empty()) throw ModelError("VAR has no lag matrices");
  const Eigen::Index K = pi[0].rows();
  Eigen::MatrixXd Pi = -Eigen::MatrixXd::Identity(K, K);
  for (const auto& p : pi) Pi += p;
  std::vector<Eigen::MatrixXd> gamma(pi.size() - 1, Eigen::MatrixXd::Zero(K, K));
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j) gamma[i] -= pi[j];
  return {Pi, gamma};
}

GrangerResult granger_wald(const VecmModel& model, double level) {
  GrangerResult out;
  out.names = model.names;
  out.level = level;
  if (model.lags < 1) throw ModelError("Granger tests need at least one lagged difference");
  const int K = model.K, L = model.lags;
  const Eigen::VectorXd s2 =
      model.residuals.colwise().squaredNorm().transpose() / static_cast<double>(model.X.rows() - model.X.cols());
  auto wald = [&](int dep, const std::vector<int>& cols) {
    const auto q = static_cast<Eigen::Index>(cols.size());
    Eigen::VectorXd b(q);
    Eigen::MatrixXd V(q, q);
    for (Eigen::Index a = 0; a < q; ++a) {
      b(a) = model.coef(cols[a], dep);
      for (Eigen::Index c = 0; c < q; ++c) V(a, c) = s2(dep) * model.xtx_inv(cols[a], cols[c]);
    }
    Eigen::LLT<Eigen::MatrixXd> llt(V);
    if (llt.info() != Eigen::Success) throw NumericalError("singular coefficient covariance in Granger test");
    return std::max(0.0, b.dot(llt.solve(b)));
  };
  for (int dep = 0; dep < K; ++dep) {
    std::vector<int> all_cols;
    for (int ex = 0; ex < K; ++ex) {
      if (ex == dep) continue;
      std::vector<int> cols;
      for (int i = 1; i <= L; ++i) cols.push_back(model.lagged_difference_column(ex, i));
      all_cols.insert(all_cols.end(), cols.begin(), cols.end());
      GrangerRow row{dep, ex, wald(dep, cols), L, 1.0, false};
      row.p = dist::chi2_sf(row.chi2, row.df);
      row.reject = row.p < level;
      out.pairs.push_back(row);
    }
    if (all_cols.empty()) continue;
    GrangerRow row{dep, -1, wald(dep, all_cols), (K - 1) * L, 1.0, false};
    row.p = dist::chi2_sf(row.chi2, row.df);
    row.reject = row.p < level;
    out.all.push_back(row);
  }
  return out;
}

RestrictionSpec RestrictionSpec::parse(const std::string& text, std::string label) {
  RestrictionSpec spec;
  spec.label = std::move(label);
  for (const auto& vec_text : detail::split(text, ';')) {
    if (detail::trim(vec_text).empty()) continue;
    std::vector<std::optional<double>> v;
    for (const auto& field : detail::split(vec_text, ',')) {
      const std::string f(detail::trim(field));
      if (f == "*")
        v.emplace_back(std::nullopt);
      else if (auto x = detail::parse_double(f))
        v.emplace_back(*x);
      else
        throw DataError("bad restriction entry '" + f + "' (use numbers or '*')");
    }
    spec.pattern.push_back(std::move(v));
  }
  if (spec.pattern.empty()) throw DataError("empty restriction pattern");
  if (spec.label.empty()) spec.label = text;
  return spec;
}

std::string RestrictionSpec::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    if (j) out += "; ";
    out += "[";
    for (std::size_t i = 0; i < pattern[j].size(); ++i) {
      if (i) out += ", ";
      out += pattern[j][i] ? detail::format_number(*pattern[j][i]) : "*";
    }
    out += "]";
  }
  return out;
}

RestrictionSpec align_restriction(const RestrictionSpec& spec, const JohansenResult& jr, int rank) {
  const auto p1 = static_cast<std::size_t>(jr.eigenvectors.rows());
  const auto K = static_cast<std::size_t>(jr.K);
  if (spec.pattern.size() != static_cast<std::size_t>(rank))
    throw ModelError("restriction has " + std::to_string(spec.pattern.size()) + " vector(s) but the rank is " +
                     std::to_string(rank));
  RestrictionSpec out = spec;
  for (auto& v : out.pattern) {
    if (v.size() == p1 + 1 && p1 == K && !v.back())
      v.pop_back();
    else if (v.size() == K && p1 == K + 1)
      v.emplace_back(std::nullopt);
    if (v.size() != p1)
      throw ModelError("restriction vector has " + std::to_string(v.size()) + " entries; the model has " +
                       std::to_string(p1) + " rows in beta");
  }
  bool any_free = false, all_vectors_free = true;
  for (const auto& v : out.pattern) {
    bool has_free = false, has_anchor = false;
    for (const auto& e : v) {
      has_free = has_free || !e;
      has_anchor = has_anchor || (e && *e != 0.0);
    }
    if (!has_anchor) throw ModelError("each restricted vector needs a nonzero fixed entry for normalization");
    any_free = any_free || has_free;
    all_vectors_free = all_vectors_free && has_free;
  }
  if (any_free && !all_vectors_free)
    throw ModelError("restriction must leave a free entry in every vector or fix all of them");
  return out;
}

namespace {

struct LinearRestriction {
  Eigen::MatrixXd H;
  Eigen::VectorXd h;
};

LinearRestriction linear_form(const RestrictionSpec& aligned, Eigen::Index p1) {
  const auto r = static_cast<Eigen::Index>(aligned.pattern.size());
  LinearRestriction lr;
  lr.h = Eigen::VectorXd::Zero(p1 * r);
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i < p1; ++i) {
      const auto& e = aligned.pattern[j][i];
      if (e)
        lr.h(j * p1 + i) = *e;
      else
        free.push_back(j * p1 + i);
    }
  lr.H = Eigen::MatrixXd::Zero(p1 * r, static_cast<Eigen::Index>(free.size()));
  for (std::size_t c = 0; c < free.size(); ++c) lr.H(free[c], static_cast<Eigen::Index>(c)) = 1.0;
  return lr;
}

RestrictionResult finish(std::string label, double ll_u, const RestrictedFit& fit, int df) {
  RestrictionResult res;
  res.label = std::move(label);
  res.loglik_unrestricted = ll_u;
  res.loglik_restricted = fit.loglik;
  res.lr = std::max(0.0, 2.0 * (ll_u - fit.loglik));
  res.df = df;
  res.p_value = dist::chi2_sf(res.lr, df);
  res.beta = fit.beta;
  res.alpha = fit.alpha;
  res.iterations = fit.iterations;
  return res;
}

}  // namespace

RestrictedFit fit_restricted(const JohansenResult& jr, int rank, const Eigen::MatrixXd& H, const Eigen::VectorXd& h,
                             const std::vector<int>& alpha_zero_rows, const SwitchingOptions& options) {
  const Eigen::Index K = jr.K, p1 = jr.eigenvectors.rows(), r = rank;
  if (r < 1 || r > K) throw ModelError("rank out of range for restricted estimation");
  if (h.size() != p1 * r || H.rows() != p1 * r) throw ModelError("restriction dimensions do not match beta");
  const int T = jr.T_eff;
  const Eigen::MatrixXd& S00 = jr.S00;
  const Eigen::MatrixXd& S01 = jr.S01;
  const Eigen::MatrixXd& S11 = jr.S11;
  const Eigen::MatrixXd S10 = S01.transpose();

  std::vector<Eigen::Index> alpha_free;
  for (Eigen::Index i = 0; i < K; ++i)
    if (std::find(alpha_zero_rows.begin(), alpha_zero_rows.end(), static_cast<int>(i)) == alpha_zero_rows.end())
      alpha_free.push_back(i);
  if (alpha_free.empty()) throw ModelError("every adjustment row restricted to zero");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(K, static_cast<Eigen::Index>(alpha_free.size()));
  for (std::size_t c = 0; c < alpha_free.size(); ++c) A(alpha_free[c], static_cast<Eigen::Index>(c)) = 1.0;
  const bool alpha_restricted = !alpha_zero_rows.empty();

  auto omega_of = [&](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const Eigen::MatrixXd sb = S01 * b;
    Eigen::MatrixXd om = S00 - sb * a.transpose() - a * sb.transpose() + a * (b.transpose() * S11 * b) * a.transpose();
    return Eigen::MatrixXd(0.5 * (om + om.transpose()));
  };
  auto alpha_step = [&](const Eigen::MatrixXd& b, const Eigen::MatrixXd& om) {
    const Eigen::MatrixXd B = b.transpose() * S11 * b;
    Eigen::LLT<Eigen::MatrixXd> lb(B);
    if (lb.info() != Eigen::Success) throw NumericalError("restricted beta is degenerate");
    const Eigen::MatrixXd G = lb.solve((S01 * b).transpose()).transpose();
    if (!alpha_restricted) return G;
    const Eigen::MatrixXd OiA = om.llt().solve(A);
    const Eigen::MatrixXd psi = (A.transpose() * OiA).llt().solve(OiA.transpose() * G);
    return Eigen::MatrixXd(A * psi);
  };
  auto beta_step = [&](const Eigen::MatrixXd& a, const Eigen::MatrixXd& om) {
    Eigen::VectorXd vb = h;
    if (H.cols() > 0) {
      const Eigen::MatrixXd Oia = om.llt().solve(a);
      const Eigen::MatrixXd M = a.transpose() * Oia;
      const Eigen::MatrixXd AK = kron(M, S11);
      const Eigen::MatrixXd target = S10 * Oia;
      const Eigen::VectorXd rhs =
          H.transpose() * (Eigen::Map<const Eigen::VectorXd>(target.data(), target.size()) - AK * h);
      Eigen::LDLT<Eigen::MatrixXd> ld(H.transpose() * AK * H);
      if (ld.info() != Eigen::Success || ld.rcond() < 1e-14)
        throw NumericalError("restricted beta step is singular (is the restriction identified?)");
      vb += H * ld.solve(rhs);
    }
    return Eigen::MatrixXd(Eigen::Map<const Eigen::MatrixXd>(vb.data(), p1, r));
  };

  const Eigen::MatrixXd beta_u = jr.eigenvectors.leftCols(r);
  Eigen::MatrixXd alpha_u = S01 * beta_u * (beta_u.transpose() * S11 * beta_u).inverse();
  for (int row : alpha_zero_rows) alpha_u.row(row).setZero();
  const double alpha_scale = std::sqrt(alpha_u.squaredNorm() / static_cast<double>(alpha_u.size())) + 1e-12;

  RestrictedFit best;
  best.loglik = -std::numeric_limits<double>::infinity();
  const int starts = std::max(1, options.starts);
  for (int s = 0; s < starts; ++s) {
    Eigen::MatrixXd a = alpha_u;
    if (s > 0) {
      Rng rng = Rng::substream(options.seed, static_cast<std::uint64_t>(s));
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
          if (A.row(i).sum() > 0) a(i, j) += 0.5 * alpha_scale * rng.normal();
    }
    RestrictedFit fit;
    Eigen::MatrixXd om = omega_of(a, beta_u);
    Eigen::MatrixXd b;
    double prev = -std::numeric_limits<double>::infinity();
    try {
      b = beta_step(a, om);
      for (int it = 1; it <= options.max_iterations; ++it) {
        if (alpha_restricted) om = omega_of(a, b);
        a = alpha_step(b, om);
        om = omega_of(a, b);
        const double ll = concentrated_loglik(om, T);
        fit.iterations = it;
        if (ll - prev < options.tolerance) {
          fit.converged = true;
          prev = std::max(prev, ll);
          break;
        }
        prev = ll;
        if (H.cols() == 0 && !alpha_restricted) {
          fit.converged = true;
          break;
        }
        b = beta_step(a, om);
      }
    } catch (const NumericalError&) {
      if (s == 0 && starts == 1) throw;
      continue;
    }
    fit.alpha = a;
    fit.beta = b;
    fit.omega = om;
    fit.loglik = prev;
    if (fit.converged && fit.loglik > best.loglik) best = fit;
    if (!fit.converged && !best.converged && fit.loglik > best.loglik) best = fit;
  }
  if (!best.converged)
    throw NumericalError("restricted estimation did not converge in " + std::to_string(options.max_iterations) +
                         " iterations");
  return best;
}

RestrictionResult restriction_lr_test(const JohansenResult& jr, int rank, const RestrictionSpec& spec,
                                      const SwitchingOptions& options) {
  const RestrictionSpec aligned = align_restriction(spec, jr, rank);
  const Eigen::Index p1 = jr.eigenvectors.rows();
  const LinearRestriction lin = linear_form(aligned, p1);
  const int df = static_cast<int>(rank * (p1 - rank) - lin.H.cols());
  if (df <= 0)
    throw ModelError("restriction is not over-identifying (df = " + std::to_string(df) + "); nothing to test");
  const RestrictedFit fit = fit_restricted(jr, rank, lin.H, lin.h, {}, options);
  return finish(aligned.label, jr.loglik(rank), fit, df);
}

RestrictionResult restriction_lr_test(const PricePanel& panel, int lags, int rank, JohansenCase jcase,
                                      const DummyMatrix& dummies, const RestrictionSpec& spec,
                                      const SwitchingOptions& options) {
  return restriction_lr_test(reduced_rank_regression(panel, lags + 1, jcase, dummies), rank, spec, options);
}

RestrictionResult weak_exogeneity_test(const JohansenResult& jr, int rank, int variable) {
  const Eigen::Index K = jr.K, n = jr.T_eff;
  if (K < 2) throw ModelError("weak exogeneity needs at least two variables");
  if (rank < 1 || rank > K - 1) throw ModelError("rank out of range");
  if (variable < 0 || variable >= K) throw ModelError("variable index out of range");
  const Eigen::VectorXd b = jr.R0.col(variable);
  Eigen::MatrixXd a(n, K - 1);
  for (Eigen::Index j = 0, c = 0; j < K; ++j)
    if (j != variable) a.col(c++) = jr.R0.col(j);
  const double bb = b.squaredNorm();
  if (!(bb > 0)) throw NumericalError("variable has no variation after partialling out");
  const Eigen::MatrixXd ab = a - b * (b.transpose() * a) / bb;
  const Eigen::MatrixXd r1b = jr.R1 - b * (b.transpose() * jr.R1) / bb;
  const double nd = static_cast<double>(n);
  const Eigen::MatrixXd Saa = ab.transpose() * ab / nd;
  const Eigen::MatrixXd Sa1 = ab.transpose() * r1b / nd;
  const Eigen::MatrixXd S11 = r1b.transpose() * r1b / nd;

  Eigen::LLT<Eigen::MatrixXd> l11(S11);
  if (l11.info() != Eigen::Success) throw NumericalError("conditional S11 is singular");
  const Eigen::MatrixXd L = l11.matrixL();
  const Eigen::MatrixXd G = L.triangularView<Eigen::Lower>().solve(Sa1.transpose());
  Eigen::MatrixXd C = G * Saa.llt().solve(G.transpose());
  C = 0.5 * (C + C.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
  const Eigen::Index p1 = C.rows();

  double lr = 0.0;
  Eigen::MatrixXd beta(p1, rank);
  for (int i = 0; i < rank; ++i) {
    const double lt = std::clamp(es.eigenvalues()(p1 - 1 - i), 0.0, 1.0 - 1e-15);
    lr += nd * (std::log1p(-lt) - std::log1p(-jr.eigenvalues(i)));
    beta.col(i) = L.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors().col(p1 - 1 - i));
  }
  RestrictionResult res;
  res.label = "alpha(" + jr.names[variable] + ") = 0";
  res.df = rank;
  res.lr = std::max(0.0, lr);
  res.p_value = dist::chi2_sf(res.lr, res.df);
  res.loglik_unrestricted = jr.loglik(rank);
  res.loglik_restricted = res.loglik_unrestricted - 0.5 * res.lr;
  res.beta = beta;
  const Eigen::MatrixXd alpha_a = Sa1 * beta * (beta.transpose() * S11 * beta).inverse();
  res.alpha = Eigen::MatrixXd::Zero(K, rank);
  for (Eigen::Index j = 0, c = 0; j < K; ++j)
    if (j != variable) res.alpha.row(j) = alpha_a.row(c++);
  return res;
}

RestrictionResult weak_exogeneity_test(const PricePanel& panel, int lags, int rank, JohansenCase jcase,
                                       const DummyMatrix& dummies, int variable) {
  return weak_exogeneity_test(reduced_rank_regression(panel, lags + 1, jcase, dummies), rank, variable);
}

Eigen::MatrixXi PairwiseLopTable::decisions() const {
  const auto K = static_cast<Eigen::Index>(names.size());
  Eigen::MatrixXi d = Eigen::MatrixXi::Zero(K, K);
  for (Eigen::Index i = 0; i < K; ++i) d(i, i) = -1;
  for (const auto& row : rows) d(row.i, row.j) = d(row.j, row.i) = row.reject ? 1 : 0;
  return d;
}

PairwiseLopTable pairwise_lop(const JohansenResult& jr, int rank, double level, const SwitchingOptions& options) {
  if (rank != 1) throw ModelError("pairwise LOP tests are defined at rank 1, got rank " + std::to_string(rank));
  PairwiseLopTable table;
  table.level = level;
  table.names.assign(jr.names.begin(), jr.names.begin() + jr.K);
  for (int i = 0; i < jr.K; ++i)
    for (int j = i + 1; j < jr.K; ++j) {
      RestrictionSpec spec;
      spec.label = jr.names[i] + " = " + jr.names[j];
      std::vector<std::optional<double>> v(jr.K, 0.0);
      v[i] = 1.0;
      v[j] = -1.0;
      spec.pattern.push_back(std::move(v));
      PairwiseLopRow row;
      row.i = i;
      row.j = j;
      row.result = restriction_lr_test(jr, rank, spec, options);
      row.reject = row.result.p_value < level;
      table.rows.push_back(std::move(row));
    }
  return table;
}

PairwiseLopTable pairwise_lop(const PricePanel& panel, int lags, int rank, JohansenCase jcase,
                              const DummyMatrix& dummies, double level, const SwitchingOptions& options) {
  return pairwise_lop(reduced_rank_regression(panel, lags + 1, jcase, dummies), rank, level, options);
}

RestrictionResult joint_lop_test(const JohansenResult& jr, int rank, const SwitchingOptions& options) {
  if (jr.K < 2 || rank != jr.K - 1) throw ModelError("joint LOP untestable at rank " + std::to_string(rank));
  RestrictionSpec spec;
  spec.label = "joint LOP";
  for (int j = 1; j < jr.K; ++j) {
    std::vector<std::optional<double>> v(jr.K, 0.0);
    v[0] = 1.0;
    v[j] = -1.0;
    spec.pattern.push_back(std::move(v));
  }
  return restriction_lr_test(jr, rank, spec, options);
}

RestrictionResult joint_lop_test(const PricePanel& panel, int lags, int rank, JohansenCase jcase,
                                 const DummyMatrix& dummies, const SwitchingOptions& options) {
  return joint_lop_test(reduced_rank_regression(panel, lags + 1, jcase, dummies), rank, options);
}

}  // namespace lopcoint
