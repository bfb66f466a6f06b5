#include "lopcoint/unit_root.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "lopcoint/distributions.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/regression.hpp"

namespace lopcoint {

std::string to_string(Deterministic d) {
  switch (d) {
    case Deterministic::none: return "none";
    case Deterministic::constant: return "constant";
    case Deterministic::constant_trend: return "constant+trend";
  }
  return "?";
}

std::string to_string(UnitRootMethod m) { return m == UnitRootMethod::adf ? "ADF" : "PP"; }

std::string to_string(IntegrationOrder o) {
  switch (o) {
    case IntegrationOrder::i0: return "I(0)";
    case IntegrationOrder::i1: return "I(1)";
    case IntegrationOrder::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

int deterministic_count(Deterministic d) {
  switch (d) {
    case Deterministic::none: return 0;
    case Deterministic::constant: return 1;
    case Deterministic::constant_trend: return 2;
  }
  return 0;
}

void require_variation(std::span<const double> y) {
  if (y.size() < 2) throw DataError("series too short");
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  if (!(*hi > *lo)) throw NumericalError("series is constant; the unit-root regression is degenerate");
}

// Design for observations dy[first..n-2]; column 0 is the lagged level.
struct DfDesign {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
};

DfDesign df_design(std::span<const double> s, Deterministic spec, int k, int first) {
  const int n = static_cast<int>(s.size());
  const int nobs = n - 1 - first;
  const int m = 1 + k + deterministic_count(spec);
  DfDesign d{Eigen::MatrixXd(nobs, m), Eigen::VectorXd(nobs)};
  for (Eigen::Index r = 0; r < nobs; ++r) {
    const auto i = static_cast<std::size_t>(first + r);  // dy index; dy[i] = s[i+1] - s[i]
    d.y(r) = s[i + 1] - s[i];
    int c = 0;
    d.X(r, c++) = s[i];
    for (int j = 1; j <= k; ++j) d.X(r, c++) = s[i + 1 - j] - s[i - j];
    if (spec != Deterministic::none) d.X(r, c++) = 1.0;
    if (spec == Deterministic::constant_trend) d.X(r, c++) = static_cast<double>(i + 1);
  }
  return d;
}

double info_criterion(double ssr, int nobs, int nreg, LagCriterion c) {
  const double n = nobs;
  const double loglik = -0.5 * n * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(ssr / n));
  const double penalty = c == LagCriterion::sc ? nreg * std::log(n) : 2.0 * nreg;
  return (-2.0 * loglik + penalty) / n;
}

}  // namespace

UnitRootResult adf_test(std::span<const double> series, Deterministic spec, int max_lag, LagCriterion criterion) {
  if (max_lag < 0) throw DataError("max_lag must be non-negative");
  const int n = static_cast<int>(series.size());
  const int det = deterministic_count(spec);
  if (n <= max_lag + 2 + det) throw DataError("insufficient observations for the requested lag length");
  require_variation(series);
  // The largest model needs more observations than regressors.
  if (n - 1 - max_lag <= 1 + max_lag + det) throw DataError("insufficient observations for the requested lag length");

  int k = max_lag;
  if (criterion != LagCriterion::fixed) {
    double best = std::numeric_limits<double>::infinity();
    for (int cand = 0; cand <= max_lag; ++cand) {
      auto d = df_design(series, spec, cand, max_lag);
      auto fit = least_squares(d.X, d.y);
      const double ssr = fit.ssr()(0);
      if (!(ssr > 0.0)) throw NumericalError("degenerate ADF regression (zero residual variance)");
      const double ic = info_criterion(ssr, static_cast<int>(d.y.size()), static_cast<int>(d.X.cols()), criterion);
      if (ic < best) {
        best = ic;
        k = cand;
      }
    }
  }

  auto d = df_design(series, spec, k, k);
  auto fit = least_squares(d.X, d.y);
  if (!(fit.ssr()(0) > 0.0)) throw NumericalError("degenerate ADF regression (zero residual variance)");
  UnitRootResult r;
  r.statistic = fit.t_stats()(0, 0);
  r.n_effective = static_cast<int>(d.y.size());
  r.p_value = mackinnon_pvalue(r.statistic, spec, r.n_effective);
  r.lags_or_bandwidth = k;
  r.spec = spec;
  r.method = UnitRootMethod::adf;
  return r;
}

int newey_west_bandwidth(int n) {
  return static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 2.0 / 9.0)));
}

double bartlett_long_run_variance(std::span<const double> u, int bandwidth) {
  const auto n = static_cast<std::ptrdiff_t>(u.size());
  if (n == 0) throw DataError("empty residual series");
  if (bandwidth < 0) throw DataError("bandwidth must be non-negative");
  auto autocov = [&](std::ptrdiff_t j) {
    double s = 0.0;
    for (std::ptrdiff_t t = j; t < n; ++t) s += u[t] * u[t - j];
    return s / static_cast<double>(n);
  };
  double lrv = autocov(0);
  for (int j = 1; j <= bandwidth && j < n; ++j)
    lrv += 2.0 * (1.0 - static_cast<double>(j) / (bandwidth + 1.0)) * autocov(j);
  return lrv;
}

UnitRootResult pp_test(std::span<const double> series, Deterministic spec, std::optional<int> bandwidth) {
  const int n = static_cast<int>(series.size());
  if (n < 10) throw DataError("Phillips-Perron test needs at least 10 observations");
  require_variation(series);
  auto d = df_design(series, spec, 0, 0);
  auto fit = least_squares(d.X, d.y);
  const int nobs = static_cast<int>(d.y.size());
  const double ssr = fit.ssr()(0);
  if (!(ssr > 0.0)) throw NumericalError("degenerate PP regression (zero residual variance)");
  const int l = bandwidth.value_or(newey_west_bandwidth(nobs));
  if (l < 0) throw DataError("bandwidth must be non-negative");

  const Eigen::VectorXd u = fit.residuals.col(0);
  const double gamma0 = ssr / nobs;
  const double lrv = bartlett_long_run_variance({u.data(), static_cast<std::size_t>(u.size())}, l);
  const double s = std::sqrt(fit.s2()(0));
  const double se = fit.std_errors()(0, 0);
  const double t = fit.coef(0, 0) / se;

  UnitRootResult r;
  r.statistic = std::sqrt(gamma0 / lrv) * t - (lrv - gamma0) * nobs * se / (2.0 * std::sqrt(lrv) * s);
  r.n_effective = nobs;
  r.p_value = mackinnon_pvalue(r.statistic, spec, nobs);
  r.lags_or_bandwidth = l;
  r.spec = spec;
  r.method = UnitRootMethod::pp;
  return r;
}

namespace {

// MacKinnon (1994), Table 3/4, N = 1.
struct TauSurface {
  double tau_min, tau_star, tau_max;
  std::array<double, 3> small;  // p = Phi(a0 + a1 t + a2 t^2) for t <= tau_star
  std::array<double, 4> large;  // p = Phi(b0 + b1 t + b2 t^2 + b3 t^3) above
};

constexpr TauSurface kNoConstant{-19.04, -1.04, 1e300, {0.6344, 1.2378, 3.2496e-2},
                                 {0.4797, 9.3557e-1, -0.6999e-1, 3.3066e-2}};
constexpr TauSurface kConstant{-18.83, -1.61, 2.74, {2.1659, 1.4412, 3.8269e-2},
                               {1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2}};
// tau_max 0.69 instead of 0.70: the cubic turns down just below 0.70.
constexpr TauSurface kConstantTrend{-16.18, -2.89, 0.69, {3.2512, 1.6047, 4.9588e-2},
                                    {2.5261, 6.1654e-1, -3.7956e-1, -6.0285e-2}};

const TauSurface& surface(Deterministic d) {
  switch (d) {
    case Deterministic::none: return kNoConstant;
    case Deterministic::constant: return kConstant;
    case Deterministic::constant_trend: return kConstantTrend;
  }
  return kConstant;
}

double small_branch(const TauSurface& s, double t) { return s.small[0] + t * (s.small[1] + t * s.small[2]); }
double large_branch(const TauSurface& s, double t) {
  return s.large[0] + t * (s.large[1] + t * (s.large[2] + t * s.large[3]));
}

// Linear blend across tau_star removes the small jump between the two fits.
constexpr double kBlend = 0.01;

double index_at(const TauSurface& s, double t) {
  if (t <= s.tau_star - kBlend) return small_branch(s, t);
  if (t >= s.tau_star + kBlend) return large_branch(s, t);
  const double w = (t - (s.tau_star - kBlend)) / (2.0 * kBlend);
  return (1.0 - w) * small_branch(s, t) + w * large_branch(s, t);
}

}  // namespace

double mackinnon_pvalue(double statistic, Deterministic spec, int /*n*/) {
  if (std::isnan(statistic)) throw NumericalError("p-value requested for a NaN statistic");
  const auto& s = surface(spec);
  const double t = std::clamp(statistic, s.tau_min, s.tau_max);
  // The no-constant large-p cubic keeps rising, so only it can use tau_max = +inf.
  return std::clamp(dist::normal_cdf(index_at(s, t)), 0.0, 1.0);
}

std::vector<IntegrationReport> integration_order(const PricePanel& panel, int max_lag, double level,
                                                 LagCriterion criterion) {
  if (panel.scale() == Scale::first_difference)
    throw DataError("integration order report expects a level or log panel");
  std::vector<IntegrationReport> out;
  for (Eigen::Index j = 0; j < panel.cols(); ++j) {
    const Eigen::VectorXd y = panel.column(j);
    const Eigen::VectorXd dy = y.tail(y.size() - 1) - y.head(y.size() - 1);
    std::span<const double> ys(y.data(), static_cast<std::size_t>(y.size()));
    std::span<const double> ds(dy.data(), static_cast<std::size_t>(dy.size()));
    IntegrationReport r;
    r.name = panel.names()[static_cast<std::size_t>(j)];
    r.adf_level = adf_test(ys, Deterministic::constant, max_lag, criterion);
    r.pp_level = pp_test(ys, Deterministic::constant);
    r.adf_diff = adf_test(ds, Deterministic::constant, max_lag, criterion);
    r.pp_diff = pp_test(ds, Deterministic::constant);
    const bool level_adf = r.adf_level.p_value < level;
    const bool level_pp = r.pp_level.p_value < level;
    const bool diff_adf = r.adf_diff.p_value < level;
    const bool diff_pp = r.pp_diff.p_value < level;
    if (level_adf && level_pp)
      r.order = IntegrationOrder::i0;
    else if (!level_adf && !level_pp && diff_adf && diff_pp)
      r.order = IntegrationOrder::i1;
    else
      r.order = IntegrationOrder::inconclusive;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lopcoint
