// Acceptance suite. Usage: lopcoint_acceptance [fixture|oracle|montecarlo|invariants|all]
//
// Prints one PASS / FAIL / BLOCKED line per criterion. Exit status: 0 when
// everything ran and passed, 1 on any failure, 77 when the only outcome is
// BLOCKED (the frozen fixture is not present).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "lopcoint/config.hpp"
#include "lopcoint/data.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/johansen.hpp"
#include "lopcoint/pipeline.hpp"
#include "lopcoint/regression.hpp"
#include "lopcoint/rng.hpp"
#include "lopcoint/simulate.hpp"
#include "lopcoint/unit_root.hpp"
#include "lopcoint/var_model.hpp"
#include "lopcoint/vecm.hpp"

using namespace lopcoint;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Tally {
  int pass = 0, fail = 0, blocked = 0;
};

Tally tally;

void report(bool ok, const std::string& id, const std::string& detail) {
  std::printf("%s  %-44s %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  ok ? ++tally.pass : ++tally.fail;
}

void blocked(const std::string& id, const std::string& detail) {
  std::printf("BLOCKED  %-41s %s\n", id.c_str(), detail.c_str());
  ++tally.blocked;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Runs a check body; an exception counts as a failure of that criterion.
void guarded(const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(false, id, std::string("exception: ") + e.what());
  }
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Eigen::MatrixXd random_matrix(Rng& rng, Eigen::Index r, Eigen::Index c) {
  Eigen::MatrixXd m(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = rng.normal();
  return m;
}

DgpSpec bivariate_dgp(std::uint64_t seed, int T) {
  DgpSpec s;
  s.kind = DgpKind::vecm;
  s.K = 2;
  s.T = T;
  s.seed = seed;
  s.alpha = Eigen::MatrixXd(2, 1);
  s.alpha << -0.5, 0.2;
  s.beta = Eigen::MatrixXd(2, 1);
  s.beta << 1, -1;
  return s;
}

DgpSpec trivariate_dgp(std::uint64_t seed, int T) {
  DgpSpec s;
  s.kind = DgpKind::vecm;
  s.K = 3;
  s.T = T;
  s.seed = seed;
  s.alpha = Eigen::MatrixXd(3, 1);
  s.alpha << -0.2, 0.1, 0.05;
  s.beta = Eigen::MatrixXd(3, 1);
  s.beta << 1, -1, 0.5;
  Eigen::MatrixXd g(3, 3);
  g << 0.2, 0, 0, 0.1, 0.1, 0, 0, 0, 0.3;
  s.lags = {g};
  s.intercept = Eigen::Vector3d(0.01, 0.0, -0.01);
  return s;
}

std::uint64_t rep_seed(std::uint64_t base, int rep) { return Rng::splitmix64(base * 1000003ULL + rep); }

// ---------------------------------------------------------------------------
// Fixture reproduction

const fs::path kSource = LOPCOINT_SOURCE_DIR;

void fixture_group() {
  const fs::path conf = kSource / "configs/beef_regional.conf";
  const KeyValueConfig cfg = KeyValueConfig::load(conf);
  const PipelineConfig pc = PipelineConfig::from(cfg);
  const fs::path data = cfg.base_dir() / cfg.get_or("data.path", "");
  const char* ids[] = {"fixture.table1.statistics", "fixture.table1.decisions", "fixture.table1.runtime",
                       "fixture.table2.selection", "fixture.table2.aic_lag3", "fixture.rank.statistics",
                       "fixture.rank.selection", "fixture.vecm.beta", "fixture.vecm.alpha_pattern",
                       "fixture.granger.decisions", "fixture.lop.decisions", "fixture.lop.statistics"};
  if (!fs::exists(data)) {
    for (const char* id : ids) blocked(id, "frozen fixture missing: " + data.lexically_normal().string());
    return;
  }

  PricePanel panel = panel_from(cfg);
  if (pc.log_transform) panel = log_transform(panel);
  const DummyMatrix dummies = build_dummies(pc.dummies, panel.dates());
  const std::vector<std::string> regions{"MW", "NE", "SO", "WE"};

  // unit roots: ADF and PP with an intercept, AIC lag choice up to 15
  guarded("fixture.table1", [&] {
    const auto t0 = Clock::now();
    const auto ur = integration_order(panel, 15, 0.05, LagCriterion::aic);
    const double secs = seconds_since(t0);
    const double adf[] = {-1.02, -1.19, -1.25, -0.84};
    const double pp[] = {-1.21, -1.12, -1.16, -0.84};
    double worst = 0.0;
    bool decisions = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
      worst = std::max({worst, std::abs(ur[i].adf_level.statistic - adf[i]), std::abs(ur[i].pp_level.statistic - pp[i])});
      detail += fmt("%s %.2f/%.2f ", regions[i].c_str(), ur[i].adf_level.statistic, ur[i].pp_level.statistic);
      decisions = decisions && ur[i].adf_level.p_value > 0.05 && ur[i].pp_level.p_value > 0.05 &&
                  ur[i].adf_diff.p_value < 0.01 && ur[i].pp_diff.p_value < 0.01;
    }
    report(worst <= 0.10, ids[0], fmt("max |diff| %.3f (tol 0.10); ", worst) + detail);
    report(decisions, ids[1], "levels not rejected at 5%, differences rejected at 1%");
    report(secs < 1.0, ids[2], fmt("%.3f s (limit 1 s)", secs));
  });

  // lag order selection
  guarded("fixture.table2", [&] {
    const LagSelectionTable sel = lag_order_selection(panel, 5, pc.var_det, dummies);
    report(sel.selected_aic == 3 && sel.selected_fpe == 3 && sel.selected_sc == 2 && sel.selected_hq == 2 &&
               sel.selected_lr == 4,
           ids[3],
           fmt("AIC %d FPE %d SC %d HQ %d LR %d (expected 3 3 2 2 4)", sel.selected_aic, sel.selected_fpe,
               sel.selected_sc, sel.selected_hq, sel.selected_lr));
    const double aic3 = sel.rows.at(3).ic.aic;
    report(std::abs(aic3 + 19.48544) <= 0.01, ids[4], fmt("AIC(3) %.5f vs -19.48544 (tol 0.01)", aic3));
  });

  // cointegration rank
  guarded("fixture.rank", [&] {
    const JohansenResult jr = reduced_rank_regression(panel, pc.var_order, pc.jcase, dummies);
    const double tr = jr.trace(0), me = jr.max_eigen(0);
    report(std::abs(tr - 50.02568) <= 1.0 && std::abs(me - 28.26276) <= 1.0, ids[5],
           fmt("trace(0) %.4f vs 50.02568, maxeig(0) %.4f vs 28.26276 (tol 1.0)", tr, me));
    const int rt = select_rank(trace_test(jr), max_eigen_test(jr), RankPolicy::trace).rank;
    const int rm = select_rank(trace_test(jr), max_eigen_test(jr), RankPolicy::max_eigen).rank;
    report(rt == 1 && rm == 1, ids[6], fmt("trace r=%d, max-eigen r=%d (expected 1, 1)", rt, rm));
  });

  // VECM estimates, Granger exclusions, pairwise parity
  guarded("fixture.vecm", [&] {
    const VecmModel m = fit_vecm(panel, pc.vecm_lags, 1, pc.jcase, dummies);
    const double beta[] = {1.0, 1.9085, -1.1484, -1.7319};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(m.beta(i, 0) - beta[i]));
    report(worst <= 0.02, ids[7],
           fmt("beta (%.4f, %.4f, %.4f, %.4f), max |diff| %.4f (tol 0.02)", m.beta(0, 0), m.beta(1, 0),
               m.beta(2, 0), m.beta(3, 0), worst));
    // MW insignificant, NE and SO significantly negative, WE significantly positive
    const double crit = 1.959964;
    const Eigen::VectorXd t = m.alpha_t.col(0);
    const bool pattern = std::abs(t(0)) < crit && t(1) < -crit && t(2) < -crit && t(3) > crit;
    report(pattern, ids[8], fmt("alpha t (%.2f, %.2f, %.2f, %.2f)", t(0), t(1), t(2), t(3)));

    const GrangerResult g = granger_wald(m, 0.05);
    const std::map<std::pair<int, int>, bool> expected{
        {{0, 1}, false}, {{0, 2}, false}, {{0, 3}, false}, {{1, 0}, true}, {{1, 2}, false}, {{1, 3}, false},
        {{2, 0}, true},  {{2, 1}, true},  {{2, 3}, true},  {{3, 0}, false}, {{3, 1}, true}, {{3, 2}, false}};
    int matches = 0;
    std::string mism;
    for (const auto& row : g.pairs) {
      const bool want = expected.at({row.dependent, row.excluded});
      if (row.reject == want)
        ++matches;
      else
        mism += fmt(" %s<-%s(chi2 %.2f)", regions[row.dependent].c_str(), regions[row.excluded].c_str(), row.chi2);
    }
    report(matches == 12, ids[9], fmt("%d/12 decisions match", matches) + (mism.empty() ? "" : "; differ:" + mism));

    const PairwiseLopTable lop = pairwise_lop(m.johansen, 1, 0.01);
    const std::map<std::pair<int, int>, double> published_lr{{{0, 1}, 18.38}, {{0, 2}, 19.73}, {{0, 3}, 16.75},
                                                         {{1, 2}, 22.44}, {{1, 3}, 0.04},  {{2, 3}, 19.74}};
    bool dec = true;
    double worst_lr = 0.0;
    std::string lrs;
    for (const auto& row : lop.rows) {
      const bool want = !(row.i == 1 && row.j == 3);
      dec = dec && row.reject == want;
      if (want) worst_lr = std::max(worst_lr, std::abs(row.result.lr - published_lr.at({row.i, row.j})));
      lrs += fmt(" %s-%s %.2f", regions[row.i].c_str(), regions[row.j].c_str(), row.result.lr);
    }
    report(dec, ids[10], "only NE-WE not rejected at 1%;" + lrs);
    report(worst_lr <= 2.0, ids[11], fmt("rejected pairs max |LR diff| %.2f (tol 2.0)", worst_lr));
  });
}

// ---------------------------------------------------------------------------
// Oracle equivalence

// Gauss-Jordan elimination with partial pivoting in long double.
Eigen::MatrixXd brute_force_solve(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  const Eigen::Index n = A.rows(), m = B.cols();
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n + m));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = A(i, j);
    for (Eigen::Index j = 0; j < m; ++j) a[i][n + j] = B(i, j);
  }
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    for (Eigen::Index r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c) continue;
      const long double f = a[r][c] / a[c][c];
      for (Eigen::Index j = c; j < n + m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Eigen::MatrixXd x(n, m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j) x(i, j) = static_cast<double>(a[i][n + j] / a[i][i]);
  return x;
}

// Root moduli of det(z^p I - sum pi_i z^{p-i}): polynomial coefficients by a
// DFT of determinant values on the unit circle, roots by Durand-Kerner.
std::vector<double> polynomial_root_moduli(const std::vector<Eigen::MatrixXd>& pi) {
  using cd = std::complex<double>;
  const int K = static_cast<int>(pi[0].rows());
  const int p = static_cast<int>(pi.size());
  const int deg = K * p, n = deg + 1;
  std::vector<cd> values(n), coef(n);
  for (int s = 0; s < n; ++s) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * s / n);
    Eigen::MatrixXcd M = std::pow(z, p) * Eigen::MatrixXcd::Identity(K, K);
    for (int i = 0; i < p; ++i) M -= std::pow(z, p - 1 - i) * pi[i].cast<cd>();
    values[s] = M.determinant();
  }
  for (int j = 0; j < n; ++j) {
    cd acc = 0.0;
    for (int s = 0; s < n; ++s) acc += values[s] * std::polar(1.0, -2.0 * std::numbers::pi * s * j / n);
    coef[j] = acc / static_cast<double>(n);
  }
  std::vector<cd> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = std::pow(cd(0.4, 0.9), i);
  for (int it = 0; it < 5000; ++it) {
    double step = 0.0;
    for (int i = 0; i < deg; ++i) {
      cd num = coef[deg];
      for (int j = deg - 1; j >= 0; --j) num = num * roots[i] + coef[j];
      cd den = coef[deg];
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= roots[i] - roots[j];
      const cd d = num / den;
      roots[i] -= d;
      step = std::max(step, std::abs(d));
    }
    if (step < 1e-15) break;
  }
  std::vector<double> mod;
  for (auto r : roots) mod.push_back(std::abs(r));
  std::sort(mod.rbegin(), mod.rend());
  return mod;
}

void oracle_group() {
  guarded("oracle.ols", [] {
    double worst = 0.0;
    for (int seed = 1; seed <= 20; ++seed) {
      Rng rng(seed);
      Eigen::MatrixXd X = random_matrix(rng, 120, 6);
      X.col(0).setOnes();
      const Eigen::MatrixXd Y = X * random_matrix(rng, 6, 3) + random_matrix(rng, 120, 3);
      const LeastSquares ls = least_squares(X, Y);
      const Eigen::MatrixXd oracle = brute_force_solve(X.transpose() * X, X.transpose() * Y);
      worst = std::max(worst, (ls.coef - oracle).cwiseAbs().maxCoeff());
    }
    report(worst < 1e-10, "oracle.ols_normal_equations", fmt("max |diff| %.2e over 20 problems (tol 1e-10)", worst));
  });

  guarded("oracle.companion", [] {
    double worst = 0.0;
    for (int seed = 1; seed <= 10; ++seed) {
      DgpSpec s;
      s.kind = DgpKind::var;
      s.K = 3;
      s.T = 200;
      s.seed = seed;
      s.lags = {0.4 * Eigen::MatrixXd::Identity(3, 3), 0.2 * Eigen::MatrixXd::Identity(3, 3)};
      const PricePanel p = generate(s);
      const VarModel v = fit_var(p, 1 + seed % 3, DeterministicTerms{}, no_dummies(p.rows()));
      const StabilityReport st = stability_roots(v);
      const auto oracle = polynomial_root_moduli(v.lag_matrices);
      for (std::size_t i = 0; i < oracle.size(); ++i) worst = std::max(worst, std::abs(st.moduli.at(i) - oracle[i]));
    }
    report(worst < 1e-8, "oracle.companion_roots", fmt("max |modulus diff| %.2e (tol 1e-8)", worst));
  });

  guarded("oracle.johansen", [] {
    const PricePanel p = generate(bivariate_dgp(2024, 400));
    const JohansenResult r = reduced_rank_regression(p, 2, JohansenCase::unrestricted_constant, no_dummies(p.rows()));
    const Eigen::MatrixXd A = r.S01.transpose() * r.S00.inverse() * r.S01;
    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(A, r.S11);
    std::vector<double> ev;
    for (Eigen::Index i = 0; i < A.rows(); ++i) ev.push_back(ges.eigenvalues()(i).real());
    std::sort(ev.rbegin(), ev.rend());
    double worst = 0.0;
    for (int i = 0; i < r.K; ++i) worst = std::max(worst, std::abs(r.eigenvalues(i) - ev[i]));
    report(worst < 1e-9, "oracle.johansen_eigenvalues",
           fmt("(%.6f, %.6f), max |diff| %.2e (tol 1e-9)", r.eigenvalues(0), r.eigenvalues(1), worst));
  });

  guarded("oracle.vecm_var", [] {
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      const PricePanel p = generate(trivariate_dgp(rep_seed(31, rep), 300));
      const VecmModel m = fit_vecm(p, 2, 1, JohansenCase::none, no_dummies(p.rows()));
      const auto pi = vecm_to_var(m.pi(), m.gamma);
      const auto back = var_to_vecm(pi);
      worst = std::max(worst, (back.first - m.pi()).cwiseAbs().maxCoeff());
      for (int i = 0; i < 2; ++i) worst = std::max(worst, (back.second[i] - m.gamma[i]).cwiseAbs().maxCoeff());
      // fitted levels from the VAR form equal the VECM fit
      const Eigen::MatrixXd& y = p.values();
      for (int t = 0; t < m.T_eff; ++t) {
        const Eigen::Index row = m.sample_start + t;
        Eigen::VectorXd lv = Eigen::VectorXd::Zero(3);
        for (int i = 0; i < 3; ++i) lv += pi[i] * y.row(row - 1 - i).transpose();
        const Eigen::VectorXd vecm_fit = y.row(row - 1).transpose() + (m.Y - m.residuals).row(t).transpose();
        worst = std::max(worst, (lv - vecm_fit).cwiseAbs().maxCoeff());
      }
    }
    report(worst < 1e-8, "oracle.vecm_var_rewriting", fmt("max |diff| %.2e over 20 datasets (tol 1e-8)", worst));
  });
}

// ---------------------------------------------------------------------------
// Monte Carlo

void montecarlo_group() {
  const auto t_all = Clock::now();

  guarded("mc.adf_size", [] {
    int rejections = 0;
    const int reps = 2000;
    for (int rep = 0; rep < reps; ++rep) {
      DgpSpec s;
      s.kind = DgpKind::random_walk;
      s.K = 1;
      s.T = 250;
      s.seed = rep_seed(101, rep);
      const PricePanel p = generate(s);
      const Eigen::VectorXd y = p.column(0);
      const UnitRootResult r = adf_test(std::span<const double>(y.data(), y.size()), Deterministic::constant, 0,
                                        LagCriterion::fixed);
      if (r.p_value < 0.05) ++rejections;
    }
    const double rate = 100.0 * rejections / reps;
    report(rate >= 3.5 && rate <= 6.5, "mc.adf_size", fmt("%.2f%% rejected at 5%% (band [3.5, 6.5])", rate));
  });

  guarded("mc.rank_recovery", [] {
    int correct = 0;
    const int reps = 200;
    for (int rep = 0; rep < reps; ++rep) {
      const PricePanel p = generate(bivariate_dgp(rep_seed(202, rep), 1000));
      const JohansenResult r = reduced_rank_regression(p, 2, JohansenCase::unrestricted_constant, no_dummies(p.rows()));
      if (select_rank(trace_test(r), max_eigen_test(r), RankPolicy::trace).rank == 1) ++correct;
    }
    const double rate = 100.0 * correct / reps;
    report(rate >= 90.0, "mc.johansen_rank_recovery", fmt("%.1f%% correct rank (need >= 90)", rate));
  });

  guarded("mc.lop", [] {
    int kept = 0;
    const int reps = 200;
    for (int rep = 0; rep < reps; ++rep) {
      const PricePanel p = generate(bivariate_dgp(rep_seed(303, rep), 500));
      const JohansenResult r = reduced_rank_regression(p, 2, JohansenCase::unrestricted_constant, no_dummies(p.rows()));
      const PairwiseLopTable t = pairwise_lop(r, 1, 0.05);
      if (!t.rows.at(0).reject) ++kept;
    }
    const double rate = 100.0 * kept / reps;
    report(rate >= 90.0 && rate <= 98.0, "mc.lop_non_rejection", fmt("%.1f%% not rejected at 5%% (band [90, 98])", rate));
  });

  guarded("mc.granger", [] {
    int rejections = 0;
    const int reps = 500;
    Eigen::MatrixXd g(2, 2);
    g << 0.3, 0.0, 0.2, 0.2;  // y2 does not enter the y1 equation
    for (int rep = 0; rep < reps; ++rep) {
      DgpSpec s = bivariate_dgp(rep_seed(404, rep), 300);
      s.lags = {g};
      const PricePanel p = generate(s);
      const VecmModel m = fit_vecm(p, 1, 1, JohansenCase::unrestricted_constant, no_dummies(p.rows()));
      for (const auto& row : granger_wald(m, 0.05).pairs)
        if (row.dependent == 0 && row.excluded == 1 && row.reject) ++rejections;
    }
    const double rate = 100.0 * rejections / reps;
    report(rate >= 3.0 && rate <= 7.0, "mc.granger_size", fmt("%.1f%% rejected at 5%% (band [3, 7])", rate));
  });

  const double secs = seconds_since(t_all);
  report(secs < 120.0, "mc.runtime", fmt("%.1f s (limit 120 s)", secs));
}

// ---------------------------------------------------------------------------
// Invariants

void invariants_group() {
  const PricePanel base = generate(trivariate_dgp(77, 300));
  const auto none = no_dummies(base.rows());

  guarded("inv.data", [&] {
    const PricePanel d = difference(base);
    Eigen::MatrixXd rebuilt(base.rows(), base.cols());
    rebuilt.row(0) = base.values().row(0);
    for (Eigen::Index t = 1; t < base.rows(); ++t) rebuilt.row(t) = rebuilt.row(t - 1) + d.values().row(t - 1);
    const double err = (rebuilt - base.values()).cwiseAbs().maxCoeff();
    report(err < 1e-12, "inv.data.difference_round_trip", fmt("max |diff| %.2e (tol 1e-12)", err));

    std::ostringstream csv;
    write_panel_csv(base, csv);
    ColumnMapping map;
    std::istringstream a(csv.str()), b(csv.str());
    const PricePanel pa = load_panel(a, map), pb = load_panel(b, map);
    report(pa.values() == pb.values() && pa.dates() == pb.dates() && pa.values() == base.values(),
           "inv.data.load_deterministic", "identical bytes load to identical panels; write/load is lossless");

    DummySpec spec{{{"a", {YearMonth{2000, 3}}}, {"b", {YearMonth{2001, 1}, YearMonth{2002, 6}, YearMonth{2010, 1}}}}};
    const DummyMatrix dm = build_dummies(spec, base.dates());
    report(dm.values.col(0).sum() == 1.0 && dm.values.col(1).sum() == 3.0, "inv.data.dummy_counts",
           "dummy column sums equal month-set sizes");
  });

  guarded("inv.unit_root", [&] {
    const Eigen::VectorXd y = base.column(0);
    const auto adf = [](const Eigen::VectorXd& v, Deterministic d) {
      return adf_test(std::span<const double>(v.data(), v.size()), d, 8, LagCriterion::aic);
    };
    const UnitRootResult r0 = adf(y, Deterministic::constant);
    const Eigen::VectorXd scaled = 3.7 * y;
    const Eigen::VectorXd shifted = (y.array() + 5.0).matrix();
    const double d1 = std::abs(adf(scaled, Deterministic::constant).statistic - r0.statistic);
    const double d2 = std::abs(adf(shifted, Deterministic::constant).statistic - r0.statistic);
    report(d1 < 1e-9 && d2 < 1e-9, "inv.unit_root.affine_invariance", fmt("scale %.1e, shift %.1e (tol 1e-9)", d1, d2));
    bool bounded = true;
    for (auto d : {Deterministic::none, Deterministic::constant, Deterministic::constant_trend})
      for (int ml : {0, 3, 8}) {
        const auto r = adf_test(std::span<const double>(y.data(), y.size()), d, ml, LagCriterion::aic);
        bounded = bounded && r.lags_or_bandwidth >= 0 && r.lags_or_bandwidth <= ml;
      }
    report(bounded, "inv.unit_root.lag_bounds", "selected lag within 0..max_lag");
    bool monotone = true;
    double jump = 0.0;
    for (auto d : {Deterministic::none, Deterministic::constant, Deterministic::constant_trend}) {
      double prev = mackinnon_pvalue(-20.0, d);
      for (double s = -20.0 + 1e-3; s < 5.0; s += 1e-3) {
        const double p = mackinnon_pvalue(s, d);
        monotone = monotone && p >= prev - 1e-15;
        jump = std::max(jump, p - prev);
        prev = p;
      }
    }
    report(monotone && jump < 1e-3, "inv.unit_root.pvalue_monotone", fmt("largest step %.2e over 1e-3 grid", jump));
  });

  guarded("inv.var", [&] {
    const VarModel v = fit_var(base, 2, {true, true}, none);
    const double orth = (v.X.transpose() * v.residuals).cwiseAbs().maxCoeff();
    report(orth < 1e-8, "inv.var.residual_orthogonality", fmt("max |X'e| %.2e (tol 1e-8)", orth));
    const VarModel v3 = fit_var(base, 3, {true, true}, none, 4), v4 = fit_var(base, 4, {true, true}, none, 4);
    report(v4.loglik >= v3.loglik - 1e-9, "inv.var.redundant_lag", fmt("logL %.6f -> %.6f", v3.loglik, v4.loglik));
    const InformationCriteria ic = information_criteria(v.loglik, v.n_params, v.T_eff);
    const double T = v.T_eff, n = v.n_params;
    const double aic = (-2 * v.loglik + 2 * n) / T, sc = (-2 * v.loglik + n * std::log(T)) / T,
                 hq = (-2 * v.loglik + 2 * n * std::log(std::log(T))) / T;
    const double icd = std::max({std::abs(ic.aic - aic), std::abs(ic.sc - sc), std::abs(ic.hq - hq),
                                 std::abs(v.ic.aic - aic), std::abs(v.ic.sc - sc), std::abs(v.ic.hq - hq)});
    report(icd < 1e-6, "inv.var.criteria_recompute", fmt("max |diff| %.2e (tol 1e-6)", icd));
    const NormalityReport jb = jarque_bera_test(v);
    double sum = 0.0;
    for (const auto& c : jb.components) sum += c.jb;
    report(std::abs(jb.joint.jb - sum) < 1e-10 * std::max(1.0, sum), "inv.var.jb_additive",
           fmt("joint %.6f, sum %.6f", jb.joint.jb, sum));
    const StabilityReport st = stability_roots(v);
    bool paired = st.roots.size() == static_cast<std::size_t>(v.K * v.order);
    for (const auto& z : st.roots) {
      if (std::abs(z.imag()) < 1e-12) continue;
      bool has_conj = false;
      for (const auto& w : st.roots) has_conj = has_conj || std::abs(w - std::conj(z)) < 1e-10;
      paired = paired && has_conj;
    }
    report(paired, "inv.var.companion_roots", fmt("%zu roots, complex roots in conjugate pairs", st.roots.size()));

    int rejections = 0;
    const int reps = 500;
    for (int rep = 0; rep < reps; ++rep) {
      DgpSpec s;
      s.kind = DgpKind::white_noise;
      s.K = 2;
      s.T = 200;
      s.seed = rep_seed(505, rep);
      const PricePanel p = generate(s);
      const VarModel m = fit_var(p, 1, DeterministicTerms{}, no_dummies(p.rows()));
      if (lm_serial_test(m, 1).at(0).f_p < 0.05) ++rejections;
    }
    const double rate = 100.0 * rejections / reps;
    report(rate >= 3.0 && rate <= 7.0, "inv.var.lm_size", fmt("%.1f%% rejected at 5%% (band [3, 7])", rate));
  });

  guarded("inv.johansen", [&] {
    const JohansenResult r = reduced_rank_regression(base, 3, JohansenCase::unrestricted_constant, none);
    bool ok = true;
    for (int i = 0; i < r.K; ++i) {
      ok = ok && r.eigenvalues(i) >= -1e-10 && r.eigenvalues(i) < 1.0;
      if (i > 0) ok = ok && r.eigenvalues(i) <= r.eigenvalues(i - 1);
      ok = ok && std::abs(r.max_eigen(i) + r.T_eff * std::log(1.0 - r.eigenvalues(i))) < 1e-9;
      const double next = i + 1 < r.K ? r.trace(i + 1) : 0.0;
      ok = ok && std::abs(r.trace(i) - next - r.max_eigen(i)) < 1e-9;
    }
    ok = ok && std::abs(r.max_eigen.sum() - r.trace(0)) < 1e-9;
    report(ok, "inv.johansen.statistic_identities", "eigenvalues in [0,1), ordered; trace/maxeig identities to 1e-9");

    Eigen::Vector3d sc(4.0, 0.3, 12.0);
    const PricePanel scaled(base.dates(), base.names(), base.values() * sc.asDiagonal());
    const JohansenResult rs = reduced_rank_regression(scaled, 3, JohansenCase::unrestricted_constant, none);
    const double d = (rs.eigenvalues - r.eigenvalues).cwiseAbs().maxCoeff();
    report(d < 1e-9, "inv.johansen.scale_invariance", fmt("max eigenvalue change %.2e (tol 1e-9)", d));

    const Eigen::MatrixXd lhs = r.S01.transpose() * r.S00.inverse() * r.S01 * r.eigenvectors;
    const Eigen::MatrixXd rhs = r.S11 * r.eigenvectors * r.eigenvalues.asDiagonal();
    const Eigen::MatrixXd norm = r.eigenvectors.transpose() * r.S11 * r.eigenvectors;
    const double e1 = (lhs - rhs).cwiseAbs().maxCoeff(), e2 = (norm - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff();
    report(e1 < 1e-8 && e2 < 1e-8, "inv.johansen.decomposition", fmt("residual %.2e, V'S11V - I %.2e (tol 1e-8)", e1, e2));
  });

  guarded("inv.vecm", [&] {
    const JohansenCase c3 = JohansenCase::unrestricted_constant;
    const JohansenResult jr = reduced_rank_regression(base, 3, c3, none);
    const VarModel v = fit_var(base, 3, DeterministicTerms{}, none);
    const double dl = std::abs(jr.loglik(3) - v.loglik);
    report(dl < 1e-6, "inv.vecm.full_rank_loglik", fmt("|logL diff| %.2e (tol 1e-6)", dl));

    const VecmModel m = fit_vecm(base, 2, 1, c3, none);
    const auto back = var_to_vecm(vecm_to_var(m.pi(), m.gamma));
    double rw = (back.first - m.alpha * m.beta.topRows(3).transpose()).cwiseAbs().maxCoeff();
    for (int i = 0; i < 2; ++i) rw = std::max(rw, (back.second[i] - m.gamma[i]).cwiseAbs().maxCoeff());
    report(rw < 1e-8, "inv.vecm.var_equivalence", fmt("max |diff| %.2e (tol 1e-8)", rw));

    bool lr_ok = true;
    for (const char* text : {"1,-1,0", "1,*,0", "1,-1,*", "0,1,-1"}) {
      const RestrictionResult r = restriction_lr_test(jr, 1, RestrictionSpec::parse(text));
      lr_ok = lr_ok && r.lr >= 0.0 && r.loglik_restricted <= r.loglik_unrestricted + 1e-8;
    }
    for (int var = 0; var < 3; ++var) lr_ok = lr_ok && weak_exogeneity_test(jr, 1, var).lr >= 0.0;
    report(lr_ok, "inv.vecm.lr_nonnegative", "LR >= 0 and restricted logL <= unrestricted + 1e-8");

    const RestrictionResult at_opt =
        restriction_lr_test(jr, 1, RestrictionSpec::parse(fmt("1,%.17g,%.17g", m.beta(1, 0), m.beta(2, 0))));
    report(at_opt.lr < 1e-6, "inv.vecm.nested_optimum", fmt("LR %.2e at the unrestricted estimate (tol 1e-6)", at_opt.lr));

    const GrangerResult g = granger_wald(m);
    bool df_ok = g.pairs.size() == 6 && g.all.size() == 3;
    for (const auto& row : g.pairs) df_ok = df_ok && row.df == m.lags && row.chi2 >= 0.0;
    for (const auto& row : g.all) df_ok = df_ok && row.df == 2 * m.lags && row.chi2 >= 0.0;
    report(df_ok, "inv.vecm.granger_df", "pair df = k-1, joint df = (K-1)(k-1), statistics >= 0");

    const Eigen::MatrixXd raw = jr.eigenvectors.leftCols(1);
    const NormalizedBeta a = normalize_beta(raw), b = normalize_beta(-7.5 * raw);
    const double nd = (a.beta - b.beta).cwiseAbs().maxCoeff();
    const double ed = (m.levels_lagged * a.beta - m.levels_lagged * b.beta).cwiseAbs().maxCoeff();
    const double bd = (a.beta - m.beta).cwiseAbs().maxCoeff();
    report(nd < 1e-9 && ed < 1e-9 && bd < 1e-9, "inv.vecm.normalization_invariance",
           fmt("beta %.1e, ECT %.1e, vs fit %.1e (tol 1e-9)", nd, ed, bd));
  });

  guarded("inv.simulate", [&] {
    const DgpSpec s = trivariate_dgp(9, 200);
    report(generate(s).values() == generate(s).values(), "inv.simulate.determinism", "identical spec, identical panel");
    std::vector<double> dev1, dev2;
    for (int rep = 0; rep < 100; ++rep) {
      const PricePanel p = generate(trivariate_dgp(rep_seed(606, rep), 2000));
      const VecmModel m = fit_vecm(p, 1, 1, JohansenCase::unrestricted_constant, no_dummies(p.rows()));
      dev1.push_back(std::abs(m.beta(1, 0) + 1.0));
      dev2.push_back(std::abs(m.beta(2, 0) - 0.5));
    }
    std::nth_element(dev1.begin(), dev1.begin() + 50, dev1.end());
    std::nth_element(dev2.begin(), dev2.begin() + 50, dev2.end());
    const double med = std::max(dev1[50], dev2[50]);
    report(med < 0.05, "inv.simulate.beta_recovery", fmt("median |beta error| %.4f at T=2000 (tol 0.05)", med));
  });

  guarded("inv.pipeline", [&] {
    const PipelineConfig pc = PipelineConfig::from(KeyValueConfig::load(kSource / "configs/demo.conf"));
    const std::string a = run_pipeline(pc).summary.dump(), b = run_pipeline(pc).summary.dump();
    report(a == b, "inv.pipeline.determinism", "two runs on the demo config give identical summaries");
  });
}

}  // namespace

int main(int argc, char** argv) {
  const std::string group = argc > 1 ? argv[1] : "all";
  const std::map<std::string, void (*)()> groups{{"fixture", fixture_group},
                                                 {"oracle", oracle_group},
                                                 {"montecarlo", montecarlo_group},
                                                 {"invariants", invariants_group}};
  if (group == "all") {
    for (const auto& [name, fn] : groups) fn();
  } else if (auto it = groups.find(group); it != groups.end()) {
    it->second();
  } else {
    std::fprintf(stderr, "unknown group '%s' (fixture, oracle, montecarlo, invariants, all)\n", group.c_str());
    return 2;
  }
  std::printf("-- %d passed, %d failed, %d blocked\n", tally.pass, tally.fail, tally.blocked);
  if (tally.fail > 0) return 1;
  if (tally.blocked > 0 && tally.pass == 0) return 77;
  return 0;
}
