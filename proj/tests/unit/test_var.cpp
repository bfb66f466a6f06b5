#include <algorithm>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/simulate.hpp"
#include "lopcoint/var_model.hpp"

using namespace lopcoint;
using cd = std::complex<double>;

namespace {

// Roots of det(z^p I - sum_i pi_i z^{p-i}) from its coefficients, which are
// recovered by evaluating the determinant at roots of unity.
std::vector<double> polynomial_root_moduli(const std::vector<Eigen::MatrixXd>& pi) {
  const int K = static_cast<int>(pi[0].rows());
  const int p = static_cast<int>(pi.size());
  const int deg = K * p;
  const int n = deg + 1;
  std::vector<cd> values(n);
  for (int s = 0; s < n; ++s) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * s / n);
    Eigen::MatrixXcd M = std::pow(z, p) * Eigen::MatrixXcd::Identity(K, K);
    for (int i = 0; i < p; ++i) M -= std::pow(z, p - 1 - i) * pi[i].cast<cd>();
    values[s] = M.determinant();
  }
  std::vector<cd> coef(n);  // coef[j] multiplies z^j
  for (int j = 0; j < n; ++j) {
    cd acc = 0.0;
    for (int s = 0; s < n; ++s) acc += values[s] * std::polar(1.0, -2.0 * std::numbers::pi * s * j / n);
    coef[j] = acc / static_cast<double>(n);
  }
  // Durand-Kerner on the monic polynomial
  std::vector<cd> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = std::pow(cd(0.4, 0.9), i);
  for (int it = 0; it < 2000; ++it) {
    for (int i = 0; i < deg; ++i) {
      cd num = coef[deg];
      for (int j = deg - 1; j >= 0; --j) num = num * roots[i] + coef[j];
      cd den = coef[deg];
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= roots[i] - roots[j];
      roots[i] -= num / den;
    }
  }
  std::vector<double> mod;
  for (auto r : roots) mod.push_back(std::abs(r));
  std::sort(mod.rbegin(), mod.rend());
  return mod;
}

}  // namespace

TEST_SUITE("var") {
  TEST_CASE("VAR(2) with constant matches statsmodels") {
    // VAR(y).fit(2, trend="c") on tests/data/var2.csv; params rows: const, L1.y1, L1.y2, L2.y1, L2.y2
    const double sm[5][2] = {{1.4005374943597837, 1.923341514803678},
                             {0.3735297663916669, 0.2993004863821402},
                             {0.06507448125047414, 0.1729953409349303},
                             {0.12899334122726877, 0.01498990396493719},
                             {0.02088793519943204, 0.13717934583907976}};
    const PricePanel p = testing::load("var2.csv");
    const VarModel m = fit_var(p, 2, DeterministicTerms{}, no_dummies(p.rows()));
    for (int eq = 0; eq < 2; ++eq) {
      CHECK(m.coef(4, eq) == doctest::Approx(sm[0][eq]).epsilon(1e-10));  // constant
      CHECK(m.lag_matrices[0](eq, 0) == doctest::Approx(sm[1][eq]).epsilon(1e-10));
      CHECK(m.lag_matrices[0](eq, 1) == doctest::Approx(sm[2][eq]).epsilon(1e-10));
      CHECK(m.lag_matrices[1](eq, 0) == doctest::Approx(sm[3][eq]).epsilon(1e-10));
      CHECK(m.lag_matrices[1](eq, 1) == doctest::Approx(sm[4][eq]).epsilon(1e-10));
    }
    CHECK(m.loglik == doctest::Approx(-687.6256086118237).epsilon(1e-10));
    CHECK(m.sigma(0, 0) == doctest::Approx(0.944412831521329).epsilon(1e-10));
    CHECK(m.sigma(0, 1) == doctest::Approx(0.00291030008691937).epsilon(1e-8));
    const StabilityReport s = stability_roots(m);
    const double sm_mod[] = {0.6710963034331312, 0.3929368313206091, 0.29095661579405724, 0.22655141163308504};
    for (int i = 0; i < 4; ++i) CHECK(s.moduli[i] == doctest::Approx(sm_mod[i]).epsilon(1e-9));
    CHECK(s.stable);
  }

  TEST_CASE("companion roots agree with the characteristic polynomial") {
    Rng rng(21);
    for (int rep = 0; rep < 10; ++rep) {
      const int K = 2 + rep % 3, p = 1 + rep % 3;
      std::vector<Eigen::MatrixXd> pi;
      for (int i = 0; i < p; ++i) pi.push_back(0.3 * testing::random_matrix(rng, K, K));
      const StabilityReport s = companion_roots(pi);
      const auto oracle = polynomial_root_moduli(pi);
      REQUIRE(s.moduli.size() == oracle.size());
      for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(std::abs(s.moduli[i] - oracle[i]) < 1e-8);
    }
  }

  TEST_CASE("information criteria follow the per-observation convention") {
    // lag-0 row of the published selection table: logL 1797.025, 28 parameters, T = 270
    const InformationCriteria ic = information_criteria(1797.025, 28, 270);
    CHECK(ic.aic == doctest::Approx(-13.10389).epsilon(1e-6));
    CHECK(ic.sc == doctest::Approx(-12.73072).epsilon(1e-6));
    CHECK(ic.hq == doctest::Approx(-12.95404).epsilon(1e-6));
  }

  TEST_CASE("lag selection table") {
    const PricePanel p = testing::load("var2.csv");
    const LagSelectionTable t = lag_order_selection(p, 4, DeterministicTerms{}, no_dummies(p.rows()));
    REQUIRE(t.rows.size() == 5);
    CHECK(t.T_eff == p.rows() - 4);
    CHECK(std::isnan(t.rows[0].lr));
    for (const auto& r : t.rows) CHECK(t.rows[t.selected_aic].ic.aic <= r.ic.aic);
    for (const auto& r : t.rows) CHECK(t.rows[t.selected_sc].ic.sc <= r.ic.sc);
    // SC penalizes harder than AIC once ln T > 2
    CHECK(t.selected_sc <= t.selected_aic);
    CHECK(t.selected_hq <= t.selected_aic);
    // the LR choice is the last lag whose test rejects
    if (t.selected_lr > 0) CHECK(t.rows[t.selected_lr].lr_p < 0.05);
    for (int l = t.selected_lr + 1; l <= 4; ++l) CHECK(t.rows[l].lr_p >= 0.05);
    CHECK(t.rows[0].n_params == 2);
  }

  TEST_CASE("LM test degrees of freedom follow the Rao approximation") {
    DgpSpec s;
    s.kind = DgpKind::random_walk;
    s.K = 4;
    s.T = 275;
    s.seed = 2;
    const PricePanel p = generate(s);
    const VarModel m3 = fit_var(p, 3, DeterministicTerms{true, true}, no_dummies(p.rows()));
    const auto lm3 = lm_serial_test(m3, 2);
    CHECK(lm3[0].lre_df == 16);
    CHECK(lm3[0].f_df2 == doctest::Approx(767.455).epsilon(1e-5));
    std::vector<YearMonth> months{{2003, 11}, {2016, 11}, {2018, 1}, {2020, 7}, {2020, 5}};
    std::vector<YearMonth> dates = p.dates();
    DummySpec spec;
    for (int i = 0; i < 5; ++i) spec.entries.push_back({"D" + std::to_string(i + 1), {dates[40 + 30 * i]}});
    const VarModel m5 = fit_var(p, 5, DeterministicTerms{true, true}, build_dummies(spec, dates));
    CHECK(lm_serial_test(m5, 1)[0].f_df2 == doctest::Approx(721.63).epsilon(1e-4));
  }

  TEST_CASE("LM statistic against a direct auxiliary regression") {
    const PricePanel p = testing::load("var2.csv");
    const VarModel m = fit_var(p, 2, DeterministicTerms{}, no_dummies(p.rows()));
    const int h = 2;
    const Eigen::Index T = m.residuals.rows(), K = 2;
    Eigen::MatrixXd Z(T, m.X.cols() + K);
    Z << m.X, Eigen::MatrixXd::Zero(T, K);
    for (Eigen::Index t = h; t < T; ++t) Z.row(t).tail(K) = m.residuals.row(t - h);
    const Eigen::MatrixXd B = (Z.transpose() * Z).ldlt().solve(Z.transpose() * m.residuals);
    const Eigen::MatrixXd E = m.residuals - Z * B;
    const double N = T - m.X.cols() - K - 0.5;
    const double lre = N * std::log((m.residuals.transpose() * m.residuals).determinant() /
                                    (E.transpose() * E).determinant());
    CHECK(lm_serial_test(m, 2)[1].lre == doctest::Approx(lre).epsilon(1e-9));
  }

  TEST_CASE("Jarque-Bera against direct moments") {
    Rng rng(33);
    Eigen::MatrixXd U = testing::random_matrix(rng, 200, 3);
    U.col(1) += 0.5 * U.col(0).array().square().matrix();
    const Eigen::Index T = U.rows();
    const Eigen::RowVectorXd mean = U.colwise().mean();
    const Eigen::MatrixXd C = U.rowwise() - mean;
    const Eigen::MatrixXd S = C.transpose() * C / static_cast<double>(T);
    const Eigen::MatrixXd L = S.llt().matrixL();
    const Eigen::MatrixXd V = L.triangularView<Eigen::Lower>().solve(C.transpose()).transpose();
    const NormalityReport r = jarque_bera_cholesky(U);
    double joint = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double s = V.col(k).array().cube().mean();
      const double ku = V.col(k).array().pow(4).mean();
      const double jb = T * s * s / 6.0 + T * (ku - 3.0) * (ku - 3.0) / 24.0;
      CHECK(r.components[k].skewness == doctest::Approx(s).epsilon(1e-10));
      CHECK(r.components[k].kurtosis == doctest::Approx(ku).epsilon(1e-10));
      CHECK(r.components[k].jb == doctest::Approx(jb).epsilon(1e-10));
      joint += jb;
    }
    CHECK(r.joint.jb == doctest::Approx(joint).epsilon(1e-10));
    CHECK(r.joint.df == 6);
    for (int k = 0; k < 3; ++k) CHECK(r.components[k].p == doctest::Approx(std::exp(-r.components[k].jb / 2.0)));
  }

  TEST_CASE("dummies and trend enter as regressors") {
    const PricePanel p = testing::load("var2.csv");
    DummySpec spec{{{"D1", {p.dates()[100]}}}};
    const VarModel m = fit_var(p, 1, DeterministicTerms{true, true}, build_dummies(spec, p.dates()));
    CHECK(m.regressors_per_equation() == 2 + 2 + 1);
    CHECK(m.dummy_coef().cols() == 1);
    CHECK(m.deterministic_coef().cols() == 2);
    // the dummied observation is fitted exactly
    CHECK(std::abs(m.residuals(100 - 1, 0)) < 1e-10);
    CHECK_THROWS_AS(fit_var(p, -1, DeterministicTerms{}, no_dummies(p.rows())), DataError);
    const PricePanel tiny = p.select({0, 1});
    const PricePanel short_panel(std::vector<YearMonth>(tiny.dates().begin(), tiny.dates().begin() + 8), tiny.names(),
                                 tiny.values().topRows(8));
    CHECK_THROWS_AS(fit_var(short_panel, 3, DeterministicTerms{true, true}, no_dummies(8)), DataError);
  }

  TEST_CASE("noiseless recursion is recovered exactly") {
    DgpSpec s;
    s.kind = DgpKind::var;
    s.K = 2;
    s.T = 60;
    s.burn_in = 0;
    s.innovation_cov = Eigen::MatrixXd::Zero(2, 2);
    Eigen::MatrixXd A(2, 2);
    A << 0.7, 0.2, -0.3, 0.5;
    s.lags = {A};
    s.start = Eigen::Vector2d(1.0, -2.0);
    const PricePanel p = generate(s);
    const VarModel m = fit_var(p, 1, DeterministicTerms{false, false}, no_dummies(p.rows()));
    CHECK((m.lag_matrices[0] - A).cwiseAbs().maxCoeff() < 1e-8);
  }

  TEST_CASE("information criteria find a strong second lag") {
    int sc2 = 0, hq2 = 0;
    for (int seed = 0; seed < 100; ++seed) {
      DgpSpec s;
      s.kind = DgpKind::var;
      s.K = 2;
      s.T = 500;
      s.seed = 5000 + seed;
      Eigen::MatrixXd A1(2, 2), A2(2, 2);
      A1 << 0.5, 0.1, 0.0, 0.4;
      A2 << -0.4, 0.0, 0.1, -0.3;
      s.lags = {A1, A2};
      const PricePanel p = generate(s);
      const LagSelectionTable t = lag_order_selection(p, 4, DeterministicTerms{}, no_dummies(p.rows()));
      sc2 += t.selected_sc == 2;
      hq2 += t.selected_hq == 2;
    }
    CHECK(sc2 > 50);
    CHECK(hq2 > 50);
  }
}
