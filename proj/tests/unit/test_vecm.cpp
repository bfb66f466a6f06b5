#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/rng.hpp"
#include "lopcoint/simulate.hpp"
#include "lopcoint/vecm.hpp"

using namespace lopcoint;

namespace {

constexpr auto kCase3 = JohansenCase::unrestricted_constant;

PricePanel bivariate(std::uint64_t seed, int T = 300) {
  DgpSpec s;
  s.kind = DgpKind::vecm;
  s.K = 2;
  s.T = T;
  s.seed = seed;
  s.alpha = Eigen::MatrixXd(2, 1);
  s.alpha << -0.5, 0.2;
  s.beta = Eigen::MatrixXd(2, 1);
  s.beta << 1, -1;
  return generate(s);
}

PricePanel scaled(const PricePanel& p, const Eigen::VectorXd& scale) {
  return PricePanel(p.dates(), p.names(), p.values() * scale.asDiagonal(), p.scale());
}

}  // namespace

TEST_SUITE("vecm") {
  TEST_CASE("matches statsmodels VECM") {
    // VECM(y, k_ar_diff=2, coint_rank=1, deterministic='co').fit() on tests/data/vecm3.csv
    const PricePanel p = testing::load("vecm3.csv");
    const VecmModel m = fit_vecm(p, 2, 1, kCase3, no_dummies(p.rows()));
    const double beta[] = {1.0, -0.9380129244478029, -0.07216674827844065};
    const double beta_t[] = {-14.681970100168039, -2.349271733100404};
    const double alpha[] = {-0.17803737633679317, 0.1608973309054143, 0.12011425401768935};
    for (int i = 0; i < 3; ++i) {
      CHECK(m.beta(i, 0) == doctest::Approx(beta[i]).epsilon(1e-8));
      CHECK(m.alpha(i, 0) == doctest::Approx(alpha[i]).epsilon(1e-8));
    }
    CHECK(std::isnan(m.beta_t(0, 0)));
    CHECK(m.beta_t(1, 0) == doctest::Approx(beta_t[0]).epsilon(1e-6));
    CHECK(m.beta_t(2, 0) == doctest::Approx(beta_t[1]).epsilon(1e-6));
    const double gamma[3][6] = {
        {0.13959050688960203, -0.04035554335988005, -0.08595772582123229, -0.09788410923179054, 0.04020049687786863,
         -0.00601403327237477},
        {-0.02886844078118051, 0.0007478225766738, -0.03246593864973957, -0.06073352188439588, -0.08262574304080514,
         -0.08601233617816945},
        {0.1116036523995532, 0.01530903635686626, 0.2762625692587179, -0.11762662530538724, 0.04633189485446872,
         0.00720019182798064}};
    for (int eq = 0; eq < 3; ++eq)
      for (int lag = 0; lag < 2; ++lag)
        for (int v = 0; v < 3; ++v) CHECK(std::abs(m.gamma[lag](eq, v) - gamma[eq][lag * 3 + v]) < 1e-8);
    CHECK(m.loglik == doctest::Approx(-1244.779898576658).epsilon(1e-10));
    CHECK(m.n_params == 3 * static_cast<int>(m.coef.rows()) + 1 * 2);
  }

  TEST_CASE("normalization") {
    Rng rng(5);
    const Eigen::MatrixXd b = testing::random_matrix(rng, 4, 2);
    const NormalizedBeta n = normalize_beta(b);
    CHECK((n.beta.topRows(2) - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    const NormalizedBeta again = normalize_beta(n.beta);
    CHECK((again.beta - n.beta).cwiseAbs().maxCoeff() < 1e-12);
    // same column space
    const Eigen::MatrixXd coef = b.colPivHouseholderQr().solve(n.beta);
    CHECK((b * coef - n.beta).cwiseAbs().maxCoeff() < 1e-10);

    Eigen::MatrixXd z(3, 1);
    z << 0.0, 1.0, 2.0;
    try {
      normalize_beta(z);
      FAIL("expected an error");
    } catch (const ModelError& e) {
      CHECK(std::string(e.what()).find("pivot coefficient is zero; choose another variable") != std::string::npos);
    }
    CHECK(normalize_beta(z, {1}).beta(2, 0) == doctest::Approx(2.0));
  }

  TEST_CASE("long-run equation text") {
    Eigen::VectorXd v(4);
    v << 1.0, 1.9085, -1.1484, -1.7319;
    CHECK(long_run_equation(v, {"MW", "NE", "SO", "WE"}, 0, -0.0477) ==
          "MW = -1.9085*NE + 1.1484*SO + 1.7319*WE + 0.0477");
  }

  TEST_CASE("scale invariance of the normalized vector") {
    const PricePanel p = testing::load("vecm3.csv");
    const VecmModel base = fit_vecm(p, 2, 1, kCase3, no_dummies(p.rows()));
    Eigen::VectorXd s(3);
    s << 2.0, 0.5, 10.0;
    const VecmModel m = fit_vecm(scaled(p, s), 2, 1, kCase3, no_dummies(p.rows()));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(m.beta(i, 0) * s(i) / s(0) - base.beta(i, 0)) < 1e-9);
    CHECK(std::abs(m.beta_t(1, 0) - base.beta_t(1, 0)) < 1e-6);
    for (int i = 0; i < 3; ++i) CHECK(m.johansen.eigenvalues(i) == doctest::Approx(base.johansen.eigenvalues(i)).epsilon(1e-9));
  }

  TEST_CASE("error-correction terms and VECM/VAR rewriting") {
    const PricePanel p = testing::load("vecm3.csv");
    for (auto c : {JohansenCase::none, JohansenCase::restricted_constant, kCase3, JohansenCase::restricted_trend,
                   JohansenCase::unrestricted_trend})
      for (int r : {1, 2}) {
        const VecmModel m = fit_vecm(p, 2, r, c, no_dummies(p.rows()));
        CHECK((ect_series(m) - m.ect).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((m.ect - m.levels_lagged * m.beta).cwiseAbs().maxCoeff() < 1e-10);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m.pi());
        lu.setThreshold(1e-10);
        CHECK(lu.rank() <= r);
        if (c == kCase3) {
          CHECK(m.ce_intercept.size() == r);
          for (int j = 0; j < r; ++j) CHECK(std::abs(m.ce_intercept(j) + m.ect.col(j).mean()) < 1e-12);
        }
        // fitted values are the same whether written as VECM or levels VAR
        const auto pi = vecm_to_var(m.pi(), m.gamma);
        const auto back = var_to_vecm(pi);
        CHECK((back.first - m.pi()).cwiseAbs().maxCoeff() < 1e-10);
        for (int i = 0; i < 2; ++i) CHECK((back.second[i] - m.gamma[i]).cwiseAbs().maxCoeff() < 1e-10);
        const Eigen::MatrixXd& y = p.values();
        const Eigen::MatrixXd det_fit = m.Y - m.residuals;
        const Eigen::Index t0 = m.sample_start;
        Eigen::MatrixXd offset(m.T_eff, 3);
        for (int t = 0; t < m.T_eff; ++t) {
          Eigen::VectorXd lv = Eigen::VectorXd::Zero(3);
          for (int i = 0; i < 3; ++i) lv += pi[i] * y.row(t0 + t - 1 - i).transpose();
          // difference between the VAR fitted change and the VECM fitted change is deterministic
          offset.row(t) = (lv - y.row(t0 + t - 1).transpose()).transpose() - det_fit.row(t);
        }
        if (c == JohansenCase::none) {
          CHECK(offset.cwiseAbs().maxCoeff() < 1e-8);
        } else if (c == kCase3 || c == JohansenCase::restricted_constant) {
          for (int t = 1; t < m.T_eff; ++t) CHECK((offset.row(t) - offset.row(0)).cwiseAbs().maxCoeff() < 1e-8);
        }
      }
  }

  TEST_CASE("rewriting identities on random coefficients") {
    Rng rng(99);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Eigen::MatrixXd> pi;
      for (int i = 0; i < 3; ++i) pi.push_back(testing::random_matrix(rng, 3, 3));
      const auto v = var_to_vecm(pi);
      const auto w = vecm_to_var(v.first, v.second);
      for (int i = 0; i < 3; ++i) CHECK((w[i] - pi[i]).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("rank bounds") {
    const PricePanel p = testing::load("vecm3.csv");
    CHECK_THROWS_AS(fit_vecm(p, 2, 0, kCase3, no_dummies(p.rows())), ModelError);
    CHECK_THROWS_AS(fit_vecm(p, 2, 3, kCase3, no_dummies(p.rows())), ModelError);
    CHECK_THROWS_AS(fit_vecm(p, 0, 1, kCase3, no_dummies(p.rows())), ModelError);
  }

  TEST_CASE("Granger degrees of freedom") {
    const PricePanel p = testing::load("vecm3.csv");
    const VecmModel m = fit_vecm(p, 2, 1, kCase3, no_dummies(p.rows()));
    const GrangerResult g = granger_wald(m);
    CHECK(g.pairs.size() == 6);
    CHECK(g.all.size() == 3);
    for (const auto& row : g.pairs) {
      CHECK(row.df == 2);
      CHECK(row.dependent != row.excluded);
      CHECK(row.chi2 >= 0.0);
    }
    for (const auto& row : g.all) CHECK(row.df == 4);
    // direct Wald on one exclusion
    const int eq = 1, var = 0;
    const int c1 = m.lagged_difference_column(var, 1), c2 = m.lagged_difference_column(var, 2);
    CHECK(c2 == c1 + 1);
    const Eigen::Vector2d b = m.coef.block(c1, eq, 2, 1);
    const Eigen::Matrix2d V = m.sigma(eq, eq) * m.xtx_inv.block(c1, c1, 2, 2);
    const double w = b.dot(V.inverse() * b);
    bool found = false;
    for (const auto& row : g.pairs)
      if (row.dependent == eq && row.excluded == var) {
        CHECK(row.chi2 == doctest::Approx(w).epsilon(1e-10));
        found = true;
      }
    CHECK(found);
  }

  TEST_CASE("restriction parsing") {
    const RestrictionSpec s = RestrictionSpec::parse("1,-1,0,0,*; 0, 1 ,-1,0,*", "x");
    REQUIRE(s.pattern.size() == 2);
    CHECK(s.pattern[0][1] == -1.0);
    CHECK(!s.pattern[1][4]);
    CHECK_THROWS_AS(RestrictionSpec::parse("1,a"), DataError);
  }

  TEST_CASE("likelihood-ratio tests") {
    const PricePanel p = testing::load("vecm3.csv");
    const JohansenResult jr = reduced_rank_regression(p, 3, kCase3, no_dummies(p.rows()));
    const VecmModel m = fit_vecm(p, 2, 1, kCase3, no_dummies(p.rows()));

    SUBCASE("restriction through the unrestricted estimate gives zero") {
      char buf[128];
      std::snprintf(buf, sizeof buf, "1,%.17g,%.17g", m.beta(1, 0), m.beta(2, 0));
      const RestrictionResult r = restriction_lr_test(jr, 1, RestrictionSpec::parse(buf));
      CHECK(r.df == 2);
      CHECK(r.lr < 1e-6);
      CHECK(r.loglik_unrestricted == doctest::Approx(jr.loglik(1)).epsilon(1e-12));
    }
    SUBCASE("nested restrictions order the likelihoods") {
      const RestrictionResult loose = restriction_lr_test(jr, 1, RestrictionSpec::parse("1,*,0"));
      const RestrictionResult tight = restriction_lr_test(jr, 1, RestrictionSpec::parse("1,-1,0"));
      CHECK(loose.df == 1);
      CHECK(tight.df == 2);
      CHECK(loose.loglik_restricted >= tight.loglik_restricted - 1e-8);
      CHECK(loose.lr <= tight.lr + 1e-8);
      CHECK(tight.p_value > 0.0);
    }
    SUBCASE("weak exogeneity closed form equals switching") {
      for (int v = 0; v < 3; ++v) {
        const RestrictionResult closed = weak_exogeneity_test(jr, 1, v);
        const RestrictedFit sw =
            fit_restricted(jr, 1, Eigen::MatrixXd::Identity(3, 3), Eigen::VectorXd::Zero(3), {v});
        CHECK(closed.df == 1);
        CHECK(sw.converged);
        CHECK(closed.lr == doctest::Approx(2.0 * (jr.loglik(1) - sw.loglik)).epsilon(1e-6));
      }
    }
    SUBCASE("not over-identifying") {
      CHECK_THROWS_AS(restriction_lr_test(jr, 1, RestrictionSpec::parse("1,*,*")), ModelError);
    }
    SUBCASE("pairwise requires rank one") {
      CHECK_THROWS_AS(pairwise_lop(jr, 2), ModelError);
      const PairwiseLopTable t = pairwise_lop(jr, 1);
      CHECK(t.rows.size() == 3);
      const Eigen::MatrixXi d = t.decisions();
      CHECK(d(0, 0) == -1);
      CHECK(d(0, 1) == d(1, 0));
    }
    SUBCASE("joint test rank check") {
      try {
        joint_lop_test(jr, 1);
        FAIL("expected an error");
      } catch (const ModelError& e) {
        CHECK(std::string(e.what()).find("joint LOP untestable at rank 1") != std::string::npos);
      }
      const RestrictionResult j = joint_lop_test(jr, 2);
      CHECK(j.df == 2 * (3 - 2) - 0);
    }
  }

  TEST_CASE("identical series satisfy the law of one price") {
    const PricePanel b = bivariate(3);
    Eigen::MatrixXd v(b.rows(), 2);
    Rng rng(17);
    v.col(0) = b.values().col(0);
    for (Eigen::Index t = 0; t < b.rows(); ++t) v(t, 1) = v(t, 0) + 0.05 * rng.normal();
    const PricePanel p(b.dates(), {"a", "b"}, v);
    const RestrictionResult r =
        restriction_lr_test(p, 2, 1, kCase3, no_dummies(p.rows()), RestrictionSpec::parse("1,-1"));
    CHECK(r.df == 1);
    CHECK(r.p_value > 0.001);
  }

  TEST_CASE("with two variables the joint test is the pairwise test") {
    const PricePanel p = bivariate(8);
    const JohansenResult jr = reduced_rank_regression(p, 2, kCase3, no_dummies(p.rows()));
    const RestrictionResult joint = joint_lop_test(jr, 1);
    const PairwiseLopTable pw = pairwise_lop(jr, 1);
    REQUIRE(pw.rows.size() == 1);
    CHECK(std::abs(joint.lr - pw.rows[0].result.lr) < 1e-9);
    CHECK(joint.df == pw.rows[0].result.df);
  }
}
