#include "doctest.h"
#include "helpers.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/regression.hpp"

using namespace lopcoint;

TEST_SUITE("regression") {
  TEST_CASE("least squares agrees with the normal equations") {
    Rng rng(101);
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::MatrixXd X = testing::random_matrix(rng, 60, 5);
      const Eigen::MatrixXd Y = testing::random_matrix(rng, 60, 3);
      const LeastSquares ls = least_squares(X, Y);
      const Eigen::MatrixXd oracle = (X.transpose() * X).ldlt().solve(X.transpose() * Y);
      CHECK((ls.coef - oracle).cwiseAbs().maxCoeff() < 1e-10);
      const Eigen::MatrixXd inv = (X.transpose() * X).inverse();
      CHECK((ls.xtx_inv - inv).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  TEST_CASE("standard errors use n - m") {
    Rng rng(5);
    const Eigen::MatrixXd X = testing::random_matrix(rng, 40, 3);
    const Eigen::MatrixXd Y = testing::random_matrix(rng, 40, 1);
    const LeastSquares ls = least_squares(X, Y);
    const double s2 = ls.residuals.squaredNorm() / 37.0;
    CHECK(ls.std_errors()(1, 0) == doctest::Approx(std::sqrt(s2 * ls.xtx_inv(1, 1))));
  }

  TEST_CASE("rank deficiency is reported") {
    Rng rng(3);
    Eigen::MatrixXd X = testing::random_matrix(rng, 30, 3);
    X.col(2) = 2.0 * X.col(0);
    CHECK_THROWS_AS(least_squares(X, testing::random_matrix(rng, 30, 1)), NumericalError);
  }

  TEST_CASE("partialling out leaves residuals orthogonal") {
    Rng rng(9);
    const Eigen::MatrixXd Z = testing::random_matrix(rng, 50, 4);
    const Eigen::MatrixXd Y = testing::random_matrix(rng, 50, 2);
    const Eigen::MatrixXd R = partial_out(Z, Y);
    CHECK((Z.transpose() * R).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(partial_out(Eigen::MatrixXd(50, 0), Y) == Y);
  }

  TEST_CASE("gaussian log-likelihood") {
    Eigen::MatrixXd E(4, 1);
    E << 1, -1, 1, -1;
    const double expected = -0.5 * 4 * (1.0 + std::log(2.0 * 3.14159265358979323846) + std::log(1.0));
    CHECK(gaussian_loglik(E) == doctest::Approx(expected));
  }
}
