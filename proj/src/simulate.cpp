#include "lopcoint/simulate.hpp"

#include <Eigen/Eigenvalues>

#include "lopcoint/errors.hpp"
#include "lopcoint/rng.hpp"
#include "lopcoint/var_model.hpp"

namespace lopcoint {

std::string to_string(DgpKind k) {
  switch (k) {
    case DgpKind::white_noise: return "white_noise";
    case DgpKind::random_walk: return "random_walk";
    case DgpKind::var: return "var";
    case DgpKind::vecm: return "vecm";
  }
  return "?";
}

DgpKind dgp_kind_from_string(const std::string& s) {
  if (s == "white_noise" || s == "white-noise") return DgpKind::white_noise;
  if (s == "random_walk" || s == "random-walk") return DgpKind::random_walk;
  if (s == "var" || s == "VAR") return DgpKind::var;
  if (s == "vecm" || s == "VECM") return DgpKind::vecm;
  throw DataError("unknown process '" + s + "' (white_noise, random_walk, var, vecm)");
}

void validate(const DgpSpec& spec) {
  const Eigen::Index K = spec.K;
  if (K < 1) throw ModelError("K must be positive");
  if (spec.T < 1) throw ModelError("T must be positive");
  if (spec.burn_in < 0) throw ModelError("burn-in must be non-negative");
  if (spec.intercept.size() != 0 && spec.intercept.size() != K) throw ModelError("intercept must have K entries");
  if (spec.start.size() != 0 && spec.start.size() != K) throw ModelError("start must have K entries");
  if (spec.innovation_cov.size() != 0) {
    if (spec.innovation_cov.rows() != K || spec.innovation_cov.cols() != K)
      throw ModelError("innovation covariance must be K x K");
    if (!spec.innovation_cov.isApprox(spec.innovation_cov.transpose()))
      throw ModelError("innovation covariance must be symmetric");
  }
  if (!spec.names.empty() && static_cast<Eigen::Index>(spec.names.size()) != K)
    throw ModelError("names must have K entries");
  for (const auto& m : spec.lags)
    if (m.rows() != K || m.cols() != K) throw ModelError("lag matrices must be K x K");
  if (spec.kind == DgpKind::var) {
    if (spec.lags.empty()) throw ModelError("VAR process needs at least one lag matrix");
    if (spec.require_stable && !companion_roots(spec.lags).stable)
      throw ModelError("VAR lag polynomial is not stable");
  }
  if (spec.kind == DgpKind::vecm) {
    if (spec.alpha.rows() != K || spec.beta.rows() != K || spec.alpha.cols() != spec.beta.cols() ||
        spec.alpha.cols() < 1 || spec.alpha.cols() > K)
      throw ModelError("VECM needs alpha and beta of size K x r");
    const Eigen::MatrixXd Pi = spec.alpha * spec.beta.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Pi);
    const auto& sv = svd.singularValues();
    const Eigen::Index r = spec.alpha.cols();
    const bool is_zero = sv(0) == 0.0;
    // alpha = 0 is allowed (no error correction); otherwise the rank must be r
    if (!is_zero && ((r > 0 && sv(r - 1) <= 1e-10 * sv(0)) || (r < K && sv(r) > 1e-10 * sv(0))))
      throw ModelError("alpha beta' does not have rank r");
  }
}

namespace {

Eigen::MatrixXd innovation_factor(const DgpSpec& spec) {
  const Eigen::Index K = spec.K;
  if (spec.innovation_cov.size() == 0) return Eigen::MatrixXd::Identity(K, K);
  Eigen::LLT<Eigen::MatrixXd> llt(spec.innovation_cov);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spec.innovation_cov);
  if (es.eigenvalues().minCoeff() < -1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()))
    throw ModelError("innovation covariance is not positive semi-definite");
  return es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

}  // namespace

PricePanel generate(const DgpSpec& spec) {
  validate(spec);
  const Eigen::Index K = spec.K;
  const bool stationary_start = spec.kind == DgpKind::var || spec.kind == DgpKind::vecm;
  const Eigen::Index burn = stationary_start ? spec.burn_in : 0;
  const Eigen::Index total = burn + spec.T;
  const Eigen::Index p = static_cast<Eigen::Index>(spec.lags.size());
  // presample rows hold the start value; VECM needs one extra for differences
  const Eigen::Index pre = spec.kind == DgpKind::vecm ? p + 1 : std::max<Eigen::Index>(p, 1);

  const Eigen::MatrixXd F = innovation_factor(spec);
  const Eigen::VectorXd c = spec.intercept.size() ? spec.intercept : Eigen::VectorXd::Zero(K);
  const Eigen::VectorXd y0 = spec.start.size() ? spec.start : Eigen::VectorXd::Zero(K);
  Eigen::MatrixXd Pi;
  if (spec.kind == DgpKind::vecm) Pi = spec.alpha * spec.beta.transpose();

  Rng rng(spec.seed);
  Eigen::MatrixXd y(pre + total, K);
  for (Eigen::Index t = 0; t < pre; ++t) y.row(t) = y0.transpose();
  Eigen::VectorXd z(K);
  for (Eigen::Index s = 0; s < total; ++s) {
    const Eigen::Index t = pre + s;
    for (Eigen::Index k = 0; k < K; ++k) z(k) = rng.normal();
    Eigen::VectorXd v = c + F * z;
    switch (spec.kind) {
      case DgpKind::white_noise: break;
      case DgpKind::random_walk: v += y.row(t - 1).transpose(); break;
      case DgpKind::var:
        for (Eigen::Index i = 0; i < p; ++i) v += spec.lags[i] * y.row(t - 1 - i).transpose();
        break;
      case DgpKind::vecm:
        v += Pi * y.row(t - 1).transpose();
        for (Eigen::Index i = 0; i < p; ++i) v += spec.lags[i] * (y.row(t - 1 - i) - y.row(t - 2 - i)).transpose();
        v += y.row(t - 1).transpose();
        break;
    }
    y.row(t) = v.transpose();
  }

  std::vector<std::string> names = spec.names;
  if (names.empty())
    for (Eigen::Index k = 0; k < K; ++k) names.push_back("y" + std::to_string(k + 1));
  std::vector<YearMonth> dates;
  dates.reserve(spec.T);
  for (int t = 0; t < spec.T; ++t) dates.push_back(spec.first_date.plus_months(t));
  return PricePanel(std::move(dates), std::move(names), y.bottomRows(spec.T), Scale::level);
}

}  // namespace lopcoint
