#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lopcoint/data.hpp"

namespace lopcoint {

/// Deterministic specification of the cointegrated VAR.
enum class JohansenCase {
  none = 1,                   // no deterministic terms
  restricted_constant = 2,    // constant only inside the cointegration relation
  unrestricted_constant = 3,  // constant in the VAR (drift in levels)
  restricted_trend = 4,       // trend inside the relation, unrestricted constant
  unrestricted_trend = 5,     // unrestricted constant and trend
};

std::string to_string(JohansenCase c);
JohansenCase johansen_case_from_string(const std::string& s);

/// Extra rows of beta for the restricted deterministic term (0 or 1).
int restricted_rows(JohansenCase c);

/// Output of the reduced-rank regression.
///
/// R0 and R1 are dp_t and the (possibly augmented) lagged level after
/// partialling out the lagged differences, unrestricted deterministics and
/// dummies; S_ij = R_i' R_j / T_eff. Eigenvectors satisfy V' S11 V = I.
struct JohansenResult {
  JohansenCase jcase = JohansenCase::unrestricted_constant;
  int K = 0;
  int lags = 0;  // VAR order k in levels; k - 1 lagged differences
  int T_eff = 0;
  Eigen::Index sample_start = 0;
  std::vector<std::string> names;  // K region names plus the restricted term, if any

  Eigen::VectorXd eigenvalues;   // K values, non-increasing
  Eigen::MatrixXd eigenvectors;  // (K + restricted rows) x K
  Eigen::VectorXd trace;         // r = 0..K-1
  Eigen::VectorXd max_eigen;     // r = 0..K-1

  Eigen::MatrixXd S00, S01, S11;
  Eigen::MatrixXd R0, R1;
  Eigen::MatrixXd Z2;  // partialled-out regressors, T_eff x q

  /// Concentrated Gaussian log-likelihood at rank r.
  double loglik(int rank) const;
};

JohansenResult reduced_rank_regression(const PricePanel& panel, int lags, JohansenCase jcase,
                                       const DummyMatrix& dummies);

struct RankTestRow {
  int r = 0;  // hypothesis: rank <= r
  double eigenvalue = 0.0;
  double statistic = 0.0;
  double critical_value = 0.0;
  double p_value = 1.0;
  bool reject = false;
};

using RankTestTable = std::vector<RankTestRow>;

RankTestTable trace_test(const JohansenResult& result, double level = 0.05);
RankTestTable max_eigen_test(const JohansenResult& result, double level = 0.05);

enum class JohansenStatistic { trace, max_eigen };

/// Asymptotic upper-tail p-value for dimension K - r, clamped to [1e-4, 0.9999].
double johansen_pvalue(double statistic, int dim, JohansenCase jcase, JohansenStatistic which);
/// Asymptotic critical value at upper-tail probability `level` (0.0001 <= level <= 0.9999).
double johansen_critical_value(double level, int dim, JohansenCase jcase, JohansenStatistic which);

enum class RankPolicy { trace, max_eigen, agree };

RankPolicy rank_policy_from_string(const std::string& s);

struct RankSelection {
  int rank = 0;
  std::optional<std::string> warning;
};

/// First non-rejected hypothesis. Under `agree` both tables must give the same rank.
RankSelection select_rank(const RankTestTable& trace, const RankTestTable& max_eigen, RankPolicy policy);

}  // namespace lopcoint
