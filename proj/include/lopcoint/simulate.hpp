#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lopcoint/data.hpp"

namespace lopcoint {

enum class DgpKind { white_noise, random_walk, var, vecm };

std::string to_string(DgpKind k);
DgpKind dgp_kind_from_string(const std::string& s);

/// Data-generating process. Innovations are N(0, innovation_cov) drawn from
/// Rng(seed) in time-major order (all K components of t before t + 1).
///
///   white_noise  y_t = c + e_t
///   random_walk  y_t = y_{t-1} + c + e_t, y_{-1} = 0, no burn-in
///   var          y_t = c + sum_i lags[i] y_{t-i} + e_t, presample = start
///   vecm         dy_t = c + alpha beta' y_{t-1} + sum_i lags[i] dy_{t-i} + e_t
///
/// var and vecm discard the first `burn_in` draws.
struct DgpSpec {
  DgpKind kind = DgpKind::white_noise;
  int K = 1;
  int T = 100;
  int burn_in = 200;
  std::uint64_t seed = 1;
  std::vector<Eigen::MatrixXd> lags;  // VAR lag matrices or VECM Gamma_i
  Eigen::MatrixXd alpha;              // K x r
  Eigen::MatrixXd beta;               // K x r
  Eigen::VectorXd intercept;          // K or empty
  Eigen::MatrixXd innovation_cov;     // K x K; empty means identity
  Eigen::VectorXd start;              // presample level, K or empty (zero)
  bool require_stable = false;        // VAR: reject explosive or unit-root lag polynomials
  std::vector<std::string> names;     // default y1..yK
  YearMonth first_date{2000, 1};
};

/// Checks dimensions and, for a VECM, that alpha beta' has rank r.
void validate(const DgpSpec& spec);

PricePanel generate(const DgpSpec& spec);

}  // namespace lopcoint
