#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lopcoint/data.hpp"

namespace lopcoint {

/// Deterministic terms in a Dickey-Fuller type regression.
enum class Deterministic { none, constant, constant_trend };

enum class LagCriterion { aic, sc, fixed };

enum class UnitRootMethod { adf, pp };

std::string to_string(Deterministic d);
std::string to_string(UnitRootMethod m);

struct UnitRootResult {
  double statistic = 0.0;  // t-ratio on the lagged level (PP: corrected)
  double p_value = 1.0;
  int lags_or_bandwidth = 0;
  Deterministic spec = Deterministic::constant;
  int n_effective = 0;
  UnitRootMethod method = UnitRootMethod::adf;
};

/// Augmented Dickey-Fuller test.
///
/// Regresses dy_t on y_{t-1}, dy_{t-1..t-k} and the deterministic terms. With
/// `criterion` AIC or SC the lag k is chosen over 0..max_lag on the common
/// sample that the largest lag allows (ties go to the smaller k) and the chosen
/// model is then re-estimated on every observation available to it. With
/// `fixed`, k = max_lag.
UnitRootResult adf_test(std::span<const double> series, Deterministic spec, int max_lag,
                        LagCriterion criterion = LagCriterion::aic);

/// Default Newey-West bandwidth floor(4 (n/100)^(2/9)).
int newey_west_bandwidth(int n);

/// Bartlett-kernel long-run variance gamma_0 + 2 sum_{j<=l} (1 - j/(l+1)) gamma_j,
/// autocovariances with divisor n and no demeaning.
double bartlett_long_run_variance(std::span<const double> residuals, int bandwidth);

/// Phillips-Perron Z_t test. `bandwidth` defaults to newey_west_bandwidth(n).
UnitRootResult pp_test(std::span<const double> series, Deterministic spec,
                       std::optional<int> bandwidth = std::nullopt);

/// Asymptotic Dickey-Fuller p-value (MacKinnon 1994 response surfaces, single series).
/// Continuous and non-decreasing in the statistic; saturates outside the fitted range.
/// `n` is accepted for interface symmetry; the surfaces are asymptotic.
double mackinnon_pvalue(double statistic, Deterministic spec, int n = 0);

enum class IntegrationOrder { i0, i1, inconclusive };

std::string to_string(IntegrationOrder o);

struct IntegrationReport {
  std::string name;
  UnitRootResult adf_level;
  UnitRootResult pp_level;
  UnitRootResult adf_diff;
  UnitRootResult pp_diff;
  IntegrationOrder order = IntegrationOrder::inconclusive;
};

/// ADF and PP (constant case) on levels and first differences of every column.
/// I(0) when both level tests reject; I(1) when neither level test rejects and
/// both difference tests reject; otherwise inconclusive.
std::vector<IntegrationReport> integration_order(const PricePanel& panel, int max_lag, double level = 0.05,
                                                 LagCriterion criterion = LagCriterion::aic);

}  // namespace lopcoint
