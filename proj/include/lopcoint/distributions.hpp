#pragma once

namespace lopcoint::dist {

/// Upper-tail probabilities; arguments outside the support saturate.
double chi2_sf(double x, double df);
double f_sf(double x, double df1, double df2);
double normal_cdf(double z);
double normal_quantile(double p);
double gamma_sf(double x, double shape, double scale);

}  // namespace lopcoint::dist
