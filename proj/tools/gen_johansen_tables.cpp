// Simulates the asymptotic null distributions of the Johansen trace and
// maximum-eigenvalue statistics and writes them as a quantile table header.
//
//   gen_johansen_tables [reps] [steps] [seed] > include/lopcoint/detail/johansen_tables.hpp
//
// For dimension m = K - r the statistic is built from a discretized standard
// Brownian motion W (m-dim) and a regressor process F that depends on the
// deterministic case:
//   1 none:                 F = W
//   2 restricted constant:  F = (W, 1)
//   3 unrestricted const:   F = (W_1..W_{m-1}, u) corrected for a constant
//   4 restricted trend:     F = (W, u) corrected for a constant
//   5 unrestricted trend:   F = (W_1..W_{m-1}, u^2) corrected for (1, u)
// M = (int dW F') (int F F')^{-1} (int F dW'); trace = tr M, maxeig = lambda_max(M).

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <Eigen/Dense>

#include "lopcoint/distributions.hpp"
#include "lopcoint/rng.hpp"

namespace {

constexpr int kMaxDim = 12;

// Upper-tail probabilities at which quantiles are stored.
const std::vector<double> kTail = {0.9999, 0.999, 0.995, 0.99, 0.98, 0.95, 0.9, 0.85, 0.8, 0.75, 0.7,
                                   0.65,   0.6,   0.55,  0.5,  0.45, 0.4,  0.35, 0.3, 0.25, 0.2, 0.175,
                                   0.15,   0.125, 0.1,   0.09, 0.08, 0.07, 0.06, 0.05, 0.045, 0.04, 0.035,
                                   0.03,   0.025, 0.02,  0.015, 0.01, 0.0075, 0.005, 0.0025, 0.001, 0.0005, 0.0001};

Eigen::MatrixXd project_out(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& Y) {
  return Y - Z * (Z.transpose() * Z).ldlt().solve(Z.transpose() * Y);
}

void simulate(int jcase, int m, int reps, int n, std::uint64_t seed, std::vector<double>& trace,
              std::vector<double>& maxeig) {
  trace.resize(reps);
  maxeig.resize(reps);
  const bool extra = jcase == 2 || jcase == 4;
  const int p1 = extra ? m + 1 : m;
  Eigen::VectorXd u(n);
  for (int t = 0; t < n; ++t) u(t) = static_cast<double>(t) / n;
  Eigen::MatrixXd Z1 = Eigen::MatrixXd::Ones(n, 1);
  Eigen::MatrixXd Z2(n, 2);
  Z2.col(0).setOnes();
  Z2.col(1) = u;
  Eigen::MatrixXd E(n, m), F(n, p1);
  for (int rep = 0; rep < reps; ++rep) {
    auto rng = lopcoint::Rng::substream(seed + 1000003ULL * jcase + 7919ULL * m, rep);
    for (int j = 0; j < m; ++j)
      for (int t = 0; t < n; ++t) E(t, j) = rng.normal();
    // F row t holds the regressor dated t-1
    for (int j = 0; j < m; ++j) {
      double w = 0.0;
      for (int t = 0; t < n; ++t) {
        F(t, j) = w;
        w += E(t, j);
      }
    }
    switch (jcase) {
      case 1: break;
      case 2: F.col(m).setOnes(); break;
      case 3:
        F.col(m - 1) = u;
        F = project_out(Z1, F);
        break;
      case 4:
        F.col(m) = u;
        F = project_out(Z1, F);
        break;
      case 5:
        F.col(m - 1) = u.array().square();
        F = project_out(Z2, F);
        break;
    }
    Eigen::MatrixXd SFF = F.transpose() * F;
    Eigen::MatrixXd SFe = F.transpose() * E;
    Eigen::MatrixXd M = SFe.transpose() * SFF.ldlt().solve(SFe);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
    trace[rep] = es.eigenvalues().sum();
    maxeig[rep] = es.eigenvalues().maxCoeff();
  }
}

double quantile(std::vector<double>& v, double prob) {
  const double pos = prob * (v.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const double frac = pos - lo;
  return lo + 1 < v.size() ? v[lo] * (1 - frac) + v[lo + 1] * frac : v[lo];
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 100000;
  const int steps = argc > 2 ? std::atoi(argv[2]) : 1000;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 20240601ULL;

  std::printf("#pragma once\n\n");
  std::printf("// Generated by tools/gen_johansen_tables (reps=%d, steps=%d, seed=%llu). Do not edit.\n\n", reps,
              steps, static_cast<unsigned long long>(seed));
  std::printf("namespace lopcoint::detail {\n\n");
  std::printf("inline constexpr int kJohansenMaxDim = %d;\n", kMaxDim);
  std::printf("inline constexpr int kJohansenQuantiles = %zu;\n\n", kTail.size());
  std::printf("inline constexpr double kJohansenTail[kJohansenQuantiles] = {");
  for (std::size_t i = 0; i < kTail.size(); ++i) std::printf("%s%.6g", i ? ", " : "", kTail[i]);
  std::printf("};\n\n");
  std::printf("// [case-1][dim-1][0 = trace, 1 = max-eigenvalue][quantile]\n");
  std::printf("inline constexpr double kJohansenQuantileTable[5][kJohansenMaxDim][2][kJohansenQuantiles] = {\n");
  std::vector<double> trace, maxeig;
  for (int jcase = 1; jcase <= 5; ++jcase) {
    std::printf("  {\n");
    for (int m = 1; m <= kMaxDim; ++m) {
      simulate(jcase, m, reps, steps, seed, trace, maxeig);
      std::sort(trace.begin(), trace.end());
      std::sort(maxeig.begin(), maxeig.end());
      std::printf("    {  // case %d, dim %d\n", jcase, m);
      for (auto* v : {&trace, &maxeig}) {
        std::printf("      {");
        for (std::size_t i = 0; i < kTail.size(); ++i)
          std::printf("%s%.6f", i ? ", " : "", quantile(*v, 1.0 - kTail[i]));
        std::printf("},\n");
      }
      std::printf("    },\n");
      std::fflush(stdout);
      std::fprintf(stderr, "case %d dim %d: trace 95%% %.4f, maxeig 95%% %.4f\n", jcase, m,
                   quantile(trace, 0.95), quantile(maxeig, 0.95));
    }
    std::printf("  },\n");
  }
  std::printf("};\n\n}  // namespace lopcoint::detail\n");
  return 0;
}
