#include <optional>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lopcoint/config.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/johansen.hpp"
#include "lopcoint/pipeline.hpp"
#include "lopcoint/simulate.hpp"
#include "lopcoint/unit_root.hpp"
#include "lopcoint/var_model.hpp"
#include "lopcoint/vecm.hpp"

namespace py = pybind11;
using namespace lopcoint;

namespace {

PricePanel make_panel(const Eigen::MatrixXd& data, std::vector<std::string> names, const std::string& start) {
  if (names.empty())
    for (Eigen::Index j = 0; j < data.cols(); ++j) names.push_back("y" + std::to_string(j + 1));
  std::vector<YearMonth> dates;
  const YearMonth first = YearMonth::parse(start);
  for (Eigen::Index t = 0; t < data.rows(); ++t) dates.push_back(first.plus_months(static_cast<int>(t)));
  return PricePanel(std::move(dates), std::move(names), data);
}

Deterministic deterministic_from(const std::string& s) {
  if (s == "none" || s == "n" || s == "nc") return Deterministic::none;
  if (s == "constant" || s == "c") return Deterministic::constant;
  if (s == "constant_trend" || s == "ct") return Deterministic::constant_trend;
  throw DataError("unknown deterministic spec '" + s + "' (none, constant, constant_trend)");
}

LagCriterion criterion_from(const std::string& s) {
  if (s == "aic") return LagCriterion::aic;
  if (s == "sc" || s == "bic") return LagCriterion::sc;
  if (s == "fixed") return LagCriterion::fixed;
  throw DataError("unknown lag criterion '" + s + "' (aic, sc, fixed)");
}

py::dict unit_root_dict(const UnitRootResult& r) {
  py::dict d;
  d["statistic"] = r.statistic;
  d["p_value"] = r.p_value;
  d["lags"] = r.lags_or_bandwidth;
  d["nobs"] = r.n_effective;
  return d;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

py::dict restriction_dict(const RestrictionResult& r) {
  py::dict d;
  d["label"] = r.label;
  d["lr"] = r.lr;
  d["df"] = r.df;
  d["p_value"] = r.p_value;
  d["loglik_restricted"] = r.loglik_restricted;
  d["loglik_unrestricted"] = r.loglik_unrestricted;
  d["beta"] = r.beta;
  d["alpha"] = r.alpha;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unit-root, VAR, Johansen and VECM routines for regional price panels";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DataError>(m, "DataError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<ModelError>(m, "ModelError", base.ptr());

  m.def(
      "adf_test",
      [](const Eigen::VectorXd& y, const std::string& deterministic, int max_lag, const std::string& criterion) {
        return unit_root_dict(adf_test({y.data(), static_cast<std::size_t>(y.size())},
                                       deterministic_from(deterministic), max_lag, criterion_from(criterion)));
      },
      py::arg("y"), py::arg("deterministic") = "constant", py::arg("max_lag") = 15, py::arg("criterion") = "aic");

  m.def(
      "pp_test",
      [](const Eigen::VectorXd& y, const std::string& deterministic, std::optional<int> bandwidth) {
        return unit_root_dict(
            pp_test({y.data(), static_cast<std::size_t>(y.size())}, deterministic_from(deterministic), bandwidth));
      },
      py::arg("y"), py::arg("deterministic") = "constant", py::arg("bandwidth") = py::none());

  m.def(
      "mackinnon_pvalue",
      [](double stat, const std::string& deterministic) { return mackinnon_pvalue(stat, deterministic_from(deterministic)); },
      py::arg("statistic"), py::arg("deterministic") = "constant");

  m.def(
      "fit_var",
      [](const Eigen::MatrixXd& data, int p, bool constant, bool trend) {
        const PricePanel panel = make_panel(data, {}, "2000-01");
        const VarModel v = fit_var(panel, p, {constant, trend}, no_dummies(panel.rows()));
        py::dict d;
        d["coef"] = v.coef;
        d["regressors"] = v.regressor_names;
        d["lag_matrices"] = v.lag_matrices;
        d["std_errors"] = v.std_errors;
        d["sigma"] = v.sigma;
        d["sigma_ml"] = v.sigma_ml;
        d["residuals"] = v.residuals;
        d["loglik"] = v.loglik;
        d["aic"] = v.ic.aic;
        d["sc"] = v.ic.sc;
        d["hq"] = v.ic.hq;
        d["root_moduli"] = stability_roots(v).moduli;
        return d;
      },
      py::arg("data"), py::arg("p"), py::arg("constant") = true, py::arg("trend") = false);

  m.def(
      "lag_order_selection",
      [](const Eigen::MatrixXd& data, int max_lag, bool constant, bool trend) {
        const PricePanel panel = make_panel(data, {}, "2000-01");
        const LagSelectionTable t = lag_order_selection(panel, max_lag, {constant, trend}, no_dummies(panel.rows()));
        py::list rows;
        for (const auto& r : t.rows) {
          py::dict d;
          d["lag"] = r.lag;
          d["loglik"] = r.loglik;
          d["lr"] = r.lr;
          d["fpe"] = r.fpe;
          d["aic"] = r.ic.aic;
          d["sc"] = r.ic.sc;
          d["hq"] = r.ic.hq;
          rows.append(d);
        }
        py::dict sel;
        sel["lr"] = t.selected_lr;
        sel["fpe"] = t.selected_fpe;
        sel["aic"] = t.selected_aic;
        sel["sc"] = t.selected_sc;
        sel["hq"] = t.selected_hq;
        py::dict d;
        d["rows"] = rows;
        d["selected"] = sel;
        return d;
      },
      py::arg("data"), py::arg("max_lag"), py::arg("constant") = true, py::arg("trend") = false);

  m.def(
      "johansen",
      [](const Eigen::MatrixXd& data, int k, const std::string& jcase, double level) {
        const PricePanel panel = make_panel(data, {}, "2000-01");
        const JohansenResult r =
            reduced_rank_regression(panel, k, johansen_case_from_string(jcase), no_dummies(panel.rows()));
        auto column = [](const RankTestTable& t, auto field) {
          std::vector<double> out;
          for (const auto& row : t) out.push_back(row.*field);
          return out;
        };
        const RankTestTable tr = trace_test(r, level), me = max_eigen_test(r, level);
        py::dict d;
        d["eigenvalues"] = to_vector(r.eigenvalues);
        d["eigenvectors"] = r.eigenvectors;
        d["trace"] = to_vector(r.trace);
        d["max_eigen"] = to_vector(r.max_eigen);
        d["trace_critical"] = column(tr, &RankTestRow::critical_value);
        d["trace_p"] = column(tr, &RankTestRow::p_value);
        d["max_eigen_critical"] = column(me, &RankTestRow::critical_value);
        d["max_eigen_p"] = column(me, &RankTestRow::p_value);
        d["rank_trace"] = select_rank(tr, me, RankPolicy::trace).rank;
        d["rank_max_eigen"] = select_rank(tr, me, RankPolicy::max_eigen).rank;
        d["nobs"] = r.T_eff;
        return d;
      },
      py::arg("data"), py::arg("k"), py::arg("case") = "unrestricted_constant", py::arg("level") = 0.05);

  m.def("johansen_pvalue",
        [](double stat, int dim, const std::string& jcase, const std::string& which) {
          return johansen_pvalue(stat, dim, johansen_case_from_string(jcase),
                                 which == "trace" ? JohansenStatistic::trace : JohansenStatistic::max_eigen);
        },
        py::arg("statistic"), py::arg("dim"), py::arg("case") = "unrestricted_constant", py::arg("which") = "trace");

  m.def(
      "fit_vecm",
      [](const Eigen::MatrixXd& data, int lags, int rank, const std::string& jcase) {
        const PricePanel panel = make_panel(data, {}, "2000-01");
        const VecmModel v = fit_vecm(panel, lags, rank, johansen_case_from_string(jcase), no_dummies(panel.rows()));
        py::dict d;
        d["beta"] = v.beta;
        d["beta_t"] = v.beta_t;
        d["alpha"] = v.alpha;
        d["alpha_t"] = v.alpha_t;
        d["gamma"] = v.gamma;
        d["ce_intercept"] = to_vector(v.ce_intercept);
        d["coef"] = v.coef;
        d["regressors"] = v.regressor_names;
        d["sigma_ml"] = v.sigma_ml;
        d["loglik"] = v.loglik;
        d["ect"] = v.ect;
        d["pi"] = v.pi();
        return d;
      },
      py::arg("data"), py::arg("lags"), py::arg("rank"), py::arg("case") = "unrestricted_constant");

  m.def(
      "granger",
      [](const Eigen::MatrixXd& data, int lags, int rank, const std::string& jcase, double level) {
        const PricePanel panel = make_panel(data, {}, "2000-01");
        const VecmModel v = fit_vecm(panel, lags, rank, johansen_case_from_string(jcase), no_dummies(panel.rows()));
        const GrangerResult g = granger_wald(v, level);
        py::list out;
        auto add = [&](const GrangerRow& r) {
          py::dict d;
          d["dependent"] = r.dependent;
          d["excluded"] = r.excluded < 0 ? py::object(py::none()) : py::object(py::int_(r.excluded));
          d["chi2"] = r.chi2;
          d["df"] = r.df;
          d["p_value"] = r.p;
          d["reject"] = r.reject;
          out.append(d);
        };
        for (const auto& r : g.pairs) add(r);
        for (const auto& r : g.all) add(r);
        return out;
      },
      py::arg("data"), py::arg("lags"), py::arg("rank"), py::arg("case") = "unrestricted_constant",
      py::arg("level") = 0.05);

  m.def(
      "restriction_test",
      [](const Eigen::MatrixXd& data, int lags, int rank, const std::string& pattern, const std::string& jcase) {
        const PricePanel panel = make_panel(data, {}, "2000-01");
        return restriction_dict(restriction_lr_test(panel, lags + 1, rank, johansen_case_from_string(jcase),
                                                    no_dummies(panel.rows()), RestrictionSpec::parse(pattern)));
      },
      py::arg("data"), py::arg("lags"), py::arg("rank"), py::arg("pattern"), py::arg("case") = "unrestricted_constant");

  m.def(
      "weak_exogeneity_test",
      [](const Eigen::MatrixXd& data, int lags, int rank, int variable, const std::string& jcase) {
        const PricePanel panel = make_panel(data, {}, "2000-01");
        return restriction_dict(weak_exogeneity_test(panel, lags + 1, rank, johansen_case_from_string(jcase),
                                                     no_dummies(panel.rows()), variable));
      },
      py::arg("data"), py::arg("lags"), py::arg("rank"), py::arg("variable"), py::arg("case") = "unrestricted_constant");

  m.def(
      "pairwise_lop",
      [](const Eigen::MatrixXd& data, int lags, const std::string& jcase, double level) {
        const PricePanel panel = make_panel(data, {}, "2000-01");
        const PairwiseLopTable t =
            pairwise_lop(panel, lags + 1, 1, johansen_case_from_string(jcase), no_dummies(panel.rows()), level);
        py::list out;
        for (const auto& row : t.rows) {
          py::dict d = restriction_dict(row.result);
          d["i"] = row.i;
          d["j"] = row.j;
          d["reject"] = row.reject;
          out.append(d);
        }
        return out;
      },
      py::arg("data"), py::arg("lags"), py::arg("case") = "unrestricted_constant", py::arg("level") = 0.01);

  m.def(
      "simulate",
      [](const std::string& process, int K, int T, std::uint64_t seed, std::optional<Eigen::MatrixXd> alpha,
         std::optional<Eigen::MatrixXd> beta, std::vector<Eigen::MatrixXd> lags, std::optional<Eigen::VectorXd> intercept,
         std::optional<Eigen::MatrixXd> cov, int burn_in) {
        DgpSpec s;
        s.kind = dgp_kind_from_string(process);
        s.K = K;
        s.T = T;
        s.seed = seed;
        s.burn_in = burn_in;
        if (alpha) s.alpha = *alpha;
        if (beta) s.beta = *beta;
        s.lags = std::move(lags);
        if (intercept) s.intercept = *intercept;
        if (cov) s.innovation_cov = *cov;
        return Eigen::MatrixXd(generate(s).values());
      },
      py::arg("process"), py::arg("K"), py::arg("T"), py::arg("seed") = 1, py::arg("alpha") = py::none(),
      py::arg("beta") = py::none(), py::arg("lags") = std::vector<Eigen::MatrixXd>{},
      py::arg("intercept") = py::none(), py::arg("cov") = py::none(), py::arg("burn_in") = 200);

  m.def(
      "run_pipeline_json",
      [](const std::string& config_path, std::optional<std::string> out_dir) {
        PipelineConfig cfg = PipelineConfig::from(KeyValueConfig::load(config_path));
        PipelineReport report;
        {
          py::gil_scoped_release release;
          report = run_pipeline(cfg);
        }
        if (out_dir) write_report(report, *out_dir, cfg.formats);
        return report.summary.dump();
      },
      py::arg("config"), py::arg("out_dir") = py::none());
}
