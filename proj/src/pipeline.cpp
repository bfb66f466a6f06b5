#include "lopcoint/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "lopcoint/detail/text.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/vecm.hpp"

namespace lopcoint {

namespace {

LagCriterion criterion_from(const std::string& s) {
  if (s == "aic") return LagCriterion::aic;
  if (s == "sc" || s == "bic") return LagCriterion::sc;
  if (s == "fixed") return LagCriterion::fixed;
  throw DataError("unknown lag criterion '" + s + "' (aic, sc, fixed)");
}

template <class F>
auto stage(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const DataError& e) {
    throw DataError(name + ": " + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(name + ": " + e.what());
  } catch (const ModelError& e) {
    throw ModelError(name + ": " + e.what());
  } catch (const Error& e) {
    throw Error(name + ": " + e.what());
  }
}

nlohmann::json stat(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_statistic(v));
}

nlohmann::json pval(double p) {
  if (!std::isfinite(p)) return nullptr;
  return std::stod(format_p_value(p));
}

nlohmann::json rank_rows(const RankTestTable& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"r", r.r},
                   {"eigenvalue", stat(r.eigenvalue)},
                   {"statistic", stat(r.statistic)},
                   {"critical_value", stat(r.critical_value)},
                   {"p", pval(r.p_value)},
                   {"reject", r.reject}});
  return out;
}

nlohmann::json restriction_json(const RestrictionResult& r) {
  return {{"label", r.label}, {"lr", stat(r.lr)}, {"df", r.df}, {"p", pval(r.p_value)}};
}

void append(std::vector<Table>& tables, Table t) { tables.push_back(std::move(t)); }

}  // namespace

PipelineConfig PipelineConfig::from(const KeyValueConfig& cfg) {
  PipelineConfig c;
  c.source = cfg;
  c.log_transform = cfg.get_bool("data.log", true);
  c.ur_max_lag = cfg.get_int("unit_root.max_lag", 15);
  c.ur_criterion = criterion_from(cfg.get_or("unit_root.criterion", "aic"));
  c.ur_level = cfg.get_double("unit_root.level", 0.05);
  c.var_max_lag = cfg.get_int("var.max_lag", 5);
  c.var_det.constant = cfg.get_bool("var.constant", true);
  c.var_det.trend = cfg.get_bool("var.trend", false);
  c.var_initial_order = cfg.get_int("var.initial_order", 0);
  c.var_order = cfg.get_int("var.order", 0);
  c.lm_lags = cfg.get_int("var.lm_lags", 4);
  c.auto_respec = cfg.get_bool("var.auto_respec", false);
  c.outlier_threshold = cfg.get_double("var.outlier_threshold", 3.5);
  c.dummies = dummy_spec_from(cfg);
  c.jcase = johansen_case_from_string(cfg.get_or("johansen.case", "unrestricted_constant"));
  c.rank_policy = rank_policy_from_string(cfg.get_or("johansen.rank_policy", "trace"));
  c.johansen_level = cfg.get_double("johansen.level", 0.05);
  c.vecm_lags = cfg.get_int("vecm.lags", 0);
  c.pivot = cfg.get_or("vecm.pivot", "");
  c.lop_level = cfg.get_double("lop.level", 0.01);
  if (auto dir = cfg.get("output.dir")) {
    std::filesystem::path p(*dir);
    c.out_dir = p.is_absolute() || cfg.base_dir().empty() ? p : cfg.base_dir() / p;
  }
  if (auto f = cfg.get("output.formats")) {
    c.formats.clear();
    for (const auto& s : detail::split(*f, ',')) c.formats.push_back(output_format_from_string(s));
  }
  c.seed = static_cast<std::uint64_t>(cfg.get_int("seed", 20240601));

  if (c.ur_max_lag < 0 || c.var_max_lag < 1) throw DataError("lag limits must be positive");
  if (c.var_order < 0 || c.var_initial_order < 0) throw DataError("VAR orders must be non-negative");
  if (c.var_order > 0 && c.vecm_lags > 0 && c.vecm_lags != c.var_order - 1)
    throw DataError("vecm.lags must equal var.order - 1 (got " + std::to_string(c.vecm_lags) + " and " +
                    std::to_string(c.var_order) + ")");
  for (double lv : {c.ur_level, c.johansen_level, c.lop_level})
    if (!(lv > 0.0 && lv < 1.0)) throw DataError("significance levels must lie in (0, 1)");
  return c;
}

PipelineReport run_pipeline(const PipelineConfig& config) {
  PipelineReport rep;
  auto& tables = rep.tables;
  auto& S = rep.summary;

  const PricePanel panel = stage("ingest", [&] {
    PricePanel p = panel_from(config.source);
    if (p.rows() < 24) throw DataError("need at least 24 monthly observations, got " + std::to_string(p.rows()));
    return config.log_transform ? log_transform(p) : p;
  });
  const int K = static_cast<int>(panel.cols());
  S["data"] = {{"regions", panel.names()},
               {"start", panel.dates().front().to_string()},
               {"end", panel.dates().back().to_string()},
               {"nobs", panel.rows()},
               {"scale", to_string(panel.scale())}};
  append(tables, panel_table(panel));

  DummySpec dummy_spec = config.dummies;
  DummyMatrix dummies = stage("dummies", [&] { return build_dummies(dummy_spec, panel.dates()); });

  stage("unit_root", [&] {
    const auto reports = integration_order(panel, config.ur_max_lag, config.ur_level, config.ur_criterion);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports)
      arr.push_back({{"series", r.name},
                     {"order", to_string(r.order)},
                     {"adf_level", stat(r.adf_level.statistic)},
                     {"adf_level_p", pval(r.adf_level.p_value)},
                     {"pp_level", stat(r.pp_level.statistic)},
                     {"pp_level_p", pval(r.pp_level.p_value)},
                     {"adf_diff", stat(r.adf_diff.statistic)},
                     {"adf_diff_p", pval(r.adf_diff.p_value)},
                     {"pp_diff", stat(r.pp_diff.statistic)},
                     {"pp_diff_p", pval(r.pp_diff.p_value)}});
    S["unit_root"] = arr;
    append(tables, unit_root_table(reports));
    return 0;
  });

  const LagSelectionTable sel = stage("lag_selection", [&] {
    return lag_order_selection(panel, config.var_max_lag, config.var_det, dummies);
  });
  S["lag_selection"] = {{"T", sel.T_eff},       {"LR", sel.selected_lr}, {"FPE", sel.selected_fpe},
                        {"AIC", sel.selected_aic}, {"SC", sel.selected_sc}, {"HQ", sel.selected_hq}};
  append(tables, lag_selection_table(sel));

  if (config.var_initial_order > 0) {
    stage("var_initial", [&] {
      const VarModel m = fit_var(panel, config.var_initial_order, config.var_det, no_dummies(panel.rows()));
      const DiagnosticsReport d = diagnose(m, config.lm_lags);
      append(tables, var_coefficient_table(m, "var_initial_coefficients"));
      append(tables, serial_correlation_table(d.serial, "var_initial_lm_test"));
      append(tables, normality_table(d.normality, "var_initial_normality"));
      nlohmann::json lm = nlohmann::json::array();
      for (const auto& r : d.serial) lm.push_back(pval(r.lre_p));
      S["var_initial"] = {{"order", m.order}, {"lm_p", lm}, {"jb_joint_p", pval(d.normality.joint.p)}};
      return 0;
    });
  }

  int order = config.var_order > 0 ? config.var_order : std::max(sel.selected_aic, 2);
  nlohmann::json respec = nlohmann::json::object();
  if (config.auto_respec) {
    stage("auto_respec", [&] {
      // the search starts from the initial model when there is one
      if (config.var_initial_order > 0) order = std::max(config.var_initial_order, 2);
      auto lm_rejects = [&](const VarModel& m) {
        for (const auto& r : lm_serial_test(m, config.lm_lags))
          if (r.lre_p < 0.05) return true;
        return false;
      };
      VarModel m = fit_var(panel, order, config.var_det, dummies);
      while (lm_rejects(m) && order < config.var_max_lag) m = fit_var(panel, ++order, config.var_det, dummies);
      std::set<YearMonth> existing;
      for (const auto& e : dummy_spec.entries) existing.insert(e.months.begin(), e.months.end());
      nlohmann::json added = nlohmann::json::array();
      for (Eigen::Index t = 0; t < m.residuals.rows(); ++t) {
        bool outlier = false;
        for (int k = 0; k < K; ++k)
          outlier = outlier || std::abs(m.residuals(t, k)) > config.outlier_threshold * std::sqrt(m.sigma(k, k));
        const YearMonth ym = m.sample_dates[t];
        if (outlier && !existing.count(ym)) {
          char name[32];
          std::snprintf(name, sizeof name, "auto_%04d_%02d", ym.year, ym.month);
          dummy_spec.entries.push_back({name, {ym}});
          existing.insert(ym);
          added.push_back(ym.to_string());
        }
      }
      dummies = build_dummies(dummy_spec, panel.dates());
      respec = {{"order", order}, {"lm_rejects_at_max_order", lm_rejects(m)}, {"added_dummies", added}};
      return 0;
    });
    S["auto_respec"] = respec;
  }
  if (order < 2) throw ModelError("var: the VAR order must be at least 2 for the error-correction stages");
  const int vecm_lags = config.vecm_lags > 0 && !config.auto_respec ? config.vecm_lags : order - 1;
  if (vecm_lags != order - 1) throw DataError("config: vecm.lags must equal the VAR order minus one");

  stage("var", [&] {
    const VarModel m = fit_var(panel, order, config.var_det, dummies);
    const DiagnosticsReport d = diagnose(m, config.lm_lags);
    append(tables, var_coefficient_table(m));
    append(tables, serial_correlation_table(d.serial));
    append(tables, normality_table(d.normality));
    append(tables, stability_table(d.stability));
    nlohmann::json lm = nlohmann::json::array();
    for (const auto& r : d.serial) lm.push_back(pval(r.lre_p));
    S["var"] = {{"order", order},
                {"dummies", dummies.names},
                {"T", m.T_eff},
                {"loglik", stat(m.loglik)},
                {"aic", stat(m.ic.aic)},
                {"lm_p", lm},
                {"jb_joint_p", pval(d.normality.joint.p)},
                {"stable", d.stability.stable},
                {"max_root_modulus", stat(d.stability.moduli.empty() ? 0.0 : d.stability.moduli.front())}};
    return 0;
  });

  const JohansenResult jr = stage("johansen", [&] { return reduced_rank_regression(panel, order, config.jcase, dummies); });
  const RankSelection rank = stage("rank", [&] {
    const auto tr = trace_test(jr, config.johansen_level);
    const auto me = max_eigen_test(jr, config.johansen_level);
    append(tables, rank_test_table(tr, JohansenStatistic::trace));
    append(tables, rank_test_table(me, JohansenStatistic::max_eigen));
    RankSelection sel_r = select_rank(tr, me, config.rank_policy);
    S["johansen"] = {{"case", to_string(config.jcase)},
                     {"T", jr.T_eff},
                     {"trace", rank_rows(tr)},
                     {"max_eigen", rank_rows(me)}};
    return sel_r;
  });
  S["rank"] = rank.rank;
  S["rank_warning"] = rank.warning ? nlohmann::json(*rank.warning) : nlohmann::json(nullptr);

  if (rank.rank == 0) {
    S["vecm"] = nullptr;
    S["note"] = "no cointegration at the chosen level; error-correction stages skipped";
    return rep;
  }

  SwitchingOptions sw;
  sw.seed = config.seed;
  const VecmModel vm = stage("vecm", [&] {
    std::vector<int> pivots;
    if (!config.pivot.empty()) pivots.push_back(static_cast<int>(panel.column_index(config.pivot)));
    for (int j = static_cast<int>(pivots.size()); j < rank.rank; ++j) pivots.push_back(j);
    return fit_vecm(panel, vecm_lags, rank.rank, config.jcase, dummies, pivots);
  });
  append(tables, cointegration_table(vm));
  append(tables, adjustment_table(vm));
  append(tables, vecm_coefficient_table(vm));
  append(tables, ect_table(vm));
  {
    nlohmann::json vectors = nlohmann::json::array();
    for (int j = 0; j < vm.rank; ++j) {
      nlohmann::json beta = nlohmann::json::array(), alpha = nlohmann::json::array(),
                     alpha_t = nlohmann::json::array();
      for (Eigen::Index i = 0; i < vm.beta.rows(); ++i) beta.push_back(stat(vm.beta(i, j)));
      for (int k = 0; k < K; ++k) {
        alpha.push_back(stat(vm.alpha(k, j)));
        alpha_t.push_back(stat(vm.alpha_t(k, j)));
      }
      const std::optional<double> c =
          vm.ce_intercept.size() ? std::optional<double>(vm.ce_intercept(j)) : std::nullopt;
      vectors.push_back({{"beta", beta},
                         {"constant", c ? stat(*c) : nlohmann::json(nullptr)},
                         {"alpha", alpha},
                         {"alpha_t", alpha_t},
                         {"equation", long_run_equation(vm.beta.col(j), vm.beta_names, vm.pivots[j], c)}});
    }
    S["vecm"] = {{"lags", vm.lags}, {"rank", vm.rank}, {"variables", vm.beta_names}, {"vectors", vectors}};
  }

  stage("ect", [&] {
    const UnitRootResult u = adf_test(std::span<const double>(vm.ect.col(0).data(), vm.ect.rows()),
                                      Deterministic::constant, config.ur_max_lag, config.ur_criterion);
    S["ect_adf"] = {{"statistic", stat(u.statistic)}, {"p", pval(u.p_value)}, {"lags", u.lags_or_bandwidth}};
    return 0;
  });

  stage("granger", [&] {
    const GrangerResult g = granger_wald(vm, 0.05);
    append(tables, granger_table(g));
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : g.pairs)
      arr.push_back({{"dependent", panel.names()[r.dependent]},
                     {"excluded", panel.names()[r.excluded]},
                     {"chi2", stat(r.chi2)},
                     {"df", r.df},
                     {"p", pval(r.p)},
                     {"reject", r.reject}});
    for (const auto& r : g.all)
      arr.push_back({{"dependent", panel.names()[r.dependent]},
                     {"excluded", "All"},
                     {"chi2", stat(r.chi2)},
                     {"df", r.df},
                     {"p", pval(r.p)},
                     {"reject", r.reject}});
    S["granger"] = arr;
    return 0;
  });

  stage("weak_exogeneity", [&] {
    std::vector<RestrictionResult> rows;
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k < K; ++k) {
      rows.push_back(weak_exogeneity_test(jr, rank.rank, k));
      arr.push_back(restriction_json(rows.back()));
    }
    append(tables, restriction_table(rows, "weak_exogeneity"));
    S["weak_exogeneity"] = arr;
    return 0;
  });

  stage("lop", [&] {
    nlohmann::json lop = {{"level", config.lop_level}};
    if (rank.rank == 1) {
      const PairwiseLopTable t = pairwise_lop(jr, rank.rank, config.lop_level, sw);
      append(tables, lop_table(t));
      nlohmann::json pairs = nlohmann::json::array(), kept = nlohmann::json::array();
      for (const auto& r : t.rows) {
        auto j = restriction_json(r.result);
        j["reject"] = r.reject;
        pairs.push_back(j);
        if (!r.reject) kept.push_back(r.result.label);
      }
      lop["pairs"] = pairs;
      lop["not_rejected"] = kept;
    } else {
      lop["pairs"] = nullptr;
      lop["note"] = "pairwise tests need rank 1";
    }
    try {
      lop["joint"] = restriction_json(joint_lop_test(jr, rank.rank, sw));
    } catch (const ModelError& e) {
      lop["joint"] = {{"untestable", e.what()}};
    }
    S["lop"] = lop;
    return 0;
  });

  return rep;
}

std::vector<std::filesystem::path> write_report(const PipelineReport& report, const std::filesystem::path& dir,
                                                const std::vector<OutputFormat>& formats) {
  std::vector<std::filesystem::path> written;
  for (const auto& t : report.tables)
    for (auto f : formats) written.push_back(write_table(t, f, dir));
  const auto path = dir / "summary.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << report.summary.dump(2) << '\n';
  written.push_back(path);
  return written;
}

}  // namespace lopcoint
