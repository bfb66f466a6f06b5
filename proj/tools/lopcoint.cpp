// Command-line front end: one subcommand per analysis stage plus `pipeline`.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lopcoint/config.hpp"
#include "lopcoint/detail/text.hpp"
#include "lopcoint/errors.hpp"
#include "lopcoint/pipeline.hpp"
#include "lopcoint/report.hpp"
#include "lopcoint/simulate.hpp"
#include "lopcoint/vecm.hpp"

namespace fs = std::filesystem;
using namespace lopcoint;

namespace {

constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitModel = 4;

struct Globals {
  std::string config;
  std::string out;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<double> level;
};

struct DataOptions {
  std::string data;
  std::string regions;
  std::optional<bool> log;
  std::vector<std::string> dummies;  // NAME=YYYY-MM[;YYYY-MM]
};

struct ModelOptions {
  std::optional<bool> constant;
  std::optional<bool> trend;
  std::string jcase;
};

void add_data_options(CLI::App* cmd, DataOptions& d) {
  cmd->add_option("--data", d.data, "CSV with a date column and one column per region");
  cmd->add_option("--regions", d.regions, "columns to use, as col[:label],...");
  cmd->add_flag("--log,!--no-log", d.log, "analyze log prices (default on)");
  cmd->add_option("--dummy", d.dummies, "impulse dummy NAME=YYYY-MM[;YYYY-MM]")->take_all();
}

void add_det_options(CLI::App* cmd, ModelOptions& m) {
  cmd->add_flag("--constant,!--no-constant", m.constant, "constant in the VAR (default on)");
  cmd->add_flag("--trend,!--no-trend", m.trend, "linear trend in the VAR (default off)");
}

void add_case_option(CLI::App* cmd, ModelOptions& m) {
  cmd->add_option("--case", m.jcase, "Johansen case 1-5 or name (default unrestricted_constant)");
}

KeyValueConfig load_config(const Globals& g, const DataOptions& d) {
  KeyValueConfig cfg = g.config.empty() ? KeyValueConfig{} : KeyValueConfig::load(g.config);
  if (!d.data.empty()) cfg.set("data.path", fs::absolute(d.data).string());
  if (!d.regions.empty()) cfg.set("data.regions", d.regions);
  if (d.log) cfg.set("data.log", *d.log ? "true" : "false");
  for (const auto& item : d.dummies) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DataError("--dummy expects NAME=YYYY-MM, got '" + item + "'");
    std::string months = item.substr(eq + 1);
    for (auto& c : months)
      if (c == ';') c = ',';
    cfg.set("dummies." + item.substr(0, eq), months);
  }
  if (g.seed) cfg.set("seed", std::to_string(*g.seed));
  return cfg;
}

struct Inputs {
  KeyValueConfig cfg;
  PricePanel panel;
  DummyMatrix dummies;
};

Inputs load_inputs(const Globals& g, const DataOptions& d) {
  KeyValueConfig cfg = load_config(g, d);
  PricePanel panel = panel_from(cfg);
  if (cfg.get_bool("data.log", true)) panel = log_transform(panel);
  DummyMatrix dm = build_dummies(dummy_spec_from(cfg), panel.dates());
  return {std::move(cfg), std::move(panel), std::move(dm)};
}

DeterministicTerms det_from(const KeyValueConfig& cfg, const ModelOptions& m) {
  DeterministicTerms det;
  det.constant = m.constant.value_or(cfg.get_bool("var.constant", true));
  det.trend = m.trend.value_or(cfg.get_bool("var.trend", false));
  return det;
}

JohansenCase case_from(const KeyValueConfig& cfg, const ModelOptions& m) {
  return johansen_case_from_string(m.jcase.empty() ? cfg.get_or("johansen.case", "unrestricted_constant") : m.jcase);
}

void emit(const Globals& g, const std::vector<Table>& tables) {
  const OutputFormat f = output_format_from_string(g.format);
  if (!g.out.empty()) {
    for (const auto& t : tables) std::cerr << "wrote " << write_table(t, f, g.out).string() << '\n';
    return;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i && f == OutputFormat::text) std::cout << '\n';
    emit_table(tables[i], f, std::cout);
  }
}

Eigen::MatrixXd parse_matrix(const std::string& text, Eigen::Index rows, const char* what) {
  // rows separated by ';', entries by ','
  std::vector<std::vector<double>> v;
  for (const auto& row : detail::split(text, ';')) {
    v.emplace_back();
    for (const auto& f : detail::split(row, ',')) {
      auto x = detail::parse_double(f);
      if (!x) throw DataError(std::string("bad number in ") + what + ": '" + f + "'");
      v.back().push_back(*x);
    }
  }
  if (static_cast<Eigen::Index>(v.size()) != rows) throw DataError(std::string(what) + " must have K rows");
  Eigen::MatrixXd m(rows, static_cast<Eigen::Index>(v[0].size()));
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (v[i].size() != v[0].size()) throw DataError(std::string(what) + " rows differ in length");
    for (std::size_t j = 0; j < v[i].size(); ++j) m(i, static_cast<Eigen::Index>(j)) = v[i][j];
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cointegration analysis of regional price series"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "key = value configuration file");
  app.add_option("--out", g.out, "output directory (default: print to stdout)");
  app.add_option("--format", g.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized steps");
  app.add_option("--level", g.level, "significance level for the subcommand's decisions");

  // unit-root
  DataOptions ur_data;
  int ur_max_lag = 15;
  std::string ur_criterion = "aic";
  auto* ur = app.add_subcommand("unit-root", "ADF and PP tests on levels and first differences");
  add_data_options(ur, ur_data);
  ur->add_option("--max-lag", ur_max_lag, "maximum ADF lag");
  ur->add_option("--criterion", ur_criterion, "aic, sc or fixed")->check(CLI::IsMember({"aic", "sc", "fixed"}));

  // var
  auto* var = app.add_subcommand("var", "levels VAR");
  var->require_subcommand(1);
  DataOptions var_data;
  ModelOptions var_model;
  int var_max_lag = 5, var_lags = 0, lm_lags = 4;
  auto* sel = var->add_subcommand("select-lag", "lag order selection table");
  add_data_options(sel, var_data);
  add_det_options(sel, var_model);
  sel->add_option("--max-lag", var_max_lag, "largest lag considered");
  auto* fit = var->add_subcommand("fit", "estimate a VAR(p)");
  add_data_options(fit, var_data);
  add_det_options(fit, var_model);
  fit->add_option("--lags", var_lags, "VAR order p")->required();
  auto* diag = var->add_subcommand("diagnose", "residual LM, normality and stability checks");
  add_data_options(diag, var_data);
  add_det_options(diag, var_model);
  diag->add_option("--lags", var_lags, "VAR order p")->required();
  diag->add_option("--lm-lags", lm_lags, "LM test lags 1..h");

  // coint
  auto* coint = app.add_subcommand("coint", "Johansen cointegration tests");
  coint->require_subcommand(1);
  DataOptions co_data;
  ModelOptions co_model;
  int co_lags = 2;
  std::string co_policy = "trace";
  auto* cotest = coint->add_subcommand("test", "trace and maximum-eigenvalue tables");
  add_data_options(cotest, co_data);
  add_case_option(cotest, co_model);
  cotest->add_option("--lags", co_lags, "VAR order k in levels")->required();
  cotest->add_option("--rank-policy", co_policy, "trace, maxeig or agree");

  // vecm
  auto* vecm = app.add_subcommand("vecm", "vector error-correction model");
  vecm->require_subcommand(1);
  DataOptions ve_data;
  ModelOptions ve_model;
  int ve_lags = 1, ve_rank = 1;
  std::string ve_pivot;
  bool lop_pairs = false, lop_joint = false;
  std::vector<std::string> lop_restrict;
  std::vector<std::string> weak_exog;
  auto add_vecm_common = [&](CLI::App* c) {
    add_data_options(c, ve_data);
    add_case_option(c, ve_model);
    c->add_option("--lags", ve_lags, "lagged differences (VAR order - 1)")->required();
    c->add_option("--rank", ve_rank, "cointegration rank");
  };
  auto* vfit = vecm->add_subcommand("fit", "estimate the VECM and print beta, alpha and coefficients");
  add_vecm_common(vfit);
  vfit->add_option("--pivot", ve_pivot, "normalize on this region");
  auto* vgr = vecm->add_subcommand("granger", "Wald exclusion tests on lagged differences");
  add_vecm_common(vgr);
  auto* vlop = vecm->add_subcommand("lop", "LR tests of price-parity restrictions on beta");
  add_vecm_common(vlop);
  vlop->add_flag("--pairs", lop_pairs, "every pairwise [.., 1, .., -1, ..] restriction (rank 1)");
  vlop->add_flag("--joint", lop_joint, "all vectors summing to zero (rank K - 1)");
  vlop->add_option("--restrict", lop_restrict, "custom pattern, e.g. '1,-1,0,0,*'; ';' separates vectors");
  vlop->add_option("--weak-exog", weak_exog, "test a zero adjustment row for this region");

  // simulate
  auto* sim = app.add_subcommand("simulate", "write a simulated panel as CSV");
  DgpSpec dgp;
  std::string process = "random_walk", alpha_txt, beta_txt, intercept_txt, names_txt, cov_txt, start_txt;
  std::string first_date = "2000-01";
  std::vector<std::string> lag_txt;
  sim->add_option("--process", process, "white_noise, random_walk, var or vecm");
  sim->add_option("--K", dgp.K, "number of series");
  sim->add_option("--T", dgp.T, "observations kept");
  sim->add_option("--burn-in", dgp.burn_in, "draws discarded (var, vecm)");
  sim->add_option("--alpha", alpha_txt, "VECM alpha, rows ';' separated");
  sim->add_option("--beta", beta_txt, "VECM beta, rows ';' separated");
  sim->add_option("--lag", lag_txt, "VAR lag matrix or VECM Gamma_i (repeat for more lags)");
  sim->add_option("--intercept", intercept_txt, "constant, ',' separated");
  sim->add_option("--cov", cov_txt, "innovation covariance, rows ';' separated");
  sim->add_option("--names", names_txt, "column names, ',' separated");
  sim->add_option("--start", start_txt, "presample level, ',' separated");
  sim->add_option("--first-date", first_date, "date of the first kept observation (YYYY-MM)");

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "full analysis from a configuration file");
  bool auto_respec = false;
  pipe->add_flag("--auto-respec", auto_respec, "add lags until the LM tests pass and dummy large residuals");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ur) {
      auto in = load_inputs(g, ur_data);
      const double level = g.level.value_or(in.cfg.get_double("unit_root.level", 0.05));
      const LagCriterion crit = ur_criterion == "sc" ? LagCriterion::sc
                                : ur_criterion == "fixed" ? LagCriterion::fixed
                                                          : LagCriterion::aic;
      emit(g, {unit_root_table(integration_order(in.panel, ur_max_lag, level, crit))});
    } else if (*sel) {
      auto in = load_inputs(g, var_data);
      emit(g, {lag_selection_table(lag_order_selection(in.panel, var_max_lag, det_from(in.cfg, var_model), in.dummies))});
    } else if (*fit) {
      auto in = load_inputs(g, var_data);
      emit(g, {var_coefficient_table(fit_var(in.panel, var_lags, det_from(in.cfg, var_model), in.dummies))});
    } else if (*diag) {
      auto in = load_inputs(g, var_data);
      const VarModel m = fit_var(in.panel, var_lags, det_from(in.cfg, var_model), in.dummies);
      const DiagnosticsReport d = diagnose(m, lm_lags);
      emit(g, {serial_correlation_table(d.serial), normality_table(d.normality), stability_table(d.stability)});
    } else if (*cotest) {
      auto in = load_inputs(g, co_data);
      const double level = g.level.value_or(in.cfg.get_double("johansen.level", 0.05));
      const JohansenResult jr = reduced_rank_regression(in.panel, co_lags, case_from(in.cfg, co_model), in.dummies);
      const auto tr = trace_test(jr, level);
      const auto me = max_eigen_test(jr, level);
      emit(g, {rank_test_table(tr, JohansenStatistic::trace), rank_test_table(me, JohansenStatistic::max_eigen)});
      const RankSelection rs = select_rank(tr, me, rank_policy_from_string(co_policy));
      std::cerr << "selected rank: " << rs.rank << '\n';
      if (rs.warning) std::cerr << "warning: " << *rs.warning << '\n';
    } else if (*vfit || *vgr) {
      auto in = load_inputs(g, ve_data);
      std::vector<int> pivots;
      if (!ve_pivot.empty()) pivots.push_back(static_cast<int>(in.panel.column_index(ve_pivot)));
      for (int j = static_cast<int>(pivots.size()); j < ve_rank; ++j) pivots.push_back(j);
      const VecmModel m = fit_vecm(in.panel, ve_lags, ve_rank, case_from(in.cfg, ve_model), in.dummies, pivots);
      if (*vfit) {
        emit(g, {cointegration_table(m), adjustment_table(m), vecm_coefficient_table(m), ect_table(m)});
        for (int j = 0; j < m.rank; ++j)
          std::cerr << long_run_equation(m.beta.col(j), m.beta_names, m.pivots[j],
                                         m.ce_intercept.size() ? std::optional<double>(m.ce_intercept(j))
                                                               : std::nullopt)
                    << '\n';
      } else {
        emit(g, {granger_table(granger_wald(m, g.level.value_or(0.05)))});
      }
    } else if (*vlop) {
      auto in = load_inputs(g, ve_data);
      const double level = g.level.value_or(in.cfg.get_double("lop.level", 0.01));
      SwitchingOptions sw;
      sw.seed = static_cast<std::uint64_t>(in.cfg.get_int("seed", 20240601));
      const JohansenResult jr = reduced_rank_regression(in.panel, ve_lags + 1, case_from(in.cfg, ve_model), in.dummies);
      std::vector<Table> out;
      if (lop_pairs) out.push_back(lop_table(pairwise_lop(jr, ve_rank, level, sw)));
      std::vector<RestrictionResult> extra;
      if (lop_joint) extra.push_back(joint_lop_test(jr, ve_rank, sw));
      for (const auto& r : lop_restrict) extra.push_back(restriction_lr_test(jr, ve_rank, RestrictionSpec::parse(r), sw));
      for (const auto& w : weak_exog)
        extra.push_back(weak_exogeneity_test(jr, ve_rank, static_cast<int>(in.panel.column_index(w))));
      if (!extra.empty()) out.push_back(restriction_table(extra));
      if (out.empty()) throw DataError("vecm lop: choose --pairs, --joint, --restrict or --weak-exog");
      emit(g, out);
    } else if (*sim) {
      dgp.kind = dgp_kind_from_string(process);
      if (g.seed) dgp.seed = *g.seed;
      if (!alpha_txt.empty()) dgp.alpha = parse_matrix(alpha_txt, dgp.K, "--alpha");
      if (!beta_txt.empty()) dgp.beta = parse_matrix(beta_txt, dgp.K, "--beta");
      for (const auto& l : lag_txt) dgp.lags.push_back(parse_matrix(l, dgp.K, "--lag"));
      if (!intercept_txt.empty()) dgp.intercept = parse_matrix(intercept_txt, 1, "--intercept").row(0).transpose();
      if (!cov_txt.empty()) dgp.innovation_cov = parse_matrix(cov_txt, dgp.K, "--cov");
      if (!names_txt.empty()) dgp.names = detail::split(names_txt, ',');
      if (!start_txt.empty()) dgp.start = parse_matrix(start_txt, 1, "--start").row(0).transpose();
      dgp.first_date = YearMonth::parse(first_date);
      const PricePanel p = generate(dgp);
      if (g.out.empty()) {
        write_panel_csv(p, std::cout);
      } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) throw Error("cannot write " + g.out);
        write_panel_csv(p, f);
      }
    } else if (*pipe) {
      if (g.config.empty()) throw DataError("pipeline needs --config");
      KeyValueConfig cfg = KeyValueConfig::load(g.config);
      if (g.seed) cfg.set("seed", std::to_string(*g.seed));
      if (g.level) cfg.set("lop.level", detail::format_number(*g.level, 17));
      if (auto_respec) cfg.set("var.auto_respec", "true");
      PipelineConfig pc = PipelineConfig::from(cfg);
      if (!g.out.empty()) pc.out_dir = g.out;
      if (app.get_option("--format")->count()) pc.formats = {output_format_from_string(g.format)};
      const PipelineReport rep = run_pipeline(pc);
      const auto files = write_report(rep, pc.out_dir, pc.formats);
      std::cerr << "wrote " << files.size() << " files to " << pc.out_dir.string() << '\n';
      std::cout << rep.summary.dump(2) << '\n';
    }
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kExitModel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
