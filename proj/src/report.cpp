#include "lopcoint/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "lopcoint/errors.hpp"

namespace lopcoint {

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "text" || s == "txt") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw DataError("unknown output format '" + s + "' (text, csv, json)");
}

std::string extension(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "txt";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "txt";
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw Error("table " + name + ": row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_statistic(double v) {
  if (!std::isfinite(v)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::string(buf) == "-0" ? "0" : buf;
}

std::string format_p_value(double p) {
  if (!std::isfinite(p)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", p);
  return buf;
}

namespace {

std::string cell_text(const Cell& cell, ColumnKind kind) {
  if (std::holds_alternative<std::monostate>(cell)) return "NA";
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "yes" : "no";
  const double v = std::get<double>(cell);
  return kind == ColumnKind::p_value ? format_p_value(v) : format_statistic(v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::json cell_json(const Cell& cell, ColumnKind kind) {
  if (std::holds_alternative<std::monostate>(cell)) return nullptr;
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<long long>(&cell)) return *i;
  if (const auto* b = std::get_if<bool>(&cell)) return *b;
  const double v = std::get<double>(cell);
  if (!std::isfinite(v)) return nullptr;
  return std::stod(kind == ColumnKind::p_value ? format_p_value(v) : format_statistic(v));
}

nlohmann::json table_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      obj[table.columns[c].name] = cell_json(row[c], table.columns[c].kind);
    rows.push_back(std::move(obj));
  }
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : table.columns) cols.push_back(c.name);
  return {{"name", table.name}, {"title", table.title}, {"columns", cols}, {"rows", rows}};
}

void emit_table(const Table& table, OutputFormat format, std::ostream& out) {
  const std::size_t nc = table.columns.size();
  switch (format) {
    case OutputFormat::csv: {
      for (std::size_t c = 0; c < nc; ++c) out << (c ? "," : "") << csv_escape(table.columns[c].name);
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < nc; ++c) out << (c ? "," : "") << csv_escape(cell_text(row[c], table.columns[c].kind));
        out << '\n';
      }
      break;
    }
    case OutputFormat::json: out << table_json(table).dump(2) << '\n'; break;
    case OutputFormat::text: {
      std::vector<std::size_t> width(nc);
      std::vector<std::vector<std::string>> cells;
      for (std::size_t c = 0; c < nc; ++c) width[c] = table.columns[c].name.size();
      for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < nc; ++c) {
          line.push_back(cell_text(row[c], table.columns[c].kind));
          width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      if (!table.title.empty()) out << table.title << '\n';
      auto put = [&](std::size_t c, const std::string& s) {
        const bool left = table.columns[c].kind == ColumnKind::text;
        const std::string pad(width[c] - s.size(), ' ');
        out << (c ? "  " : "") << (left ? s + pad : pad + s);
      };
      for (std::size_t c = 0; c < nc; ++c) put(c, table.columns[c].name);
      out << '\n';
      for (const auto& line : cells) {
        for (std::size_t c = 0; c < nc; ++c) put(c, line[c]);
        out << '\n';
      }
      break;
    }
  }
}

std::filesystem::path write_table(const Table& table, OutputFormat format, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / (table.name + "." + extension(format));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  emit_table(table, format, out);
  if (!out) throw Error("write failed for " + path.string());
  return path;
}

namespace {

Cell num(double v) { return v; }
Cell integer(long long v) { return v; }
Cell text(std::string s) { return s; }

}  // namespace

Table unit_root_table(const std::vector<IntegrationReport>& reports) {
  Table t{"unit_root", "Unit root tests (levels and first differences)",
          {{"series", ColumnKind::text},
           {"test", ColumnKind::text},
           {"transform", ColumnKind::text},
           {"deterministic", ColumnKind::text},
           {"statistic", ColumnKind::statistic},
           {"p", ColumnKind::p_value},
           {"lags_or_bandwidth", ColumnKind::integer},
           {"nobs", ColumnKind::integer},
           {"order", ColumnKind::text}},
          {}};
  for (const auto& r : reports) {
    auto add = [&](const UnitRootResult& u, const char* transform) {
      t.add_row({text(r.name), text(to_string(u.method)), text(transform), text(to_string(u.spec)), num(u.statistic),
                 num(u.p_value), integer(u.lags_or_bandwidth), integer(u.n_effective), text(to_string(r.order))});
    };
    add(r.adf_level, "level");
    add(r.pp_level, "level");
    add(r.adf_diff, "difference");
    add(r.pp_diff, "difference");
  }
  return t;
}

Table lag_selection_table(const LagSelectionTable& sel) {
  Table t{"lag_selection", "VAR lag order selection (T = " + std::to_string(sel.T_eff) + ")",
          {{"lag", ColumnKind::integer},
           {"logL", ColumnKind::statistic},
           {"LR", ColumnKind::statistic},
           {"FPE", ColumnKind::statistic},
           {"AIC", ColumnKind::statistic},
           {"SC", ColumnKind::statistic},
           {"HQ", ColumnKind::statistic},
           {"selected_by", ColumnKind::text}},
          {}};
  for (const auto& r : sel.rows) {
    std::string by;
    auto mark = [&](int chosen, const char* label) {
      if (chosen == r.lag) by += by.empty() ? label : std::string(" ") + label;
    };
    mark(sel.selected_lr, "LR");
    mark(sel.selected_fpe, "FPE");
    mark(sel.selected_aic, "AIC");
    mark(sel.selected_sc, "SC");
    mark(sel.selected_hq, "HQ");
    t.add_row({integer(r.lag), num(r.loglik), r.lag == 0 ? Cell{} : num(r.lr), num(r.fpe), num(r.ic.aic),
               num(r.ic.sc), num(r.ic.hq), text(by)});
  }
  return t;
}

Table var_coefficient_table(const VarModel& model, const std::string& name) {
  Table t{name, "VAR(" + std::to_string(model.order) + ") estimates",
          {{"equation", ColumnKind::text},
           {"regressor", ColumnKind::text},
           {"coefficient", ColumnKind::statistic},
           {"std_error", ColumnKind::statistic},
           {"t", ColumnKind::statistic}},
          {}};
  for (int k = 0; k < model.K; ++k)
    for (Eigen::Index i = 0; i < model.coef.rows(); ++i)
      t.add_row({text(model.names[k]), text(model.regressor_names[i]), num(model.coef(i, k)),
                 num(model.std_errors(i, k)), num(model.t_stats(i, k))});
  return t;
}

Table serial_correlation_table(const std::vector<SerialCorrelationRow>& rows, const std::string& name) {
  Table t{name, "VAR residual serial correlation LM tests",
          {{"lag", ColumnKind::integer},
           {"LRE", ColumnKind::statistic},
           {"df", ColumnKind::integer},
           {"p", ColumnKind::p_value},
           {"Rao_F", ColumnKind::statistic},
           {"df1", ColumnKind::statistic},
           {"df2", ColumnKind::statistic},
           {"F_p", ColumnKind::p_value}},
          {}};
  for (const auto& r : rows)
    t.add_row({integer(r.h), num(r.lre), integer(r.lre_df), num(r.lre_p), num(r.rao_f), num(r.f_df1), num(r.f_df2),
               num(r.f_p)});
  return t;
}

Table normality_table(const NormalityReport& report, const std::string& name) {
  Table t{name, "VAR residual normality (Cholesky orthogonalization)",
          {{"component", ColumnKind::text},
           {"skewness", ColumnKind::statistic},
           {"kurtosis", ColumnKind::statistic},
           {"jarque_bera", ColumnKind::statistic},
           {"df", ColumnKind::integer},
           {"p", ColumnKind::p_value}},
          {}};
  for (const auto& r : report.components)
    t.add_row({text(r.label), num(r.skewness), num(r.kurtosis), num(r.jb), integer(r.df), num(r.p)});
  const auto& j = report.joint;
  t.add_row({text(j.label), Cell{}, Cell{}, num(j.jb), integer(j.df), num(j.p)});
  return t;
}

Table stability_table(const StabilityReport& report, const std::string& name) {
  Table t{name, std::string("Roots of the characteristic polynomial (") + (report.stable ? "stable" : "not stable") + ")",
          {{"real", ColumnKind::statistic}, {"imaginary", ColumnKind::statistic}, {"modulus", ColumnKind::statistic}},
          {}};
  for (std::size_t i = 0; i < report.roots.size(); ++i)
    t.add_row({num(report.roots[i].real()), num(report.roots[i].imag()), num(report.moduli[i])});
  return t;
}

Table rank_test_table(const RankTestTable& rows, JohansenStatistic which) {
  const bool tr = which == JohansenStatistic::trace;
  Table t{tr ? "johansen_trace" : "johansen_max_eigen",
          tr ? "Johansen trace test" : "Johansen maximum eigenvalue test",
          {{"hypothesis", ColumnKind::text},
           {"eigenvalue", ColumnKind::statistic},
           {"statistic", ColumnKind::statistic},
           {"critical_value", ColumnKind::statistic},
           {"p", ColumnKind::p_value}},
          {}};
  for (const auto& r : rows) {
    const std::string h = r.r == 0 ? "None" : "At most " + std::to_string(r.r);
    t.add_row({text(h + (r.reject ? " *" : "")), num(r.eigenvalue), num(r.statistic), num(r.critical_value),
               num(r.p_value)});
  }
  return t;
}

Table cointegration_table(const VecmModel& model) {
  Table t{"vecm_beta", "Normalized cointegrating vectors",
          {{"vector", ColumnKind::integer},
           {"variable", ColumnKind::text},
           {"beta", ColumnKind::statistic},
           {"std_error", ColumnKind::statistic},
           {"t", ColumnKind::statistic}},
          {}};
  for (int j = 0; j < model.rank; ++j) {
    for (Eigen::Index i = 0; i < model.beta.rows(); ++i) {
      const double se = model.beta_se(i, j);
      t.add_row({integer(j + 1), text(model.beta_names[i]), num(model.beta(i, j)), std::isnan(se) ? Cell{} : num(se),
                 std::isnan(se) ? Cell{} : num(model.beta_t(i, j))});
    }
    if (model.ce_intercept.size())
      t.add_row({integer(j + 1), text("C"), num(model.ce_intercept(j)), Cell{}, Cell{}});
  }
  return t;
}

Table adjustment_table(const VecmModel& model) {
  Table t{"vecm_alpha", "Adjustment coefficients",
          {{"equation", ColumnKind::text},
           {"vector", ColumnKind::integer},
           {"alpha", ColumnKind::statistic},
           {"std_error", ColumnKind::statistic},
           {"t", ColumnKind::statistic}},
          {}};
  for (int k = 0; k < model.K; ++k)
    for (int j = 0; j < model.rank; ++j)
      t.add_row({text("D(" + model.names[k] + ")"), integer(j + 1), num(model.alpha(k, j)), num(model.alpha_se(k, j)),
                 num(model.alpha_t(k, j))});
  return t;
}

Table vecm_coefficient_table(const VecmModel& model) {
  Table t{"vecm_coefficients", "VECM error-correction estimates",
          {{"equation", ColumnKind::text},
           {"regressor", ColumnKind::text},
           {"coefficient", ColumnKind::statistic},
           {"std_error", ColumnKind::statistic},
           {"t", ColumnKind::statistic}},
          {}};
  for (int k = 0; k < model.K; ++k)
    for (Eigen::Index i = 0; i < model.coef.rows(); ++i)
      t.add_row({text("D(" + model.names[k] + ")"), text(model.regressor_names[i]), num(model.coef(i, k)),
                 num(model.std_errors(i, k)), num(model.t_stats(i, k))});
  for (int k = 0; k < model.K; ++k) {
    const std::string eq = "D(" + model.names[k] + ")";
    t.add_row({text(eq), text("adj_R2"), num(model.adj_r2(k)), Cell{}, Cell{}});
    t.add_row({text(eq), text("logL"), num(model.eq_loglik(k)), Cell{}, Cell{}});
    t.add_row({text(eq), text("AIC"), num(model.eq_aic(k)), Cell{}, Cell{}});
    t.add_row({text(eq), text("SC"), num(model.eq_sc(k)), Cell{}, Cell{}});
  }
  return t;
}

Table granger_table(const GrangerResult& result) {
  Table t{"granger", "VEC Granger causality / block exogeneity Wald tests",
          {{"dependent", ColumnKind::text},
           {"excluded", ColumnKind::text},
           {"chi2", ColumnKind::statistic},
           {"df", ColumnKind::integer},
           {"p", ColumnKind::p_value},
           {"reject", ColumnKind::flag}},
          {}};
  for (std::size_t d = 0; d < result.names.size(); ++d) {
    for (const auto& r : result.pairs)
      if (r.dependent == static_cast<int>(d))
        t.add_row({text("D(" + result.names[d] + ")"), text("D(" + result.names[r.excluded] + ")"), num(r.chi2),
                   integer(r.df), num(r.p), Cell{r.reject}});
    for (const auto& r : result.all)
      if (r.dependent == static_cast<int>(d))
        t.add_row({text("D(" + result.names[d] + ")"), text("All"), num(r.chi2), integer(r.df), num(r.p),
                   Cell{r.reject}});
  }
  return t;
}

Table lop_table(const PairwiseLopTable& table) {
  Table t{"lop_pairwise", "Pairwise LR tests of the law of one price (level " + format_p_value(table.level) + ")",
          {{"pair", ColumnKind::text},
           {"LR", ColumnKind::statistic},
           {"df", ColumnKind::integer},
           {"p", ColumnKind::p_value},
           {"reject", ColumnKind::flag}},
          {}};
  for (const auto& r : table.rows)
    t.add_row({text(r.result.label), num(r.result.lr), integer(r.result.df), num(r.result.p_value), Cell{r.reject}});
  return t;
}

Table restriction_table(const std::vector<RestrictionResult>& results, const std::string& name) {
  Table t{name, "LR tests of restrictions",
          {{"restriction", ColumnKind::text},
           {"LR", ColumnKind::statistic},
           {"df", ColumnKind::integer},
           {"p", ColumnKind::p_value},
           {"logL_restricted", ColumnKind::statistic},
           {"logL_unrestricted", ColumnKind::statistic}},
          {}};
  for (const auto& r : results)
    t.add_row({text(r.label), num(r.lr), integer(r.df), num(r.p_value), num(r.loglik_restricted),
               num(r.loglik_unrestricted)});
  return t;
}

Table ect_table(const VecmModel& model) {
  Table t{"ect", "Error-correction terms", {{"date", ColumnKind::text}}, {}};
  for (int j = 0; j < model.rank; ++j) t.columns.push_back({"ect" + std::to_string(j + 1), ColumnKind::statistic});
  for (Eigen::Index r = 0; r < model.ect.rows(); ++r) {
    std::vector<Cell> row{text(model.sample_dates[r].to_string())};
    for (int j = 0; j < model.rank; ++j) row.push_back(num(model.ect(r, j)));
    t.add_row(std::move(row));
  }
  return t;
}

Table panel_table(const PricePanel& panel, const std::string& name) {
  Table t{name, "Series (" + to_string(panel.scale()) + ")", {{"date", ColumnKind::text}}, {}};
  for (const auto& n : panel.names()) t.columns.push_back({n, ColumnKind::statistic});
  for (Eigen::Index r = 0; r < panel.rows(); ++r) {
    std::vector<Cell> row{text(panel.dates()[r].to_string())};
    for (Eigen::Index c = 0; c < panel.cols(); ++c) row.push_back(num(panel.values()(r, c)));
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace lopcoint
