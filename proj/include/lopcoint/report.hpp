#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "lopcoint/johansen.hpp"
#include "lopcoint/unit_root.hpp"
#include "lopcoint/var_model.hpp"
#include "lopcoint/vecm.hpp"

namespace lopcoint {

enum class OutputFormat { text, csv, json };

OutputFormat output_format_from_string(const std::string& s);
std::string extension(OutputFormat f);

/// Statistics print with 6 significant digits, p-values with 4 decimals.
enum class ColumnKind { text, integer, statistic, p_value, flag };

using Cell = std::variant<std::monostate, std::string, long long, double, bool>;

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::statistic;
};

struct Table {
  std::string name;  // file stem
  std::string title;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string format_statistic(double v);
std::string format_p_value(double p);
/// Value as stored in JSON output: rounded the same way as the text forms.
nlohmann::json cell_json(const Cell& cell, ColumnKind kind);

void emit_table(const Table& table, OutputFormat format, std::ostream& out);
/// Writes <dir>/<name>.<ext>; throws Error when the destination is unwritable.
std::filesystem::path write_table(const Table& table, OutputFormat format, const std::filesystem::path& dir);
nlohmann::json table_json(const Table& table);

Table unit_root_table(const std::vector<IntegrationReport>& reports);
Table lag_selection_table(const LagSelectionTable& sel);
Table var_coefficient_table(const VarModel& model, const std::string& name = "var_coefficients");
Table serial_correlation_table(const std::vector<SerialCorrelationRow>& rows, const std::string& name = "var_lm_test");
Table normality_table(const NormalityReport& report, const std::string& name = "var_normality");
Table stability_table(const StabilityReport& report, const std::string& name = "var_stability");
Table rank_test_table(const RankTestTable& rows, JohansenStatistic which);
Table cointegration_table(const VecmModel& model);
Table adjustment_table(const VecmModel& model);
Table vecm_coefficient_table(const VecmModel& model);
Table granger_table(const GrangerResult& result);
Table lop_table(const PairwiseLopTable& table);
Table restriction_table(const std::vector<RestrictionResult>& results, const std::string& name = "restrictions");
Table ect_table(const VecmModel& model);
Table panel_table(const PricePanel& panel, const std::string& name = "series");

}  // namespace lopcoint
