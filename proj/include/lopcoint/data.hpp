#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace lopcoint {

/// Calendar month. Ordering and arithmetic are by month count.
struct YearMonth {
  int year = 1970;
  int month = 1;  // 1..12

  static YearMonth parse(std::string_view text);  // "YYYY-MM" (also accepts "YYYY-MM-DD")
  std::string to_string() const;
  int index() const { return year * 12 + (month - 1); }
  YearMonth plus_months(int n) const;

  friend bool operator==(const YearMonth&, const YearMonth&) = default;
  friend auto operator<=>(const YearMonth& a, const YearMonth& b) { return a.index() <=> b.index(); }
};

enum class Scale { level, log, first_difference };

std::string to_string(Scale s);

/// Aligned monthly multivariate series. Immutable after construction.
///
/// Rows are months (strictly consecutive), columns are regions.
class PricePanel {
 public:
  PricePanel(std::vector<YearMonth> dates, std::vector<std::string> names, Eigen::MatrixXd values,
             Scale scale = Scale::level);

  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }
  const std::vector<YearMonth>& dates() const { return dates_; }
  const std::vector<std::string>& names() const { return names_; }
  const Eigen::MatrixXd& values() const { return values_; }
  Scale scale() const { return scale_; }

  Eigen::VectorXd column(Eigen::Index j) const { return values_.col(j); }
  Eigen::Index column_index(std::string_view name) const;

  /// Sub-panel with the listed columns, in the given order.
  PricePanel select(const std::vector<Eigen::Index>& columns) const;

 private:
  std::vector<YearMonth> dates_;
  std::vector<std::string> names_;
  Eigen::MatrixXd values_;
  Scale scale_;
};

/// Maps CSV columns to region labels, in output order.
struct ColumnMapping {
  std::string date_column = "date";
  std::vector<std::pair<std::string, std::string>> columns;  // (csv column, label)
};

PricePanel load_panel(const std::filesystem::path& path, const ColumnMapping& mapping);
PricePanel load_panel(std::istream& in, const ColumnMapping& mapping, const std::string& source = "<stream>");

/// Writes `date,<name>...` with 17 significant digits so that reloading is lossless.
void write_panel_csv(const PricePanel& panel, std::ostream& out);

PricePanel log_transform(const PricePanel& panel);

/// First difference. Output row t holds input[t+1] - input[t] and carries the later date.
PricePanel difference(const PricePanel& panel, int order = 1);

struct DummyEntry {
  std::string name;
  std::vector<YearMonth> months;
};

struct DummySpec {
  std::vector<DummyEntry> entries;
};

/// 0/1 impulse regressors aligned to a date index.
struct DummyMatrix {
  std::vector<std::string> names;
  Eigen::MatrixXd values;  // T x d
  Eigen::Index cols() const { return values.cols(); }
};

DummyMatrix build_dummies(const DummySpec& spec, const std::vector<YearMonth>& dates);

/// Empty dummy matrix with `rows` rows.
DummyMatrix no_dummies(Eigen::Index rows);

}  // namespace lopcoint
