#include "lopcoint/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lopcoint/errors.hpp"
#include "lopcoint/detail/text.hpp"

namespace lopcoint {

YearMonth YearMonth::parse(std::string_view text) {
  auto s = detail::trim(text);
  auto fail = [&] { throw DataError("cannot parse year-month '" + std::string(text) + "'"); };
  if (s.size() < 7 || s[4] != '-') fail();
  int y = 0, m = 0;
  auto r1 = std::from_chars(s.data(), s.data() + 4, y);
  auto r2 = std::from_chars(s.data() + 5, s.data() + 7, m);
  if (r1.ec != std::errc{} || r1.ptr != s.data() + 4 || r2.ec != std::errc{} || r2.ptr != s.data() + 7) fail();
  if (m < 1 || m > 12) fail();
  if (s.size() > 7) {
    // Tolerate a day component ("YYYY-MM-DD"); it is ignored.
    if (s.size() != 10 || s[7] != '-') fail();
    int d = 0;
    auto r3 = std::from_chars(s.data() + 8, s.data() + 10, d);
    if (r3.ec != std::errc{} || d < 1 || d > 31) fail();
  }
  return {y, m};
}

std::string YearMonth::to_string() const {
  std::ostringstream os;
  os << std::setw(4) << std::setfill('0') << year << '-' << std::setw(2) << month;
  return os.str();
}

YearMonth YearMonth::plus_months(int n) const {
  int idx = index() + n;
  int y = idx >= 0 ? idx / 12 : (idx - 11) / 12;
  return {y, idx - y * 12 + 1};
}

std::string to_string(Scale s) {
  switch (s) {
    case Scale::level: return "level";
    case Scale::log: return "log";
    case Scale::first_difference: return "first-difference";
  }
  return "?";
}

PricePanel::PricePanel(std::vector<YearMonth> dates, std::vector<std::string> names, Eigen::MatrixXd values,
                       Scale scale)
    : dates_(std::move(dates)), names_(std::move(names)), values_(std::move(values)), scale_(scale) {
  if (values_.rows() < 1) throw DataError("panel must contain at least one observation");
  if (static_cast<Eigen::Index>(dates_.size()) != values_.rows())
    throw DataError("date index length does not match the number of rows");
  if (static_cast<Eigen::Index>(names_.size()) != values_.cols())
    throw DataError("number of region names does not match the number of columns");
  for (std::size_t t = 1; t < dates_.size(); ++t) {
    if (dates_[t].index() != dates_[t - 1].index() + 1)
      throw DataError("non-contiguous or duplicated dates at " + dates_[t].to_string());
  }
  if (!values_.allFinite()) throw DataError("panel contains missing or non-finite values");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw DataError("region names must be unique");
}

Eigen::Index PricePanel::column_index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw DataError("unknown region '" + std::string(name) + "'");
  return it - names_.begin();
}

PricePanel PricePanel::select(const std::vector<Eigen::Index>& columns) const {
  Eigen::MatrixXd v(rows(), static_cast<Eigen::Index>(columns.size()));
  std::vector<std::string> n;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] < 0 || columns[j] >= cols()) throw DataError("column index out of range");
    v.col(static_cast<Eigen::Index>(j)) = values_.col(columns[j]);
    n.push_back(names_[static_cast<std::size_t>(columns[j])]);
  }
  return {dates_, std::move(n), std::move(v), scale_};
}

namespace {

bool is_missing(std::string_view cell) {
  auto c = detail::trim(cell);
  if (c.empty()) return true;
  std::string lower(c);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return lower == "na" || lower == "nan" || lower == "null" || lower == "-" || lower == ".";
}

}  // namespace

PricePanel load_panel(std::istream& in, const ColumnMapping& mapping, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  auto where = [&] { return source + ":" + std::to_string(line_no) + ": "; };

  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    header = detail::split_csv_line(line);
    break;
  }
  if (header.empty()) throw DataError(source + ": empty file");
  for (auto& h : header) h = std::string(detail::trim(h));

  auto find_col = [&](const std::string& name) -> std::size_t {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError(source + ": column '" + name + "' not found in header");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t date_col = find_col(mapping.date_column);

  std::vector<std::pair<std::string, std::string>> columns = mapping.columns;
  if (columns.empty()) {
    for (const auto& h : header)
      if (h != mapping.date_column) columns.emplace_back(h, h);
  }
  std::vector<std::size_t> value_cols;
  std::vector<std::string> names;
  for (const auto& [col, label] : columns) {
    value_cols.push_back(find_col(col));
    names.push_back(label.empty() ? col : label);
  }
  if (value_cols.empty()) throw DataError(source + ": no value columns");

  struct Row {
    YearMonth date;
    std::vector<double> values;
    std::size_t line;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    auto cells = detail::split_csv_line(line);
    if (cells.size() != header.size())
      throw DataError(where() + "expected " + std::to_string(header.size()) + " fields, found " +
                      std::to_string(cells.size()));
    Row row;
    row.line = line_no;
    try {
      row.date = YearMonth::parse(cells[date_col]);
    } catch (const DataError& e) {
      throw DataError(where() + e.what());
    }
    for (std::size_t j = 0; j < value_cols.size(); ++j) {
      const auto& cell = cells[value_cols[j]];
      if (is_missing(cell)) throw DataError(where() + "missing value in column '" + columns[j].first + "'");
      auto v = detail::parse_double(cell);
      if (!v) throw DataError(where() + "cannot parse number '" + cell + "'");
      row.values.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError(source + ": no data rows");

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.date < b.date; });
  for (std::size_t t = 1; t < rows.size(); ++t) {
    if (rows[t].date.index() != rows[t - 1].date.index() + 1)
      throw DataError(source + ":" + std::to_string(rows[t].line) +
                      ": non-contiguous or duplicated dates at " + rows[t].date.to_string());
  }

  std::vector<YearMonth> dates;
  Eigen::MatrixXd values(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(names.size()));
  for (std::size_t t = 0; t < rows.size(); ++t) {
    dates.push_back(rows[t].date);
    for (std::size_t j = 0; j < names.size(); ++j)
      values(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) = rows[t].values[j];
  }
  return {std::move(dates), std::move(names), std::move(values), Scale::level};
}

PricePanel load_panel(const std::filesystem::path& path, const ColumnMapping& mapping) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file '" + path.string() + "'");
  return load_panel(in, mapping, path.string());
}

void write_panel_csv(const PricePanel& panel, std::ostream& out) {
  out << "date";
  for (const auto& n : panel.names()) out << ',' << n;
  out << '\n';
  std::ostringstream cell;
  cell << std::setprecision(17);
  for (Eigen::Index t = 0; t < panel.rows(); ++t) {
    out << panel.dates()[static_cast<std::size_t>(t)].to_string();
    for (Eigen::Index j = 0; j < panel.cols(); ++j) {
      cell.str({});
      cell << panel.values()(t, j);
      out << ',' << cell.str();
    }
    out << '\n';
  }
}

PricePanel log_transform(const PricePanel& panel) {
  if (panel.scale() != Scale::level) throw DataError("log transform requires a level-scale panel");
  const auto& v = panel.values();
  for (Eigen::Index t = 0; t < v.rows(); ++t)
    for (Eigen::Index j = 0; j < v.cols(); ++j)
      if (!(v(t, j) > 0.0))
        throw DataError("non-positive value " + detail::format_number(v(t, j)) + " at " +
                        panel.dates()[static_cast<std::size_t>(t)].to_string() + " for region '" +
                        panel.names()[static_cast<std::size_t>(j)] + "'");
  return {panel.dates(), panel.names(), v.array().log().matrix(), Scale::log};
}

PricePanel difference(const PricePanel& panel, int order) {
  if (order != 1) throw DataError("only first differences are supported");
  if (panel.rows() < 2) throw DataError("differencing requires at least two observations");
  const auto& v = panel.values();
  const Eigen::Index n = v.rows() - 1;
  Eigen::MatrixXd d = v.bottomRows(n) - v.topRows(n);
  std::vector<YearMonth> dates(panel.dates().begin() + 1, panel.dates().end());
  return {std::move(dates), panel.names(), std::move(d), Scale::first_difference};
}

DummyMatrix build_dummies(const DummySpec& spec, const std::vector<YearMonth>& dates) {
  if (dates.empty()) throw DataError("empty date index");
  DummyMatrix out;
  out.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dates.size()),
                                     static_cast<Eigen::Index>(spec.entries.size()));
  std::set<std::string> seen;
  const int first = dates.front().index();
  for (std::size_t j = 0; j < spec.entries.size(); ++j) {
    const auto& e = spec.entries[j];
    if (!seen.insert(e.name).second) throw DataError("duplicate dummy name '" + e.name + "'");
    for (const auto& m : e.months) {
      const int pos = m.index() - first;
      if (pos < 0 || pos >= static_cast<int>(dates.size()))
        throw DataError("dummy '" + e.name + "' month " + m.to_string() + " lies outside the panel range " +
                        dates.front().to_string() + ".." + dates.back().to_string());
      out.values(pos, static_cast<Eigen::Index>(j)) = 1.0;
    }
    out.names.push_back(e.name);
  }
  return out;
}

DummyMatrix no_dummies(Eigen::Index rows) { return {{}, Eigen::MatrixXd::Zero(rows, 0)}; }

}  // namespace lopcoint
