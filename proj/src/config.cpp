#include "lopcoint/config.hpp"

#include <algorithm>
#include <fstream>

#include "lopcoint/detail/text.hpp"
#include "lopcoint/errors.hpp"

namespace lopcoint {

KeyValueConfig KeyValueConfig::parse(std::istream& in, const std::string& source) {
  KeyValueConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto body = detail::trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw DataError(source + ":" + std::to_string(line_no) + ": expected 'key = value'");
    auto key = std::string(detail::trim(body.substr(0, eq)));
    if (key.empty()) throw DataError(source + ":" + std::to_string(line_no) + ": empty key");
    cfg.values_[key] = std::string(detail::trim(body.substr(eq + 1)));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file '" + path.string() + "'");
  auto cfg = parse(in, path.string());
  cfg.base_dir_ = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  return cfg;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValueConfig::get_or(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  auto n = detail::parse_long(*v);
  if (!n) throw DataError("config key '" + key + "' expects an integer, got '" + *v + "'");
  return static_cast<int>(*n);
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  auto d = detail::parse_double(*v);
  if (!d) throw DataError("config key '" + key + "' expects a number, got '" + *v + "'");
  return *d;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  std::string s = *v;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
  if (s == "false" || s == "no" || s == "0" || s == "off") return false;
  throw DataError("config key '" + key + "' expects a boolean, got '" + *v + "'");
}

std::vector<std::pair<std::string, std::string>> KeyValueConfig::with_prefix(const std::string& prefix) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto it = values_.lower_bound(prefix); it != values_.end() && it->first.rfind(prefix, 0) == 0; ++it)
    out.emplace_back(it->first.substr(prefix.size()), it->second);
  return out;
}

ColumnMapping column_mapping_from(const KeyValueConfig& cfg) {
  ColumnMapping m;
  m.date_column = cfg.get_or("data.date_column", "date");
  if (auto regions = cfg.get("data.regions")) {
    for (const auto& item : detail::split(*regions, ',')) {
      if (item.empty()) continue;
      auto colon = item.find(':');
      if (colon == std::string::npos) {
        m.columns.emplace_back(item, item);
      } else {
        m.columns.emplace_back(std::string(detail::trim(item.substr(0, colon))),
                               std::string(detail::trim(item.substr(colon + 1))));
      }
    }
  }
  return m;
}

DummySpec dummy_spec_from(const KeyValueConfig& cfg) {
  DummySpec spec;
  for (const auto& [name, months] : cfg.with_prefix("dummies.")) {
    DummyEntry e{name, {}};
    for (const auto& m : detail::split(months, ','))
      if (!m.empty()) e.months.push_back(YearMonth::parse(m));
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

PricePanel panel_from(const KeyValueConfig& cfg) {
  auto path = cfg.get("data.path");
  if (!path) throw DataError("config is missing 'data.path'");
  std::filesystem::path p(*path);
  if (p.is_relative() && !cfg.base_dir().empty()) p = cfg.base_dir() / p;
  return load_panel(p, column_mapping_from(cfg));
}

}  // namespace lopcoint
