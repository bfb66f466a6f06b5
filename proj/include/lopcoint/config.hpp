#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lopcoint/data.hpp"

namespace lopcoint {

/// Plain-text `key = value` configuration. `#` starts a comment; later keys override earlier ones.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;
  static KeyValueConfig parse(std::istream& in, const std::string& source = "<config>");
  static KeyValueConfig load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  int get_int(const std::string& key, int fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }

  /// Keys sharing `prefix` (e.g. "dummies."), with the prefix stripped, in lexical order.
  std::vector<std::pair<std::string, std::string>> with_prefix(const std::string& prefix) const;

  /// Directory of the file this config was loaded from; relative data paths resolve against it.
  const std::filesystem::path& base_dir() const { return base_dir_; }

 private:
  std::map<std::string, std::string> values_;
  std::filesystem::path base_dir_;
};

/// `data.regions = col:LABEL, col2:LABEL2` (label defaults to the column name).
ColumnMapping column_mapping_from(const KeyValueConfig& cfg);

/// `dummies.<name> = 2003-11, 2004-01`, ordered by name.
DummySpec dummy_spec_from(const KeyValueConfig& cfg);

/// Resolves `data.path` against the config's directory and loads the panel.
PricePanel panel_from(const KeyValueConfig& cfg);

}  // namespace lopcoint
