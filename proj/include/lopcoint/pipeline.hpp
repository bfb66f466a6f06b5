#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "lopcoint/config.hpp"
#include "lopcoint/johansen.hpp"
#include "lopcoint/report.hpp"
#include "lopcoint/unit_root.hpp"
#include "lopcoint/var_model.hpp"

namespace lopcoint {

/// Settings for the full analysis. Keys in a config file (defaults in brackets):
///
///   data.path, data.date_column [date], data.regions [all columns], data.log [true]
///   unit_root.max_lag [15], unit_root.criterion [aic], unit_root.level [0.05]
///   var.max_lag [5], var.constant [true], var.trend [false]
///   var.initial_order [0 = skip], var.order [lag chosen by AIC], var.lm_lags [4]
///   var.auto_respec [false], var.outlier_threshold [3.5]
///   dummies.<name> = YYYY-MM[, YYYY-MM...]
///   johansen.case [unrestricted_constant], johansen.rank_policy [trace], johansen.level [0.05]
///   vecm.lags [var.order - 1; follows the searched order under auto_respec], vecm.pivot [first region]
///   lop.level [0.01]
///   output.dir [out], output.formats [text,csv,json]
///   seed [20240601]
struct PipelineConfig {
  KeyValueConfig source;  // data location and column mapping

  bool log_transform = true;
  int ur_max_lag = 15;
  LagCriterion ur_criterion = LagCriterion::aic;
  double ur_level = 0.05;

  int var_max_lag = 5;
  DeterministicTerms var_det;
  int var_initial_order = 0;
  int var_order = 0;
  int lm_lags = 4;
  bool auto_respec = false;
  double outlier_threshold = 3.5;
  DummySpec dummies;

  JohansenCase jcase = JohansenCase::unrestricted_constant;
  RankPolicy rank_policy = RankPolicy::trace;
  double johansen_level = 0.05;

  int vecm_lags = 0;
  std::string pivot;
  double lop_level = 0.01;

  std::filesystem::path out_dir = "out";
  std::vector<OutputFormat> formats{OutputFormat::text, OutputFormat::csv, OutputFormat::json};
  std::uint64_t seed = 20240601;

  static PipelineConfig from(const KeyValueConfig& cfg);
};

struct PipelineReport {
  nlohmann::json summary;
  std::vector<Table> tables;
};

/// Runs every stage in memory. Failures are rethrown with the stage name
/// prefixed, keeping the error category.
PipelineReport run_pipeline(const PipelineConfig& config);

/// One file per table and format plus summary.json; returns the paths written.
std::vector<std::filesystem::path> write_report(const PipelineReport& report, const std::filesystem::path& dir,
                                                const std::vector<OutputFormat>& formats);

}  // namespace lopcoint
