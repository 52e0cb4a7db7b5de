#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dwe {

// One evaluated frame; absent metrics stay unset.
struct FrameMetrics {
  double frame_time = 0.0;
  std::optional<double> psnr_db;
  std::optional<double> ssim;
  std::optional<double> cnr_db;
  std::optional<double> gcnr;
  std::optional<double> mepe_m;
  std::optional<double> rave;
  std::optional<double> mepd_m;
};

struct MetricAggregate {
  double mean = 0.0;
  double stddev = 0.0;
  size_t count = 0;
};

struct MetricReport {
  std::vector<FrameMetrics> frames;

  // mean +/- population stddev over frames where the metric is present;
  // infinite sentinel values are excluded from the aggregate.
  MetricAggregate aggregate(const std::string& metric) const;

  // CSV, one row per frame; +/-inf serialized as "+inf"/"-inf".
  void save_csv(const std::string& path) const;
  // JSON aggregate block.
  nlohmann::json aggregates_json() const;
};

}  // namespace dwe
