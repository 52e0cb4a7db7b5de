#include "dwe/eval/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace dwe {

namespace {

using Getter = std::function<std::optional<double>(const FrameMetrics&)>;

const std::vector<std::pair<std::string, Getter>>& metric_table() {
  static const std::vector<std::pair<std::string, Getter>> table = {
      {"psnr_db", [](const FrameMetrics& f) { return f.psnr_db; }},
      {"ssim", [](const FrameMetrics& f) { return f.ssim; }},
      {"cnr_db", [](const FrameMetrics& f) { return f.cnr_db; }},
      {"gcnr", [](const FrameMetrics& f) { return f.gcnr; }},
      {"mepe_m", [](const FrameMetrics& f) { return f.mepe_m; }},
      {"rave", [](const FrameMetrics& f) { return f.rave; }},
      {"mepd_m", [](const FrameMetrics& f) { return f.mepd_m; }},
  };
  return table;
}

std::string format_value(std::optional<double> v) {
  if (!v) return "";
  if (std::isinf(*v)) return *v > 0 ? "+inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", *v);
  return buf;
}

}  // namespace

MetricAggregate MetricReport::aggregate(const std::string& metric) const {
  const Getter* getter = nullptr;
  for (const auto& [name, g] : metric_table()) {
    if (name == metric) {
      getter = &g;
      break;
    }
  }
  if (!getter) throw std::invalid_argument("report: unknown metric '" + metric + "'");
  MetricAggregate agg;
  double sum = 0.0, sum2 = 0.0;
  for (const auto& f : frames) {
    const auto v = (*getter)(f);
    if (!v || std::isinf(*v)) continue;
    sum += *v;
    sum2 += *v * *v;
    ++agg.count;
  }
  if (agg.count > 0) {
    const double n = static_cast<double>(agg.count);
    agg.mean = sum / n;
    const double var = sum2 / n - agg.mean * agg.mean;
    agg.stddev = var > 0 ? std::sqrt(var) : 0.0;
  }
  return agg;
}

void MetricReport::save_csv(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "frame_time";
  for (const auto& [name, getter] : metric_table()) out << ',' << name;
  out << '\n';
  for (const auto& f : frames) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", f.frame_time);
    out << buf;
    for (const auto& [name, getter] : metric_table()) out << ',' << format_value(getter(f));
    out << '\n';
  }
}

nlohmann::json MetricReport::aggregates_json() const {
  nlohmann::json j;
  for (const auto& [name, getter] : metric_table()) {
    const auto agg = aggregate(name);
    if (agg.count == 0) continue;
    j[name] = {{"mean", agg.mean}, {"stddev", agg.stddev}, {"count", agg.count}};
  }
  return j;
}

}  // namespace dwe
