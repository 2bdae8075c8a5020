/*
 * Copyright (c) 2026, The lggnn Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "experiment/plot_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "common/errors.hpp"

namespace lggnn {

using nlohmann::json;

PlotKind plot_kind_from_string(const std::string& s) {
  if (s == "metric_vs_n") return PlotKind::kMetricVsN;
  if (s == "spread_vs_n") return PlotKind::kSpreadVsN;
  if (s == "histogram") return PlotKind::kHistogram;
  throw ConfigError("unknown plot kind '" + s + "'");
}

namespace {

struct Point {
  double n;
  double mean;
  double sd;
};

std::vector<Point> sweep(const std::vector<json>& reports, const std::string& metric) {
  if (reports.empty()) throw EmptyDataError("no reports to plot");
  std::vector<Point> pts;
  json reference;
  for (const json& r : reports) {
    if (!r.contains("config") || !r.contains("aggregate")) {
      throw ParameterError("plot input must be aggregate experiment reports");
    }
    json cfg = r.at("config");
    if (!cfg.contains("n")) throw ParameterError("report has no n to sweep over");
    double n = cfg.at("n").get<double>();
    cfg.erase("n");
    cfg.erase("output_dir");
    cfg.erase("name");
    if (reference.is_null()) {
      reference = cfg;
    } else if (cfg != reference) {
      throw ParameterError("reports differ in more than n; sweep axis is inconsistent");
    }
    const json& agg = r.at("aggregate");
    if (!agg.contains(metric)) throw ParameterError("report lacks metric '" + metric + "'");
    pts.push_back({n, agg.at(metric).at("mean").get<double>(), agg.at(metric).at("sd").get<double>()});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.n < b.n; });
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].n == pts[i - 1].n) throw ParameterError("duplicate n in sweep");
  }
  return pts;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

std::string metric_vs_n_table(const std::vector<json>& reports, const std::string& metric) {
  std::string out = "# n " + metric + "_mean " + metric + "_sd\n";
  for (const Point& p : sweep(reports, metric)) out += fmt(p.n) + " " + fmt(p.mean) + " " + fmt(p.sd) + "\n";
  return out;
}

std::string spread_vs_n_table(const std::vector<json>& reports, const std::string& metric) {
  std::string out = "# n spread ratio\n";
  auto pts = sweep(reports, metric);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double ratio = i == 0 ? std::nan("") : pts[i - 1].mean / pts[i].mean;
    out += fmt(pts[i].n) + " " + fmt(pts[i].mean) + " " + fmt(ratio) + "\n";
  }
  return out;
}

std::string histogram_table(const std::vector<double>& values, int bins) {
  if (values.empty()) throw EmptyDataError("no values for histogram");
  if (bins < 1) throw ParameterError("bins must be >= 1");
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  const double width = (hi - lo) / bins;
  std::vector<long long> counts(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    int b = width > 0.0 ? static_cast<int>((v - lo) / width) : 0;
    counts[static_cast<std::size_t>(std::clamp(b, 0, bins - 1))] += 1;
  }
  std::string out = "# bin_left bin_right count\n";
  for (int b = 0; b < bins; ++b) {
    out += fmt(lo + b * width) + " " + fmt(b + 1 == bins ? hi : lo + (b + 1) * width) + " " +
           std::to_string(counts[static_cast<std::size_t>(b)]) + "\n";
  }
  return out;
}

std::string emit_plot_data(const std::vector<json>& reports, PlotKind kind, const std::string& metric) {
  switch (kind) {
    case PlotKind::kMetricVsN: return metric_vs_n_table(reports, metric);
    case PlotKind::kSpreadVsN: return spread_vs_n_table(reports, metric);
    case PlotKind::kHistogram: {
      std::vector<double> values;
      for (const json& r : reports) {
        const json* preds = nullptr;
        if (r.contains("details") && r.at("details").contains("predictions")) {
          preds = &r.at("details").at("predictions");
        } else if (r.contains("predictions")) {
          preds = &r.at("predictions");
        }
        if (!preds) throw ParameterError("histogram input needs saved predictions");
        for (const json& v : *preds) values.push_back(v.get<double>());
      }
      return histogram_table(values);
    }
  }
  throw ParameterError("unknown plot kind");
}

}  // namespace lggnn
