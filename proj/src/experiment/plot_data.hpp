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
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace lggnn {

enum class PlotKind { kMetricVsN, kSpreadVsN, kHistogram };

PlotKind plot_kind_from_string(const std::string& s);

inline constexpr int kHistogramBins = 50;

/// Whitespace-separated table with a '#' header line.
/// metric_vs_n: reports are aggregate results (result_to_json) sharing all
/// config keys except n; columns n, <metric>_mean, <metric>_sd.
std::string metric_vs_n_table(const std::vector<nlohmann::json>& reports, const std::string& metric);
/// spread_vs_n: same input; columns n, spread, ratio (previous row / this row).
std::string spread_vs_n_table(const std::vector<nlohmann::json>& reports, const std::string& metric);
/// histogram over the observed range: columns bin_left, bin_right, count.
std::string histogram_table(const std::vector<double>& values, int bins = kHistogramBins);

/// Dispatches on kind; histogram reads details.predictions of per-seed reports.
std::string emit_plot_data(const std::vector<nlohmann::json>& reports, PlotKind kind, const std::string& metric);

}  // namespace lggnn
