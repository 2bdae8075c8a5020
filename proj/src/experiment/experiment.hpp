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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eval/splits.hpp"
#include "gcn/gcn_baseline.hpp"
#include "graphon/graphon_model.hpp"
#include "json.hpp"

namespace lggnn {

enum class RhoMode { kOne, kInvSqrtN, kLogNOverN, kFixed };
enum class Method { kLggnnBox, kLggnnPls, kGcnUntrained };

double resolve_rho(RhoMode mode, int n, double fixed = 1.0);

/// Keys of the JSON document are the field names below; `model` is a preset
/// name, a spec file path or an inline spec object.
struct ExperimentConfig {
  std::string name = "experiment";
  nlohmann::json model = "ssbm6";
  std::string graph_file;  // optional edge list instead of sampling
  int n = 1000;
  RhoMode rho_mode = RhoMode::kOne;
  double rho = 1.0;  // used by RhoMode::kFixed
  int L = 2;
  /// "default" (max(64, ceil(4/rho))), "n", or a positive integer.
  nlohmann::json d_policy = "default";
  Method method = Method::kLggnnBox;
  SplitProtocol protocol = SplitProtocol::kOutSample;
  double p = 0.2;
  double negative_ratio = 0.0;
  bool keep_connected = false;
  std::vector<int> hits_k{50, 100};
  std::vector<int> ratio_k{100};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::string output_dir;
  /// "default", "spectrum", an array of b_i, or {"l1_radius": r | "spectrum"}.
  nlohmann::json bounds = "default";
  int pls_components = 0;  // 0 means min(3, L+1)
  bool symmetrize = true;
  bool save_predictions = false;
  GcnConfig gcn;
};

ExperimentConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

struct SeedResult {
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  std::map<std::string, double> metrics;
  nlohmann::json details;
};

struct MetricSummary {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, 0 for a single seed
  int count = 0;
};

struct ResultRow {
  nlohmann::json config;
  std::vector<SeedResult> seeds;
  std::vector<std::string> metric_order;
  std::map<std::string, MetricSummary> aggregate;
};

SeedResult run_seed(const ExperimentConfig& cfg, std::uint64_t seed);
ResultRow run_experiment(const ExperimentConfig& cfg);

/// Mean and sample sd per metric over successful seeds.
void aggregate_results(ResultRow& row);

nlohmann::json seed_to_json(const SeedResult& s, const nlohmann::json& config);
nlohmann::json result_to_json(const ResultRow& row);
std::string aggregate_csv_header(const ResultRow& row);
std::string aggregate_csv_line(const ResultRow& row);

/// Writes via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& contents);

struct CoraConfig {
  std::string path;
  std::vector<int> layers{2};
  std::vector<Method> methods{Method::kLggnnBox, Method::kLggnnPls};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  double p = 0.2;
  std::vector<int> hits_k{50, 100};
  std::string output_dir;
};

CoraConfig cora_config_from_json(const nlohmann::json& doc);
/// One ResultRow per (layers, method).
std::vector<ResultRow> run_cora(const CoraConfig& cfg);

const char* to_string(Method m);
const char* to_string(RhoMode m);

}  // namespace lggnn
