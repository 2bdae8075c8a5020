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
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "common/errors.hpp"
#include "experiment/experiment.hpp"
#include "experiment/plot_data.hpp"
#include "graphon/sampled_graph.hpp"
#include "test_util.hpp"

using namespace lggnn;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("lggnn_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig small_config() {
  json doc = {{"name", "small"}, {"model", "ssbm6"}, {"n", 240},  {"L", 1},
              {"d_policy", 64},  {"p", 0.2},         {"seeds", {1, 2, 3}},
              {"hits_k", {10}},  {"ratio_k", {20}}};
  return config_from_json(doc);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"') {
      if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else {
        quoted = !quoted;
      }
    } else if (c == ',' && !quoted) {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

std::vector<std::vector<double>> table_rows(const std::string& table) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(table);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ls(line);
    std::vector<double> r;
    std::string tok;
    while (ls >> tok) r.push_back(tok.find("nan") != std::string::npos ? std::nan("") : std::stod(tok));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("rho modes resolve") {
  CHECK(resolve_rho(RhoMode::kOne, 400) == 1.0);
  CHECK(resolve_rho(RhoMode::kInvSqrtN, 400) == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(resolve_rho(RhoMode::kLogNOverN, 400) == doctest::Approx(std::log(400.0) / 400.0).epsilon(1e-14));
  CHECK(resolve_rho(RhoMode::kLogNOverN, 400) == doctest::Approx(0.01498).epsilon(1e-3));
  CHECK(resolve_rho(RhoMode::kFixed, 400, 0.3) == 0.3);
  CHECK_THROWS_AS(resolve_rho(RhoMode::kFixed, 400, 0.0), ConfigError);
  CHECK_THROWS_AS(resolve_rho(RhoMode::kFixed, 400, 1.5), ConfigError);
}

TEST_CASE("config parsing") {
  CHECK_THROWS_AS(config_from_json(json{{"bogus", 1}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(json{{"seeds", json::array()}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(json{{"method", "svm"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(json{{"rho_mode", "half"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(json{{"p", 1.0}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(json{{"n", "many"}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::array()), ConfigError);

  ExperimentConfig c = small_config();
  json echo = config_to_json(c);
  ExperimentConfig back = config_from_json(echo);
  CHECK(config_to_json(back) == echo);
  CHECK(back.n == 240);
  CHECK(back.L == 1);
  CHECK(back.seeds == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("constant graphon gives probability ratio one") {
  for (const char* method : {"lggnn_box", "lggnn_pls", "gcn_untrained"}) {
    json doc = {{"model", {{"kind", "constant"}, {"p", 1.0}}},
                {"n", 120},
                {"L", 1},
                {"d_policy", 32},
                {"method", method},
                {"seeds", {1}},
                {"ratio_k", {50}}};
    ResultRow row = run_experiment(config_from_json(doc));
    REQUIRE(row.seeds.size() == 1);
    INFO(method << ": " << row.seeds[0].error);
    REQUIRE(row.seeds[0].ok);
    CHECK(row.seeds[0].metrics.at("prob_ratio_at_50") == 1.0);
  }
}

TEST_CASE("runs are bitwise reproducible") {
  ExperimentConfig c = small_config();
  c.seeds = {7};
  SeedResult a = run_seed(c, 7);
  SeedResult b = run_seed(c, 7);
  REQUIRE(a.ok);
  REQUIRE(b.ok);
  CHECK(a.metrics == b.metrics);
  CHECK(a.details.dump() == b.details.dump());
  SeedResult other = run_seed(c, 8);
  CHECK(other.metrics != a.metrics);
}

TEST_CASE("aggregates match per-seed files") {
  const fs::path dir = scratch_dir("aggregate");
  ExperimentConfig c = small_config();
  c.output_dir = dir.string();
  ResultRow row = run_experiment(c);
  REQUIRE(row.seeds.size() == 3);

  std::vector<json> per_seed;
  for (std::uint64_t s : c.seeds) {
    fs::path f = dir / ("small_seed" + std::to_string(s) + ".json");
    REQUIRE(fs::exists(f));
    per_seed.push_back(json::parse(slurp(f)));
    CHECK(per_seed.back().at("ok").get<bool>());
    CHECK(per_seed.back().at("config") == row.config);
  }
  REQUIRE(!row.metric_order.empty());
  for (const std::string& m : row.metric_order) {
    std::vector<double> v;
    for (const json& j : per_seed) v.push_back(j.at("metrics").at(m).get<double>());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
    CHECK(std::abs(row.aggregate.at(m).mean - mean) <= 1e-12);
    CHECK(std::abs(row.aggregate.at(m).sd - sd) <= 1e-12);
    CHECK(row.aggregate.at(m).count == 3);
  }

  const std::string csv = slurp(dir / "small.csv");
  std::stringstream ss(csv);
  std::string header, line;
  std::getline(ss, header);
  std::getline(ss, line);
  const auto cols = split_csv(header);
  const auto vals = split_csv(line);
  REQUIRE(cols.size() == vals.size());
  CHECK(cols[0] == "name");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == "seeds") CHECK(vals[i] == "[1,2,3]");
  }
  // Metric columns follow the config columns in the fixed order.
  std::vector<std::string> metric_cols(cols.end() - 2 * static_cast<std::ptrdiff_t>(row.metric_order.size()),
                                       cols.end());
  for (std::size_t i = 0; i < row.metric_order.size(); ++i) {
    CHECK(metric_cols[2 * i] == row.metric_order[i] + "_mean");
    CHECK(metric_cols[2 * i + 1] == row.metric_order[i] + "_sd");
  }
  CHECK(row.metric_order.front() == "auc_roc");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == "auc_roc_mean") CHECK(std::stod(vals[i]) == doctest::Approx(row.aggregate.at("auc_roc").mean));
  }
  fs::remove_all(dir);
}

TEST_CASE("single seed reports zero sd") {
  ExperimentConfig c = small_config();
  c.seeds = {4};
  ResultRow row = run_experiment(c);
  for (const auto& [m, s] : row.aggregate) {
    CHECK(s.sd == 0.0);
    CHECK(s.count == 1);
  }
}

TEST_CASE("failed seed is recorded, not fatal") {
  const fs::path dir = scratch_dir("failure");
  ExperimentConfig c = small_config();
  c.graph_file = (dir / "missing.edges").string();
  c.output_dir = dir.string();
  c.seeds = {1, 2};
  ResultRow row = run_experiment(c);
  REQUIRE(row.seeds.size() == 2);
  for (const SeedResult& s : row.seeds) {
    CHECK_FALSE(s.ok);
    CHECK(s.error.find("missing.edges") != std::string::npos);
  }
  CHECK(row.aggregate.empty());
  json j = json::parse(slurp(dir / "small_seed1.json"));
  CHECK_FALSE(j.at("ok").get<bool>());
  CHECK(j.contains("error"));
  fs::remove_all(dir);
}

TEST_CASE("edge-list experiment in-sample") {
  const fs::path dir = scratch_dir("edgelist");
  SampledGraph g = test::lcg_graph(150, 0.08, 3);
  const std::string path = (dir / "g.edges").string();
  save_edge_list(g, path);
  json doc = {{"graph_file", path}, {"protocol", "in_sample"}, {"negative_ratio", 1.0}, {"L", 2},
              {"d_policy", 64},     {"seeds", {1}},            {"hits_k", {10}},        {"ratio_k", json::array()}};
  ResultRow row = run_experiment(config_from_json(doc));
  REQUIRE(row.seeds[0].ok);
  const SeedResult& s = row.seeds[0];
  CHECK(s.metrics.count("auc_roc") == 1);
  CHECK(s.metrics.count("hits_at_10") == 1);
  // No latents for an ingested graph, so no oracle risk.
  CHECK(s.metrics.count("test_risk") == 0);
  CHECK(s.details.at("positives").get<int>() == s.details.at("negatives").get<int>());
  fs::remove_all(dir);
}

TEST_CASE("untrained gcn run reports spreads") {
  json doc = {{"model", "ssbm6"}, {"n", 200},     {"L", 2},        {"method", "gcn_untrained"},
              {"seeds", {1}},     {"hits_k", {10}}, {"ratio_k", {20}}, {"save_predictions", true}};
  ResultRow row = run_experiment(config_from_json(doc));
  REQUIRE(row.seeds[0].ok);
  const SeedResult& s = row.seeds[0];
  CHECK(s.metrics.count("message_spread_layer1") == 1);
  CHECK(s.metrics.count("message_spread_layer2") == 1);
  CHECK(s.metrics.count("embedding_spread_layer2") == 1);
  for (double p : s.details.at("predictions").get<std::vector<double>>()) {
    CHECK(p > 0.0);
    CHECK(p < 1.0);
  }
  CHECK(s.metrics.count("kkt_ok") == 0);
}

TEST_CASE("plot data tables") {
  ExperimentConfig c = small_config();
  c.seeds = {1};
  json rep = result_to_json(run_experiment(c));

  SUBCASE("single report gives single row") {
    auto rows = table_rows(emit_plot_data({rep}, PlotKind::kMetricVsN, "auc_roc"));
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].size() == 3);
    CHECK(rows[0][0] == 240.0);
    CHECK(rows[0][1] == doctest::Approx(rep["aggregate"]["auc_roc"]["mean"].get<double>()).epsilon(1e-9));
  }
  SUBCASE("constant histogram has one nonzero bin") {
    auto rows = table_rows(histogram_table(std::vector<double>(40, 0.37)));
    REQUIRE(rows.size() == 50);
    int nonzero = 0;
    for (const auto& r : rows) nonzero += r[2] > 0 ? 1 : 0;
    CHECK(nonzero == 1);
  }
  SUBCASE("histogram uses 50 bins over the observed range") {
    auto rows = table_rows(histogram_table({0.0, 0.51, 1.0}));
    REQUIRE(rows.size() == 50);
    CHECK(rows.front()[0] == 0.0);
    CHECK(rows.back()[1] == 1.0);
    CHECK(rows.front()[2] == 1.0);
    CHECK(rows.back()[2] == 1.0);
    CHECK(rows[25][2] == 1.0);
  }
  SUBCASE("histogram needs predictions") {
    CHECK_THROWS_AS(emit_plot_data({rep}, PlotKind::kHistogram, ""), ParameterError);
    json seed_doc = {{"details", {{"predictions", {0.2, 0.2, 0.9}}}}};
    auto rows = table_rows(emit_plot_data({seed_doc}, PlotKind::kHistogram, ""));
    CHECK(rows.size() == 50);
  }
  SUBCASE("inconsistent sweep is rejected") {
    json other = rep;
    other["config"]["L"] = 3;
    other["config"]["n"] = 500;
    CHECK_THROWS_AS(emit_plot_data({rep, other}, PlotKind::kMetricVsN, "auc_roc"), ParameterError);
    json dup = rep;
    dup["name"] = "again";
    CHECK_THROWS_AS(emit_plot_data({rep, dup}, PlotKind::kMetricVsN, "auc_roc"), ParameterError);
    CHECK_THROWS_AS(emit_plot_data({rep}, PlotKind::kMetricVsN, "nope"), ParameterError);
    CHECK_THROWS_AS(plot_kind_from_string("pie"), ConfigError);
  }
  SUBCASE("sweep sorted by n with spread ratio") {
    json a = rep, b = rep;
    a["config"]["n"] = 1600;
    a["aggregate"]["auc_roc"]["mean"] = 0.25;
    b["config"]["n"] = 400;
    b["aggregate"]["auc_roc"]["mean"] = 0.5;
    auto rows = table_rows(emit_plot_data({a, b}, PlotKind::kSpreadVsN, "auc_roc"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0] == 400.0);
    CHECK(std::isnan(rows[0][2]));
    CHECK(rows[1][0] == 1600.0);
    CHECK(rows[1][2] == doctest::Approx(2.0));
  }
}

TEST_CASE("spread sweep over n from gcn runs") {
  std::vector<json> reports;
  for (int n : {400, 1600}) {
    json doc = {{"model", "ssbm6"}, {"n", n},          {"L", 1},         {"method", "gcn_untrained"},
                {"seeds", {1, 2, 3}}, {"hits_k", {10}}, {"ratio_k", {20}}};
    reports.push_back(result_to_json(run_experiment(config_from_json(doc))));
  }
  auto rows = table_rows(emit_plot_data(reports, PlotKind::kSpreadVsN, "message_spread_layer1"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][2] >= 1.4);
  CHECK(rows[1][2] <= 2.8);
}

TEST_CASE("cora runner on a stand-in edge list") {
  const fs::path dir = scratch_dir("cora");
  const std::string path = (dir / "standin.cites").string();
  save_edge_list(test::lcg_graph(400, 0.015, 11), path);
  CoraConfig c = cora_config_from_json(json{{"path", path}, {"seeds", {1, 2}}, {"output_dir", dir.string()}});
  const std::vector<ResultRow> rows = run_cora(c);
  REQUIRE(rows.size() == 2);
  for (const ResultRow& row : rows) {
    CHECK(row.config.at("protocol") == "in_sample");
    REQUIRE(row.seeds.size() == 2);
    for (const SeedResult& s : row.seeds) {
      INFO(s.error);
      CHECK(s.ok);
      // Equal-count negative sampling.
      CHECK(s.details.at("positives").get<int>() == s.details.at("negatives").get<int>());
    }
    CHECK(row.aggregate.count("hits_at_50") == 1);
    CHECK(row.aggregate.count("hits_at_100") == 1);
  }
  CHECK(rows[0].config.at("method") == "lggnn_box");
  CHECK(rows[1].config.at("method") == "lggnn_pls");
  fs::remove_all(dir);
}

TEST_CASE("cora config and missing file") {
  CHECK_THROWS_AS(cora_config_from_json(json{{"bogus", 1}}), ConfigError);
  CoraConfig c = cora_config_from_json(json{{"path", "/nonexistent/cora.cites"}, {"seeds", {1}}});
  try {
    run_cora(c);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("/nonexistent/cora.cites") != std::string::npos);
    CHECK(msg.find("LGGNN_CORA_PATH") != std::string::npos);
  }
}

}  // TEST_SUITE
