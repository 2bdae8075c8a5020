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
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lggnn/lggnn.h"

extern "C" int lggnn_c_header_check(void);

using nlohmann::json;

namespace {

json take_json(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  lggnn_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("header usable from C") { CHECK(lggnn_c_header_check() == 0); }

TEST_CASE("version and status names") {
  CHECK(std::string(lggnn_version()).size() > 0);
  CHECK(std::string(lggnn_status_name(LGGNN_OK)) != std::string(lggnn_status_name(LGGNN_ERR_IO)));
  CHECK(lggnn_status_name(static_cast<lggnn_status>(999)) != nullptr);
}

TEST_CASE("null arguments are reported") {
  lggnn_graphon* g = nullptr;
  CHECK(lggnn_graphon_preset(nullptr, &g) == LGGNN_ERR_NULL_ARGUMENT);
  CHECK(lggnn_graphon_preset("ssbm6", nullptr) == LGGNN_ERR_NULL_ARGUMENT);
  CHECK(std::string(lggnn_last_error()).size() > 0);
  double v = 0.0;
  CHECK(lggnn_graphon_eval(nullptr, 0.1, 0.2, &v) == LGGNN_ERR_NULL_ARGUMENT);
  char* s = nullptr;
  CHECK(lggnn_experiment_run(nullptr, &s) == LGGNN_ERR_NULL_ARGUMENT);
  // Free functions accept NULL.
  lggnn_graphon_free(nullptr);
  lggnn_graph_free(nullptr);
  lggnn_embedding_free(nullptr);
  lggnn_moments_free(nullptr);
  lggnn_fit_free(nullptr);
  lggnn_string_free(nullptr);
}

TEST_CASE("error codes map from core errors") {
  lggnn_graphon* g = nullptr;
  CHECK(lggnn_graphon_preset("no_such_model", &g) == LGGNN_ERR_UNSUPPORTED_MODEL);
  CHECK(g == nullptr);
  CHECK(std::string(lggnn_last_error()).find("no_such_model") != std::string::npos);
  CHECK(lggnn_graphon_from_json("{not json", &g) == LGGNN_ERR_PARSE);
  CHECK(lggnn_graphon_from_file("/nonexistent/graphon.json", &g) == LGGNN_ERR_IO);

  REQUIRE(lggnn_graphon_preset("ssbm6", &g) == LGGNN_OK);
  double v = 0.0;
  CHECK(lggnn_graphon_eval(g, 1.5, 0.2, &v) == LGGNN_ERR_PARAMETER);
  lggnn_graph* graph = nullptr;
  CHECK(lggnn_graph_sample(g, 10, 0.0, 1, &graph) == LGGNN_ERR_PARAMETER);
  CHECK(lggnn_graph_load("/nonexistent/file.edges", &graph) == LGGNN_ERR_IO);
  char* out = nullptr;
  CHECK(lggnn_experiment_run("{\"bogus\": 1}", &out) == LGGNN_ERR_CONFIG);
  CHECK(lggnn_experiment_run("not json", &out) == LGGNN_ERR_CONFIG);
  CHECK(out == nullptr);
  lggnn_graphon_free(g);
}

TEST_CASE("graphon moments and beta star") {
  lggnn_graphon* g = nullptr;
  REQUIRE(lggnn_graphon_from_json(R"({"kind": "sbm", "P": [[0.5, 0.25], [0.25, 0.75]]})", &g) == LGGNN_OK);
  double m = 0.0;
  REQUIRE(lggnn_graphon_moment(g, 2, 0.1, 0.2, 1.0, &m) == LGGNN_OK);
  CHECK(std::abs(m - 5.0 / 32.0) < 1e-12);
  REQUIRE(lggnn_graphon_moment(g, 2, 0.7, 0.9, 1.0, &m) == LGGNN_OK);
  CHECK(std::abs(m - 5.0 / 16.0) < 1e-12);
  lggnn_graphon_free(g);

  REQUIRE(lggnn_graphon_preset("ssbm6", &g) == LGGNN_OK);
  int len = 0;
  REQUIRE(lggnn_graphon_beta_star(g, nullptr, 0, &len) == LGGNN_OK);
  REQUIRE(len == 2);
  double beta[2] = {0.0, 0.0};
  REQUIRE(lggnn_graphon_beta_star(g, beta, 2, &len) == LGGNN_OK);
  CHECK(std::abs(beta[0] - 40.0 / 3.0) < 1e-8);
  CHECK(std::abs(beta[1] + 100.0 / 3.0) < 1e-8);

  char* spec = nullptr;
  REQUIRE(lggnn_graphon_spectrum_json(g, &spec) == LGGNN_OK);
  json sj = take_json(spec);
  CHECK(sj.dump().find("0.3") != std::string::npos);

  char* doc = nullptr;
  REQUIRE(lggnn_graphon_to_json(g, &doc) == LGGNN_OK);
  json gj = take_json(doc);
  CHECK(gj.at("kind") == "ssbm");
  lggnn_graphon_free(g);
}

TEST_CASE("graph, embedding, moments and fits") {
  lggnn_graphon* g = nullptr;
  REQUIRE(lggnn_graphon_preset("ssbm6", &g) == LGGNN_OK);
  lggnn_graph* graph = nullptr;
  REQUIRE(lggnn_graph_sample(g, 120, 1.0, 5, &graph) == LGGNN_OK);
  CHECK(lggnn_graph_n(graph) == 120);
  CHECK(lggnn_graph_edge_count(graph) > 0);
  CHECK(lggnn_graph_rho(graph) == 1.0);
  CHECK(lggnn_graph_has_edge(graph, 0, 0) == 0);
  CHECK(lggnn_graph_has_edge(graph, 3, 7) == lggnn_graph_has_edge(graph, 7, 3));

  lggnn_graph* again = nullptr;
  REQUIRE(lggnn_graph_sample(g, 120, 1.0, 5, &again) == LGGNN_OK);
  CHECK(lggnn_graph_edge_count(again) == lggnn_graph_edge_count(graph));
  lggnn_graph_free(again);

  const std::string tmp = "lggnn_capi_roundtrip.edges";
  REQUIRE(lggnn_graph_save(graph, tmp.c_str()) == LGGNN_OK);
  lggnn_graph* loaded = nullptr;
  REQUIRE(lggnn_graph_load(tmp.c_str(), &loaded) == LGGNN_OK);
  CHECK(lggnn_graph_edge_count(loaded) == lggnn_graph_edge_count(graph));
  lggnn_graph_free(loaded);
  std::remove(tmp.c_str());

  lggnn_embedding* emb = nullptr;
  REQUIRE(lggnn_embed(graph, 1, 64, 3, &emb) == LGGNN_OK);
  CHECK(lggnn_embedding_dim(emb) == 64);
  std::vector<double> row(64);
  REQUIRE(lggnn_embedding_row(emb, 1, 0, row.data(), 64) == LGGNN_OK);
  CHECK(lggnn_embedding_row(emb, 5, 0, row.data(), 64) == LGGNN_ERR_PARAMETER);

  lggnn_moments* m = nullptr;
  REQUIRE(lggnn_moments_compute(emb, 1, &m) == LGGNN_OK);
  double a = 0.0, b = 0.0;
  REQUIRE(lggnn_moments_get(m, 2, 9, 2, &a) == LGGNN_OK);
  REQUIRE(lggnn_moments_get(m, 9, 2, 2, &b) == LGGNN_OK);
  CHECK(a == b);
  CHECK(lggnn_moments_get(m, 4, 4, 2, &a) == LGGNN_ERR_PARAMETER);

  lggnn_fit* fit = nullptr;
  const double bounds[2] = {15.0, 40.0};
  REQUIRE(lggnn_fit_box(m, graph, bounds, 1.0, &fit) == LGGNN_OK);
  char* fj = nullptr;
  REQUIRE(lggnn_fit_to_json(fit, &fj) == LGGNN_OK);
  json fit_doc = take_json(fj);
  CHECK(fit_doc.at("kkt").at("ok").get<bool>());
  CHECK(fit_doc.at("beta").size() == 2);
  double p = 0.0;
  REQUIRE(lggnn_fit_predict(fit, m, 0, 1, &p) == LGGNN_OK);
  CHECK(std::isfinite(p));
  lggnn_fit_free(fit);

  REQUIRE(lggnn_fit_l1(m, graph, 10.0, &fit) == LGGNN_OK);
  REQUIRE(lggnn_fit_to_json(fit, &fj) == LGGNN_OK);
  fit_doc = take_json(fj);
  double l1 = 0.0;
  for (double x : fit_doc.at("beta").get<std::vector<double>>()) l1 += std::abs(x);
  CHECK(l1 <= 10.0 + 1e-9);
  lggnn_fit_free(fit);

  REQUIRE(lggnn_fit_pls(m, graph, 0, &fit) == LGGNN_OK);
  REQUIRE(lggnn_fit_to_json(fit, &fj) == LGGNN_OK);
  CHECK(take_json(fj).at("method") == "pls");
  lggnn_fit_free(fit);

  lggnn_moments_free(m);
  lggnn_embedding_free(emb);
  lggnn_graph_free(graph);
  lggnn_graphon_free(g);
}

TEST_CASE("evaluate through the C API") {
  const double scores[4] = {0.9, 0.8, 0.3, 0.1};
  const int labels[4] = {1, 0, 1, 0};
  char* out = nullptr;
  REQUIRE(lggnn_evaluate(scores, labels, nullptr, 4, R"({"hits_k": [1]})", &out) == LGGNN_OK);
  json r = take_json(out);
  CHECK(r.at("auc_roc").get<double>() == doctest::Approx(0.75));
  CHECK(lggnn_evaluate(scores, labels, nullptr, 4, R"({"k": [1]})", &out) == LGGNN_ERR_CONFIG);
  CHECK(lggnn_evaluate(nullptr, labels, nullptr, 4, nullptr, &out) == LGGNN_ERR_NULL_ARGUMENT);
}

TEST_CASE("experiment and plot data through the C API") {
  const char* cfg = R"({"model": "ssbm6", "n": 150, "L": 1, "d_policy": 32, "seeds": [1, 2],
                        "hits_k": [10], "ratio_k": [20]})";
  char* out = nullptr;
  REQUIRE(lggnn_experiment_run(cfg, &out) == LGGNN_OK);
  const std::string text = out;
  json rep = take_json(out);
  CHECK(rep.at("seeds").size() == 2);
  CHECK(rep.at("aggregate").contains("auc_roc"));

  char* table = nullptr;
  REQUIRE(lggnn_plot_data(text.c_str(), "metric_vs_n", "auc_roc", &table) == LGGNN_OK);
  CHECK(std::string(table).find("150") != std::string::npos);
  lggnn_string_free(table);
  CHECK(lggnn_plot_data(text.c_str(), "pie", "auc_roc", &table) == LGGNN_ERR_CONFIG);

  CHECK(lggnn_cora_run(R"({"path": "/nonexistent/cora.cites"})", &out) == LGGNN_ERR_IO);
  CHECK(std::string(lggnn_last_error()).find("LGGNN_CORA_PATH") != std::string::npos);
}
