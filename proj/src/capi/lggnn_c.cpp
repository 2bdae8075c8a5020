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
#include "lggnn/lggnn.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "common/errors.hpp"
#include "core/embedding.hpp"
#include "core/moment_estimates.hpp"
#include "eval/metrics.hpp"
#include "experiment/experiment.hpp"
#include "experiment/plot_data.hpp"
#include "graphon/graphon_model.hpp"
#include "graphon/graphon_spec_file.hpp"
#include "graphon/sampled_graph.hpp"
#include "json.hpp"
#include "regression/edge_regression.hpp"

struct lggnn_graphon {
  lggnn::GraphonModel model;
};
struct lggnn_graph {
  lggnn::SampledGraph graph;
};
struct lggnn_embedding {
  lggnn::EmbeddingTable table;
};
struct lggnn_moments {
  lggnn::MomentEstimates moments;
};
struct lggnn_fit {
  lggnn::RegressionFit fit;
};

namespace {

using nlohmann::json;

thread_local std::string g_last_error;

lggnn_status fail(lggnn_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
lggnn_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return LGGNN_OK;
  } catch (const lggnn::Error& e) {
    return fail(static_cast<lggnn_status>(e.code()), e.what());
  } catch (const json::exception& e) {
    return fail(LGGNN_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LGGNN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LGGNN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LGGNN_ERR_INTERNAL, "unknown error");
  }
}

#define LGGNN_REQUIRE(ptr)                                           \
  do {                                                               \
    if (!(ptr)) return fail(LGGNN_ERR_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lggnn::PairFilter all_pairs() {
  return [](int, int) { return true; };
}

}  // namespace

extern "C" {

const char* lggnn_version(void) { return LGGNN_VERSION_STRING; }

const char* lggnn_last_error(void) { return g_last_error.c_str(); }

const char* lggnn_status_name(lggnn_status status) {
  switch (status) {
    case LGGNN_OK: return "ok";
    case LGGNN_ERR_PARAMETER: return "parameter_error";
    case LGGNN_ERR_UNSUPPORTED_MODEL: return "unsupported_model";
    case LGGNN_ERR_SINGULAR_SYSTEM: return "singular_system";
    case LGGNN_ERR_EMPTY_DATA: return "empty_data";
    case LGGNN_ERR_PARSE: return "parse_error";
    case LGGNN_ERR_IO: return "io_error";
    case LGGNN_ERR_CONFIG: return "config_error";
    case LGGNN_ERR_UNSUPPORTED_ORDER: return "unsupported_order";
    case LGGNN_ERR_NULL_ARGUMENT: return "null_argument";
    case LGGNN_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

void lggnn_string_free(char* s) { std::free(s); }

lggnn_status lggnn_graphon_preset(const char* name, lggnn_graphon** out) {
  LGGNN_REQUIRE(name);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = new lggnn_graphon{lggnn::graphon_preset(name)}; });
}

lggnn_status lggnn_graphon_from_json(const char* text, lggnn_graphon** out) {
  LGGNN_REQUIRE(text);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = new lggnn_graphon{lggnn::graphon_from_text(text)}; });
}

lggnn_status lggnn_graphon_from_file(const char* path, lggnn_graphon** out) {
  LGGNN_REQUIRE(path);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = new lggnn_graphon{lggnn::graphon_from_file(path)}; });
}

void lggnn_graphon_free(lggnn_graphon* g) { delete g; }

lggnn_status lggnn_graphon_to_json(const lggnn_graphon* g, char** out_json) {
  LGGNN_REQUIRE(g);
  LGGNN_REQUIRE(out_json);
  return guard([&] { *out_json = dup_string(lggnn::graphon_to_json(g->model).dump()); });
}

lggnn_status lggnn_graphon_eval(const lggnn_graphon* g, double x, double y, double* out) {
  LGGNN_REQUIRE(g);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = g->model.eval(x, y); });
}

lggnn_status lggnn_graphon_moment(const lggnn_graphon* g, int k, double x, double y, double rho, double* out) {
  LGGNN_REQUIRE(g);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = lggnn::graphon_moment(g->model, k, x, y, rho).value; });
}

lggnn_status lggnn_graphon_spectrum_json(const lggnn_graphon* g, char** out_json) {
  LGGNN_REQUIRE(g);
  LGGNN_REQUIRE(out_json);
  return guard([&] {
    const auto spec = lggnn::sbm_spectrum(g->model);
    json doc;
    doc["eigenvalues"] = spec.eigenvalues;
    doc["eigenfunction_blocks"] = spec.eigenfunction_blocks;
    doc["distinct"] = spec.distinct;
    doc["multiplicity"] = spec.multiplicity;
    *out_json = dup_string(doc.dump());
  });
}

lggnn_status lggnn_graphon_beta_star(const lggnn_graphon* g, double* out, int capacity, int* out_len) {
  LGGNN_REQUIRE(g);
  LGGNN_REQUIRE(out_len);
  if (capacity > 0 && !out) return fail(LGGNN_ERR_NULL_ARGUMENT, "out is NULL");
  return guard([&] {
    const auto bs = lggnn::beta_star(lggnn::sbm_spectrum(g->model));
    *out_len = static_cast<int>(bs.beta.size());
    for (int i = 0; i < capacity && i < *out_len; ++i) out[i] = bs.beta[i];
  });
}

lggnn_status lggnn_graph_sample(const lggnn_graphon* g, int n, double rho, uint64_t seed, lggnn_graph** out) {
  LGGNN_REQUIRE(g);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = new lggnn_graph{lggnn::sample_graph(g->model, n, rho, seed)}; });
}

lggnn_status lggnn_graph_load(const char* path, lggnn_graph** out) {
  LGGNN_REQUIRE(path);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = new lggnn_graph{lggnn::load_edge_list(path)}; });
}

lggnn_status lggnn_graph_save(const lggnn_graph* graph, const char* path) {
  LGGNN_REQUIRE(graph);
  LGGNN_REQUIRE(path);
  return guard([&] { lggnn::save_edge_list(graph->graph, path); });
}

void lggnn_graph_free(lggnn_graph* graph) { delete graph; }

int lggnn_graph_n(const lggnn_graph* graph) { return graph ? graph->graph.n : 0; }

int64_t lggnn_graph_edge_count(const lggnn_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

double lggnn_graph_rho(const lggnn_graph* graph) { return graph ? graph->graph.rho : 0.0; }

int64_t lggnn_graph_self_loops_dropped(const lggnn_graph* graph) {
  return graph ? graph->graph.self_loops_dropped : 0;
}

int lggnn_graph_has_edge(const lggnn_graph* graph, int i, int j) {
  if (!graph || i < 0 || j < 0 || i >= graph->graph.n || j >= graph->graph.n) return 0;
  return graph->graph.has_edge(i, j) ? 1 : 0;
}

lggnn_status lggnn_embed(const lggnn_graph* graph, int L, int d, uint64_t seed, lggnn_embedding** out) {
  LGGNN_REQUIRE(graph);
  LGGNN_REQUIRE(out);
  return guard([&] {
    const int dim = d > 0 ? d : lggnn::default_dimension(graph->graph.rho);
    *out = new lggnn_embedding{lggnn::embed(graph->graph, L, dim, seed)};
  });
}

void lggnn_embedding_free(lggnn_embedding* emb) { delete emb; }

int lggnn_embedding_dim(const lggnn_embedding* emb) { return emb ? emb->table.d : 0; }

lggnn_status lggnn_embedding_row(const lggnn_embedding* emb, int layer, int vertex, double* out, int capacity) {
  LGGNN_REQUIRE(emb);
  LGGNN_REQUIRE(out);
  const auto& t = emb->table;
  if (layer < 0 || layer > t.L) return fail(LGGNN_ERR_PARAMETER, "layer out of range");
  if (vertex < 0 || vertex >= t.n) return fail(LGGNN_ERR_PARAMETER, "vertex out of range");
  if (capacity < t.d) return fail(LGGNN_ERR_PARAMETER, "capacity smaller than embedding dimension");
  for (int c = 0; c < t.d; ++c) out[c] = t.layers[layer](vertex, c);
  g_last_error.clear();
  return LGGNN_OK;
}

lggnn_status lggnn_embedding_write_csv(const lggnn_embedding* emb, const char* path) {
  LGGNN_REQUIRE(emb);
  LGGNN_REQUIRE(path);
  return guard([&] { lggnn::write_embedding_csv(emb->table, path); });
}

lggnn_status lggnn_moments_compute(const lggnn_embedding* emb, int symmetrize, lggnn_moments** out) {
  LGGNN_REQUIRE(emb);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = new lggnn_moments{lggnn::moment_estimates(emb->table, symmetrize != 0)}; });
}

void lggnn_moments_free(lggnn_moments* m) { delete m; }

lggnn_status lggnn_moments_get(const lggnn_moments* m, int i, int j, int k, double* out) {
  LGGNN_REQUIRE(m);
  LGGNN_REQUIRE(out);
  return guard([&] { *out = m->moments.q(i, j, k); });
}

lggnn_status lggnn_fit_box(const lggnn_moments* m, const lggnn_graph* graph, const double* b, double rho,
                           lggnn_fit** out) {
  LGGNN_REQUIRE(m);
  LGGNN_REQUIRE(graph);
  LGGNN_REQUIRE(out);
  return guard([&] {
    const int dim = m->moments.width();
    const auto space = b ? lggnn::SearchSpace::box(std::vector<double>(b, b + dim), rho)
                         : lggnn::default_box(dim, rho);
    const auto stats = lggnn::accumulate_stats(m->moments, graph->graph, all_pairs());
    *out = new lggnn_fit{lggnn::fit_box_constrained(stats, space)};
  });
}

lggnn_status lggnn_fit_l1(const lggnn_moments* m, const lggnn_graph* graph, double radius, lggnn_fit** out) {
  LGGNN_REQUIRE(m);
  LGGNN_REQUIRE(graph);
  LGGNN_REQUIRE(out);
  return guard([&] {
    const auto space = lggnn::SearchSpace::l1_ball(m->moments.width(), radius);
    const auto stats = lggnn::accumulate_stats(m->moments, graph->graph, all_pairs());
    *out = new lggnn_fit{lggnn::fit_box_constrained(stats, space)};
  });
}

lggnn_status lggnn_fit_pls(const lggnn_moments* m, const lggnn_graph* graph, int components, lggnn_fit** out) {
  LGGNN_REQUIRE(m);
  LGGNN_REQUIRE(graph);
  LGGNN_REQUIRE(out);
  return guard([&] {
    const int comps = components > 0 ? components : std::min(3, m->moments.width());
    *out = new lggnn_fit{lggnn::fit_pls(m->moments, graph->graph, comps, all_pairs())};
  });
}

void lggnn_fit_free(lggnn_fit* fit) { delete fit; }

lggnn_status lggnn_fit_to_json(const lggnn_fit* fit, char** out_json) {
  LGGNN_REQUIRE(fit);
  LGGNN_REQUIRE(out_json);
  return guard([&] { *out_json = dup_string(lggnn::fit_to_json(fit->fit).dump(2)); });
}

lggnn_status lggnn_fit_predict(const lggnn_fit* fit, const lggnn_moments* m, int i, int j, double* out) {
  LGGNN_REQUIRE(fit);
  LGGNN_REQUIRE(m);
  LGGNN_REQUIRE(out);
  return guard([&] {
    const int w = m->moments.width();
    if (static_cast<int>(fit->fit.beta.size()) != w)
      throw lggnn::ParameterError("fit and moments disagree on the number of layers");
    std::vector<double> q(w);
    for (int k = 0; k < w; ++k) q[k] = m->moments.q(i, j, k + 2);
    *out = lggnn::predict_row(fit->fit, q.data());
  });
}

lggnn_status lggnn_evaluate(const double* scores, const int* labels, const double* true_probs, size_t count,
                            const char* options_json, char** out_json) {
  LGGNN_REQUIRE(out_json);
  if (count > 0 && (!scores || !labels)) return fail(LGGNN_ERR_NULL_ARGUMENT, "scores or labels is NULL");
  return guard([&] {
    std::vector<int> hits_k{50, 100};
    std::vector<int> ratio_k{100};
    if (options_json && *options_json) {
      const json opts = json::parse(options_json);
      if (!opts.is_object()) throw lggnn::ConfigError("evaluation options must be an object");
      for (auto it = opts.begin(); it != opts.end(); ++it) {
        if (it.key() == "hits_k") hits_k = it.value().get<std::vector<int>>();
        else if (it.key() == "ratio_k") ratio_k = it.value().get<std::vector<int>>();
        else throw lggnn::ConfigError("unknown evaluation option '" + it.key() + "'");
      }
    }
    std::vector<double> s(scores, scores + count);
    std::vector<int> l(labels, labels + count);
    std::vector<double> tp;
    if (true_probs) tp.assign(true_probs, true_probs + count);
    else ratio_k.clear();
    const auto report = lggnn::evaluate(s, l, tp, hits_k, ratio_k);
    *out_json = dup_string(lggnn::report_to_json(report).dump(2));
  });
}

lggnn_status lggnn_experiment_run(const char* config_json, char** out_report_json) {
  LGGNN_REQUIRE(config_json);
  LGGNN_REQUIRE(out_report_json);
  return guard([&] {
    json doc;
    try {
      doc = json::parse(config_json);
    } catch (const json::exception& e) {
      throw lggnn::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    const auto cfg = lggnn::config_from_json(doc);
    const auto row = lggnn::run_experiment(cfg);
    *out_report_json = dup_string(lggnn::result_to_json(row).dump(2));
  });
}

lggnn_status lggnn_cora_run(const char* config_json, char** out_report_json) {
  LGGNN_REQUIRE(out_report_json);
  return guard([&] {
    json doc = json::object();
    if (config_json && *config_json) {
      try {
        doc = json::parse(config_json);
      } catch (const json::exception& e) {
        throw lggnn::ConfigError(std::string("config is not valid JSON: ") + e.what());
      }
    }
    auto cfg = lggnn::cora_config_from_json(doc);
    if (cfg.path.empty()) {
      if (const char* env = std::getenv("LGGNN_CORA_PATH")) cfg.path = env;
    }
    json out = json::array();
    for (const auto& row : lggnn::run_cora(cfg)) out.push_back(lggnn::result_to_json(row));
    *out_report_json = dup_string(out.dump(2));
  });
}

lggnn_status lggnn_plot_data(const char* reports_json, const char* kind, const char* metric, char** out_table) {
  LGGNN_REQUIRE(reports_json);
  LGGNN_REQUIRE(kind);
  LGGNN_REQUIRE(out_table);
  return guard([&] {
    const json doc = json::parse(reports_json);
    std::vector<json> reports;
    if (doc.is_array()) reports.assign(doc.begin(), doc.end());
    else reports.push_back(doc);
    const auto table =
        lggnn::emit_plot_data(reports, lggnn::plot_kind_from_string(kind), metric ? metric : "auc_roc");
    *out_table = dup_string(table);
  });
}

}  // extern "C"
