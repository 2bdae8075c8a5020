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
#ifndef LGGNN_LGGNN_H
#define LGGNN_LGGNN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LGGNN_BUILDING_LIBRARY)
#    define LGGNN_API __declspec(dllexport)
#  else
#    define LGGNN_API __declspec(dllimport)
#  endif
#else
#  define LGGNN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lggnn_status {
  LGGNN_OK = 0,
  LGGNN_ERR_PARAMETER = 1,
  LGGNN_ERR_UNSUPPORTED_MODEL = 2,
  LGGNN_ERR_SINGULAR_SYSTEM = 3,
  LGGNN_ERR_EMPTY_DATA = 4,
  LGGNN_ERR_PARSE = 5,
  LGGNN_ERR_IO = 6,
  LGGNN_ERR_CONFIG = 7,
  LGGNN_ERR_UNSUPPORTED_ORDER = 8,
  LGGNN_ERR_NULL_ARGUMENT = 9,
  LGGNN_ERR_INTERNAL = 10
} lggnn_status;

typedef struct lggnn_graphon lggnn_graphon;
typedef struct lggnn_graph lggnn_graph;
typedef struct lggnn_embedding lggnn_embedding;
typedef struct lggnn_moments lggnn_moments;
typedef struct lggnn_fit lggnn_fit;

LGGNN_API const char* lggnn_version(void);
/* Message of the last failed call on this thread; empty after success. */
LGGNN_API const char* lggnn_last_error(void);
LGGNN_API const char* lggnn_status_name(lggnn_status status);
/* Frees strings returned through char** out-parameters. */
LGGNN_API void lggnn_string_free(char* s);

/* Graphons */
LGGNN_API lggnn_status lggnn_graphon_preset(const char* name, lggnn_graphon** out);
LGGNN_API lggnn_status lggnn_graphon_from_json(const char* json, lggnn_graphon** out);
LGGNN_API lggnn_status lggnn_graphon_from_file(const char* path, lggnn_graphon** out);
LGGNN_API void lggnn_graphon_free(lggnn_graphon* g);
LGGNN_API lggnn_status lggnn_graphon_to_json(const lggnn_graphon* g, char** out_json);
LGGNN_API lggnn_status lggnn_graphon_eval(const lggnn_graphon* g, double x, double y, double* out);
/* Exact block-model moment rho^k W^(k)(x, y). */
LGGNN_API lggnn_status lggnn_graphon_moment(const lggnn_graphon* g, int k, double x, double y, double rho,
                                            double* out);
/* {"eigenvalues": [...], "eigenfunction_blocks": [[...]], "distinct": [...], "multiplicity": [...]} */
LGGNN_API lggnn_status lggnn_graphon_spectrum_json(const lggnn_graphon* g, char** out_json);
/* Writes up to `capacity` coefficients; *out_len receives m_W. */
LGGNN_API lggnn_status lggnn_graphon_beta_star(const lggnn_graphon* g, double* out, int capacity, int* out_len);

/* Graphs */
LGGNN_API lggnn_status lggnn_graph_sample(const lggnn_graphon* g, int n, double rho, uint64_t seed,
                                          lggnn_graph** out);
LGGNN_API lggnn_status lggnn_graph_load(const char* path, lggnn_graph** out);
LGGNN_API lggnn_status lggnn_graph_save(const lggnn_graph* graph, const char* path);
LGGNN_API void lggnn_graph_free(lggnn_graph* graph);
LGGNN_API int lggnn_graph_n(const lggnn_graph* graph);
LGGNN_API int64_t lggnn_graph_edge_count(const lggnn_graph* graph);
LGGNN_API double lggnn_graph_rho(const lggnn_graph* graph);
LGGNN_API int64_t lggnn_graph_self_loops_dropped(const lggnn_graph* graph);
LGGNN_API int lggnn_graph_has_edge(const lggnn_graph* graph, int i, int j);

/* Embeddings; d <= 0 selects max(64, ceil(4/rho)). */
LGGNN_API lggnn_status lggnn_embed(const lggnn_graph* graph, int L, int d, uint64_t seed, lggnn_embedding** out);
LGGNN_API void lggnn_embedding_free(lggnn_embedding* emb);
LGGNN_API int lggnn_embedding_dim(const lggnn_embedding* emb);
LGGNN_API lggnn_status lggnn_embedding_row(const lggnn_embedding* emb, int layer, int vertex, double* out,
                                           int capacity);
LGGNN_API lggnn_status lggnn_embedding_write_csv(const lggnn_embedding* emb, const char* path);

/* Moment estimators */
LGGNN_API lggnn_status lggnn_moments_compute(const lggnn_embedding* emb, int symmetrize, lggnn_moments** out);
LGGNN_API void lggnn_moments_free(lggnn_moments* m);
/* k is the moment order, 2..L+2. */
LGGNN_API lggnn_status lggnn_moments_get(const lggnn_moments* m, int i, int j, int k, double* out);

/* Fits over all vertex pairs of `graph`. b has L+1 entries; NULL uses 2. */
LGGNN_API lggnn_status lggnn_fit_box(const lggnn_moments* m, const lggnn_graph* graph, const double* b,
                                     double rho, lggnn_fit** out);
LGGNN_API lggnn_status lggnn_fit_l1(const lggnn_moments* m, const lggnn_graph* graph, double radius,
                                    lggnn_fit** out);
/* components <= 0 selects min(3, L+1). */
LGGNN_API lggnn_status lggnn_fit_pls(const lggnn_moments* m, const lggnn_graph* graph, int components,
                                     lggnn_fit** out);
LGGNN_API void lggnn_fit_free(lggnn_fit* fit);
LGGNN_API lggnn_status lggnn_fit_to_json(const lggnn_fit* fit, char** out_json);
LGGNN_API lggnn_status lggnn_fit_predict(const lggnn_fit* fit, const lggnn_moments* m, int i, int j, double* out);

/* Metrics; true_probs may be NULL. options: {"hits_k": [...], "ratio_k": [...]} or NULL. */
LGGNN_API lggnn_status lggnn_evaluate(const double* scores, const int* labels, const double* true_probs,
                                      size_t count, const char* options_json, char** out_json);

/* Experiments */
LGGNN_API lggnn_status lggnn_experiment_run(const char* config_json, char** out_report_json);
LGGNN_API lggnn_status lggnn_cora_run(const char* config_json, char** out_report_json);
/* reports_json is an array of reports; kind is metric_vs_n, spread_vs_n or histogram. */
LGGNN_API lggnn_status lggnn_plot_data(const char* reports_json, const char* kind, const char* metric,
                                       char** out_table);

#ifdef __cplusplus
}
#endif

#endif /* LGGNN_LGGNN_H */
