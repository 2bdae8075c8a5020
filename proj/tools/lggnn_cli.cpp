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
// lggnn-cli: command-line front end over the C API.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lggnn/lggnn.h"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct CliFailure {
  int code;
  std::string message;
};

int exit_code_for(lggnn_status s) {
  switch (s) {
    case LGGNN_ERR_CONFIG:
    case LGGNN_ERR_PARAMETER:
    case LGGNN_ERR_NULL_ARGUMENT:
      return kExitConfig;
    default:
      return kExitRuntime;
  }
}

void check(lggnn_status s) {
  if (s != LGGNN_OK) {
    throw CliFailure{exit_code_for(s), std::string(lggnn_status_name(s)) + ": " + lggnn_last_error()};
  }
}

struct CStringDeleter {
  void operator()(char* p) const { lggnn_string_free(p); }
};
using CString = std::unique_ptr<char, CStringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using Graphon = std::unique_ptr<lggnn_graphon, HandleDeleter<lggnn_graphon, lggnn_graphon_free>>;
using Graph = std::unique_ptr<lggnn_graph, HandleDeleter<lggnn_graph, lggnn_graph_free>>;
using Embedding = std::unique_ptr<lggnn_embedding, HandleDeleter<lggnn_embedding, lggnn_embedding_free>>;
using Moments = std::unique_ptr<lggnn_moments, HandleDeleter<lggnn_moments, lggnn_moments_free>>;
using Fit = std::unique_ptr<lggnn_fit, HandleDeleter<lggnn_fit, lggnn_fit_free>>;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitRuntime, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliFailure{kExitRuntime, "cannot write '" + out_path + "'"};
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    if (!out) throw CliFailure{kExitRuntime, "write failed for '" + out_path + "'"};
  }
  std::filesystem::rename(tmp, out_path);
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw CliFailure{kExitConfig, what + " is not valid JSON: " + e.what()};
  }
}

Graphon load_graphon(const std::string& model) {
  lggnn_graphon* g = nullptr;
  if (std::filesystem::exists(model)) check(lggnn_graphon_from_file(model.c_str(), &g));
  else if (!model.empty() && model.front() == '{') check(lggnn_graphon_from_json(model.c_str(), &g));
  else check(lggnn_graphon_preset(model.c_str(), &g));
  return Graphon(g);
}

Graph load_graph(const std::string& path) {
  lggnn_graph* g = nullptr;
  check(lggnn_graph_load(path.c_str(), &g));
  return Graph(g);
}

double resolve_rho(const std::string& mode, double fixed, int n) {
  if (mode == "one") return 1.0;
  if (mode == "inv_sqrt_n") return 1.0 / std::sqrt(static_cast<double>(n));
  if (mode == "log_n_over_n") return std::log(static_cast<double>(n)) / n;
  if (mode == "fixed") return fixed;
  throw CliFailure{kExitConfig, "unknown rho mode '" + mode + "'"};
}

// ---- generate ----

struct GenerateArgs {
  std::string model = "ssbm6";
  int n = 1000;
  std::string rho_mode = "one";
  std::optional<double> rho;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  auto model = load_graphon(a.model);
  const double rho = a.rho ? *a.rho : resolve_rho(a.rho_mode, 1.0, a.n);
  lggnn_graph* g = nullptr;
  check(lggnn_graph_sample(model.get(), a.n, rho, a.seed, &g));
  Graph graph(g);
  if (a.out.empty()) throw CliFailure{kExitConfig, "--out is required"};
  check(lggnn_graph_save(graph.get(), a.out.c_str()));
  std::cerr << "n=" << lggnn_graph_n(graph.get()) << " edges=" << lggnn_graph_edge_count(graph.get())
            << " rho=" << rho << "\n";
  return 0;
}

// ---- embed ----

struct EmbedArgs {
  std::string graph;
  int L = 2;
  int d = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int run_embed(const EmbedArgs& a) {
  auto graph = load_graph(a.graph);
  lggnn_embedding* e = nullptr;
  check(lggnn_embed(graph.get(), a.L, a.d, a.seed, &e));
  Embedding emb(e);
  if (a.out.empty()) throw CliFailure{kExitConfig, "--out is required"};
  check(lggnn_embedding_write_csv(emb.get(), a.out.c_str()));
  return 0;
}

// ---- fit ----

struct FitArgs {
  std::string graph;
  int L = 2;
  int d = 0;
  std::uint64_t seed = 1;
  std::string method = "box";
  std::vector<double> bounds;
  double radius = 0.0;
  int components = 0;
  bool raw = false;
  std::string out;
};

int run_fit(const FitArgs& a) {
  auto graph = load_graph(a.graph);
  lggnn_embedding* e = nullptr;
  check(lggnn_embed(graph.get(), a.L, a.d, a.seed, &e));
  Embedding emb(e);
  lggnn_moments* m = nullptr;
  check(lggnn_moments_compute(emb.get(), a.raw ? 0 : 1, &m));
  Moments moments(m);
  lggnn_fit* f = nullptr;
  if (a.method == "box") {
    if (!a.bounds.empty() && static_cast<int>(a.bounds.size()) != a.L + 1) {
      throw CliFailure{kExitConfig, "--bounds needs L+1 values"};
    }
    check(lggnn_fit_box(moments.get(), graph.get(), a.bounds.empty() ? nullptr : a.bounds.data(),
                        lggnn_graph_rho(graph.get()), &f));
  } else if (a.method == "l1") {
    if (a.radius <= 0.0) throw CliFailure{kExitConfig, "--radius must be positive for the l1 method"};
    check(lggnn_fit_l1(moments.get(), graph.get(), a.radius, &f));
  } else if (a.method == "pls") {
    check(lggnn_fit_pls(moments.get(), graph.get(), a.components, &f));
  } else {
    throw CliFailure{kExitConfig, "unknown fit method '" + a.method + "'"};
  }
  Fit fit(f);
  char* text = nullptr;
  check(lggnn_fit_to_json(fit.get(), &text));
  CString owned(text);
  emit(owned.get(), a.out);
  return 0;
}

// ---- eval ----

struct EvalArgs {
  std::string scores;
  std::vector<int> hits_k{50, 100};
  std::vector<int> ratio_k{100};
  std::string out;
};

// Rows "score,label[,true_prob]"; a non-numeric first row is a header.
int run_eval(const EvalArgs& a) {
  std::istringstream in(read_text(a.scores));
  std::vector<double> scores, probs;
  std::vector<int> labels;
  std::string line;
  int line_no = 0;
  int columns = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    try {
      const double s = std::stod(cells.at(0));
      const int l = std::stoi(cells.at(1));
      if (columns < 0) columns = static_cast<int>(cells.size());
      if (static_cast<int>(cells.size()) != columns) throw std::invalid_argument("column count");
      scores.push_back(s);
      labels.push_back(l);
      if (columns >= 3) probs.push_back(std::stod(cells[2]));
    } catch (const std::exception&) {
      if (scores.empty() && columns < 0 && line_no == 1) continue;
      throw CliFailure{kExitRuntime, a.scores + ":" + std::to_string(line_no) + ": malformed row"};
    }
  }
  json opts;
  opts["hits_k"] = a.hits_k;
  opts["ratio_k"] = a.ratio_k;
  char* text = nullptr;
  check(lggnn_evaluate(scores.data(), labels.data(), probs.empty() ? nullptr : probs.data(), scores.size(),
                       opts.dump().c_str(), &text));
  CString owned(text);
  emit(owned.get(), a.out);
  return 0;
}

// ---- experiment ----

struct ExperimentArgs {
  std::string config;
  std::optional<std::string> name, model, graph_file, rho_mode, d_policy, method, protocol, output_dir, bounds;
  std::optional<int> n, L, pls_components;
  std::optional<double> rho, p, negative_ratio;
  std::optional<bool> keep_connected, save_predictions;
  std::vector<int> hits_k, ratio_k;
  std::vector<std::uint64_t> seeds;
  std::string out;
};

json value_or_string(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::exception&) {
    return s;
  }
}

int run_experiment_verb(const ExperimentArgs& a) {
  json cfg = a.config.empty() ? json::object() : parse_json(read_text(a.config), a.config);
  if (!cfg.is_object()) throw CliFailure{kExitConfig, "config must be a JSON object"};
  if (a.name) cfg["name"] = *a.name;
  if (a.model) cfg["model"] = value_or_string(*a.model);
  if (a.graph_file) cfg["graph_file"] = *a.graph_file;
  if (a.n) cfg["n"] = *a.n;
  if (a.rho_mode) cfg["rho_mode"] = *a.rho_mode;
  if (a.rho) cfg["rho"] = *a.rho;
  if (a.L) cfg["L"] = *a.L;
  if (a.d_policy) cfg["d_policy"] = value_or_string(*a.d_policy);
  if (a.method) cfg["method"] = *a.method;
  if (a.protocol) cfg["protocol"] = *a.protocol;
  if (a.p) cfg["p"] = *a.p;
  if (a.negative_ratio) cfg["negative_ratio"] = *a.negative_ratio;
  if (a.keep_connected) cfg["keep_connected"] = *a.keep_connected;
  if (!a.hits_k.empty()) cfg["hits_k"] = a.hits_k;
  if (!a.ratio_k.empty()) cfg["ratio_k"] = a.ratio_k;
  if (!a.seeds.empty()) cfg["seeds"] = a.seeds;
  if (a.output_dir) cfg["output_dir"] = *a.output_dir;
  if (a.bounds) cfg["bounds"] = value_or_string(*a.bounds);
  if (a.pls_components) cfg["pls_components"] = *a.pls_components;
  if (a.save_predictions) cfg["save_predictions"] = *a.save_predictions;
  if (cfg.contains("output_dir")) std::filesystem::create_directories(cfg["output_dir"].get<std::string>());

  char* text = nullptr;
  check(lggnn_experiment_run(cfg.dump().c_str(), &text));
  CString owned(text);
  emit(owned.get(), a.out);

  const json report = json::parse(owned.get());
  int failed = 0;
  for (const auto& s : report.value("seeds", json::array())) {
    if (!s.value("ok", false)) {
      ++failed;
      std::cerr << "seed " << s.value("seed", 0) << " failed: " << s.value("error", "") << "\n";
    }
  }
  const int total = static_cast<int>(report.value("seeds", json::array()).size());
  return failed == total && total > 0 ? kExitRuntime : 0;
}

// ---- cora ----

struct CoraArgs {
  std::string config;
  std::optional<std::string> path, output_dir;
  std::vector<int> layers;
  std::vector<std::string> methods;
  std::vector<std::uint64_t> seeds;
  std::string out;
};

int run_cora_verb(const CoraArgs& a) {
  json cfg = a.config.empty() ? json::object() : parse_json(read_text(a.config), a.config);
  if (!cfg.is_object()) throw CliFailure{kExitConfig, "config must be a JSON object"};
  if (a.path) cfg["path"] = *a.path;
  if (a.output_dir) {
    cfg["output_dir"] = *a.output_dir;
    std::filesystem::create_directories(*a.output_dir);
  }
  if (!a.layers.empty()) cfg["layers"] = a.layers;
  if (!a.methods.empty()) cfg["methods"] = a.methods;
  if (!a.seeds.empty()) cfg["seeds"] = a.seeds;
  char* text = nullptr;
  check(lggnn_cora_run(cfg.dump().c_str(), &text));
  CString owned(text);
  emit(owned.get(), a.out);
  return 0;
}

// ---- plot-data ----

struct PlotArgs {
  std::string kind = "metric_vs_n";
  std::string metric = "auc_roc";
  std::vector<std::string> reports;
  std::string out;
};

int run_plot(const PlotArgs& a) {
  json all = json::array();
  for (const auto& path : a.reports) {
    json doc = parse_json(read_text(path), path);
    if (doc.is_array()) {
      for (auto& r : doc) all.push_back(std::move(r));
    } else {
      all.push_back(std::move(doc));
    }
  }
  char* text = nullptr;
  check(lggnn_plot_data(all.dump().c_str(), a.kind.c_str(), a.metric.c_str(), &text));
  CString owned(text);
  emit(owned.get(), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphon link prediction with linear random-feature GNNs"};
  app.set_version_flag("--version", std::string(lggnn_version()));
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "Sample a graph from a graphon and write an edge list");
  c_gen->add_option("--model", gen.model, "Preset name, graphon JSON file, or inline JSON")->capture_default_str();
  c_gen->add_option("--n", gen.n, "Number of vertices")->capture_default_str();
  c_gen->add_option("--rho-mode", gen.rho_mode, "one | inv_sqrt_n | log_n_over_n")->capture_default_str();
  c_gen->add_option("--rho", gen.rho, "Fixed sparsity factor (overrides --rho-mode)");
  c_gen->add_option("--seed", gen.seed)->capture_default_str();
  c_gen->add_option("--out,-o", gen.out, "Edge list path")->required();

  EmbedArgs emb;
  auto* c_emb = app.add_subcommand("embed", "Compute LG-GNN embeddings for an edge list");
  c_emb->add_option("--graph,-g", emb.graph, "Edge list")->required();
  c_emb->add_option("--layers,-L", emb.L)->capture_default_str();
  c_emb->add_option("--dim,-d", emb.d, "Feature dimension (0: max(64, ceil(4/rho)))")->capture_default_str();
  c_emb->add_option("--seed", emb.seed)->capture_default_str();
  c_emb->add_option("--out,-o", emb.out, "CSV path")->required();

  FitArgs fit;
  auto* c_fit = app.add_subcommand("fit", "Fit edge-probability regression over all pairs of a graph");
  c_fit->add_option("--graph,-g", fit.graph, "Edge list")->required();
  c_fit->add_option("--layers,-L", fit.L)->capture_default_str();
  c_fit->add_option("--dim,-d", fit.d)->capture_default_str();
  c_fit->add_option("--seed", fit.seed)->capture_default_str();
  c_fit->add_option("--method", fit.method, "box | l1 | pls")->capture_default_str();
  c_fit->add_option("--bounds", fit.bounds, "Box bounds b_0..b_L")->delimiter(',');
  c_fit->add_option("--radius", fit.radius, "l1-ball radius");
  c_fit->add_option("--components", fit.components, "PLS components (0: min(3, L+1))");
  c_fit->add_flag("--raw", fit.raw, "Use unsymmetrized moment estimates");
  c_fit->add_option("--out,-o", fit.out, "JSON path (default stdout)");

  EvalArgs ev;
  auto* c_eval = app.add_subcommand("eval", "Compute link-prediction metrics from a score file");
  c_eval->add_option("--scores", ev.scores, "CSV rows score,label[,true_prob]")->required();
  c_eval->add_option("--hits-k", ev.hits_k)->delimiter(',');
  c_eval->add_option("--ratio-k", ev.ratio_k)->delimiter(',');
  c_eval->add_option("--out,-o", ev.out);

  ExperimentArgs ex;
  auto* c_ex = app.add_subcommand("experiment", "Run a configured experiment across seeds");
  c_ex->add_option("--config,-c", ex.config, "Experiment config JSON");
  c_ex->add_option("--name", ex.name);
  c_ex->add_option("--model", ex.model);
  c_ex->add_option("--graph-file", ex.graph_file);
  c_ex->add_option("--n", ex.n);
  c_ex->add_option("--rho-mode", ex.rho_mode);
  c_ex->add_option("--rho", ex.rho);
  c_ex->add_option("--layers,-L", ex.L);
  c_ex->add_option("--d-policy", ex.d_policy, "default | n | integer");
  c_ex->add_option("--method", ex.method, "lggnn_box | lggnn_pls | gcn_untrained");
  c_ex->add_option("--protocol", ex.protocol, "in_sample | out_sample");
  c_ex->add_option("--p", ex.p);
  c_ex->add_option("--negative-ratio", ex.negative_ratio);
  c_ex->add_option("--keep-connected", ex.keep_connected);
  c_ex->add_option("--hits-k", ex.hits_k)->delimiter(',');
  c_ex->add_option("--ratio-k", ex.ratio_k)->delimiter(',');
  c_ex->add_option("--seeds", ex.seeds)->delimiter(',');
  c_ex->add_option("--output-dir", ex.output_dir);
  c_ex->add_option("--bounds", ex.bounds, "default | spectrum | JSON array | JSON object");
  c_ex->add_option("--pls-components", ex.pls_components);
  c_ex->add_option("--save-predictions", ex.save_predictions);
  c_ex->add_option("--out,-o", ex.out, "Report JSON path (default stdout)");

  CoraArgs co;
  auto* c_cora = app.add_subcommand("cora", "Run the Cora topology-only experiment");
  c_cora->add_option("--config,-c", co.config);
  c_cora->add_option("--path", co.path, "Cora edge list (default: $LGGNN_CORA_PATH)");
  c_cora->add_option("--layers", co.layers)->delimiter(',');
  c_cora->add_option("--methods", co.methods)->delimiter(',');
  c_cora->add_option("--seeds", co.seeds)->delimiter(',');
  c_cora->add_option("--output-dir", co.output_dir);
  c_cora->add_option("--out,-o", co.out);

  PlotArgs pl;
  auto* c_plot = app.add_subcommand("plot-data", "Emit a plain-text table from experiment reports");
  c_plot->add_option("--kind", pl.kind, "metric_vs_n | spread_vs_n | histogram")->capture_default_str();
  c_plot->add_option("--metric", pl.metric)->capture_default_str();
  c_plot->add_option("reports", pl.reports, "Report JSON files")->required();
  c_plot->add_option("--out,-o", pl.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*c_gen) return run_generate(gen);
    if (*c_emb) return run_embed(emb);
    if (*c_fit) return run_fit(fit);
    if (*c_eval) return run_eval(ev);
    if (*c_ex) return run_experiment_verb(ex);
    if (*c_cora) return run_cora_verb(co);
    if (*c_plot) return run_plot(pl);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
