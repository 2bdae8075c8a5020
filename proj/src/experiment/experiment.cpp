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
#include "experiment/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "common/errors.hpp"
#include "core/moment_estimates.hpp"
#include "eval/metrics.hpp"
#include "graphon/graphon_spec_file.hpp"
#include "graphon/sampled_graph.hpp"
#include "regression/edge_regression.hpp"

namespace lggnn {

using nlohmann::json;

const char* to_string(Method m) {
  switch (m) {
    case Method::kLggnnBox: return "lggnn_box";
    case Method::kLggnnPls: return "lggnn_pls";
    case Method::kGcnUntrained: return "gcn_untrained";
  }
  return "unknown";
}

const char* to_string(RhoMode m) {
  switch (m) {
    case RhoMode::kOne: return "one";
    case RhoMode::kInvSqrtN: return "inv_sqrt_n";
    case RhoMode::kLogNOverN: return "log_n_over_n";
    case RhoMode::kFixed: return "fixed";
  }
  return "unknown";
}

double resolve_rho(RhoMode mode, int n, double fixed) {
  if (n < 2) throw ParameterError("n must be >= 2");
  double rho = 1.0;
  switch (mode) {
    case RhoMode::kOne: rho = 1.0; break;
    case RhoMode::kInvSqrtN: rho = 1.0 / std::sqrt(static_cast<double>(n)); break;
    case RhoMode::kLogNOverN: rho = std::log(static_cast<double>(n)) / n; break;
    case RhoMode::kFixed: rho = fixed; break;
  }
  if (!(rho > 0.0 && rho <= 1.0)) throw ConfigError("rho resolves outside (0,1]");
  return rho;
}

namespace {

Method method_from_string(const std::string& s) {
  if (s == "lggnn_box") return Method::kLggnnBox;
  if (s == "lggnn_pls") return Method::kLggnnPls;
  if (s == "gcn_untrained") return Method::kGcnUntrained;
  throw ConfigError("unknown method '" + s + "'");
}

RhoMode rho_mode_from_string(const std::string& s) {
  if (s == "one") return RhoMode::kOne;
  if (s == "inv_sqrt_n") return RhoMode::kInvSqrtN;
  if (s == "log_n_over_n") return RhoMode::kLogNOverN;
  if (s == "fixed") return RhoMode::kFixed;
  throw ConfigError("unknown rho_mode '" + s + "'");
}

SplitProtocol protocol_from_string(const std::string& s) {
  if (s == "in_sample") return SplitProtocol::kInSample;
  if (s == "out_sample") return SplitProtocol::kOutSample;
  throw ConfigError("unknown protocol '" + s + "'");
}

GraphonModel resolve_model(const json& spec) {
  if (spec.is_string()) return graphon_resolve(spec.get<std::string>());
  if (spec.is_object()) return graphon_from_json(spec);
  throw ConfigError("'model' must be a preset name, a file path or an object");
}

int resolve_dimension(const json& policy, int n, double rho) {
  if (policy.is_string()) {
    const auto s = policy.get<std::string>();
    if (s == "default") return default_dimension(rho);
    if (s == "n") return n;
    throw ConfigError("unknown d_policy '" + s + "'");
  }
  if (policy.is_number_integer() && policy.get<int>() >= 1) return policy.get<int>();
  throw ConfigError("d_policy must be \"default\", \"n\" or a positive integer");
}

SearchSpace resolve_space(const json& bounds, const std::optional<SpectralDecomposition>& spec, int n_coef,
                          double rho) {
  if (bounds.is_string()) {
    const auto s = bounds.get<std::string>();
    if (s == "default") return default_box(n_coef, rho);
    if (s == "spectrum") return spec ? spectrum_box(*spec, n_coef, rho) : default_box(n_coef, rho);
    throw ConfigError("unknown bounds '" + s + "'");
  }
  if (bounds.is_array()) {
    auto b = bounds.get<std::vector<double>>();
    if (static_cast<int>(b.size()) != n_coef) throw ConfigError("bounds must have L+1 entries");
    return SearchSpace::box(std::move(b), rho);
  }
  if (bounds.is_object() && bounds.contains("l1_radius")) {
    const json& r = bounds.at("l1_radius");
    if (r.is_string() && r.get<std::string>() == "spectrum") {
      if (!spec) throw ConfigError("l1_radius \"spectrum\" needs a block model");
      return spectrum_l1_ball(*spec, n_coef, rho);
    }
    return SearchSpace::l1_ball(n_coef, r.get<double>(), rho);
  }
  throw ConfigError("bad 'bounds' entry");
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("experiment config must be an object");
  ExperimentConfig c;
  try {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const std::string& k = it.key();
      const json& v = it.value();
      if (k == "name") c.name = v.get<std::string>();
      else if (k == "model") c.model = v;
      else if (k == "graph_file") c.graph_file = v.get<std::string>();
      else if (k == "n") c.n = v.get<int>();
      else if (k == "rho_mode") c.rho_mode = rho_mode_from_string(v.get<std::string>());
      else if (k == "rho") { c.rho = v.get<double>(); c.rho_mode = RhoMode::kFixed; }
      else if (k == "L") c.L = v.get<int>();
      else if (k == "d_policy") c.d_policy = v;
      else if (k == "method") c.method = method_from_string(v.get<std::string>());
      else if (k == "protocol") c.protocol = protocol_from_string(v.get<std::string>());
      else if (k == "p") c.p = v.get<double>();
      else if (k == "negative_ratio") c.negative_ratio = v.get<double>();
      else if (k == "keep_connected") c.keep_connected = v.get<bool>();
      else if (k == "hits_k") c.hits_k = v.get<std::vector<int>>();
      else if (k == "ratio_k") c.ratio_k = v.get<std::vector<int>>();
      else if (k == "seeds") c.seeds = v.get<std::vector<std::uint64_t>>();
      else if (k == "output_dir") c.output_dir = v.get<std::string>();
      else if (k == "bounds") c.bounds = v;
      else if (k == "pls_components") c.pls_components = v.get<int>();
      else if (k == "symmetrize") c.symmetrize = v.get<bool>();
      else if (k == "save_predictions") c.save_predictions = v.get<bool>();
      else if (k == "gcn") {
        if (v.contains("d")) c.gcn.d = v.at("d").get<int>();
        if (v.contains("activation")) {
          auto a = v.at("activation").get<std::string>();
          if (a == "identity") c.gcn.activation = Activation::kIdentity;
          else if (a == "relu") c.gcn.activation = Activation::kRelu;
          else throw ConfigError("unknown activation '" + a + "'");
        }
        if (v.contains("weight_mode")) {
          auto w = v.at("weight_mode").get<std::string>();
          if (w == "identity") c.gcn.weight_mode = WeightMode::kIdentity;
          else if (w == "fixed_random") c.gcn.weight_mode = WeightMode::kFixedRandom;
          else throw ConfigError("unknown weight_mode '" + w + "'");
        }
        if (v.contains("op_norm_cap")) c.gcn.op_norm_cap = v.at("op_norm_cap").get<double>();
        if (v.contains("init_scale")) c.gcn.init_scale = v.at("init_scale").get<double>();
        if (v.contains("weight_seed")) c.gcn.weight_seed = v.at("weight_seed").get<std::uint64_t>();
      } else {
        throw ConfigError("unknown config key '" + k + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad experiment config: ") + e.what());
  }
  if (c.seeds.empty()) throw ConfigError("seeds must be nonempty");
  if (c.graph_file.empty() && c.n < 2) throw ConfigError("n must be >= 2");
  if (c.L < 0) throw ConfigError("L must be >= 0");
  if (!(c.p > 0.0 && c.p < 1.0)) throw ConfigError("p must lie in (0,1)");
  if (c.graph_file.empty()) resolve_rho(c.rho_mode, c.n, c.rho);
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["name"] = c.name;
  j["model"] = c.model;
  if (!c.graph_file.empty()) j["graph_file"] = c.graph_file;
  if (c.graph_file.empty()) j["n"] = c.n;
  j["rho_mode"] = to_string(c.rho_mode);
  if (c.rho_mode == RhoMode::kFixed) j["rho"] = c.rho;
  j["L"] = c.L;
  j["d_policy"] = c.d_policy;
  j["method"] = to_string(c.method);
  j["protocol"] = c.protocol == SplitProtocol::kInSample ? "in_sample" : "out_sample";
  j["p"] = c.p;
  j["negative_ratio"] = c.negative_ratio;
  j["keep_connected"] = c.keep_connected;
  j["hits_k"] = c.hits_k;
  j["ratio_k"] = c.ratio_k;
  j["seeds"] = c.seeds;
  j["output_dir"] = c.output_dir;
  j["bounds"] = c.bounds;
  j["pls_components"] = c.pls_components;
  j["symmetrize"] = c.symmetrize;
  j["save_predictions"] = c.save_predictions;
  j["gcn"] = {{"d", c.gcn.d},
              {"activation", c.gcn.activation == Activation::kRelu ? "relu" : "identity"},
              {"weight_mode", c.gcn.weight_mode == WeightMode::kFixedRandom ? "fixed_random" : "identity"},
              {"op_norm_cap", c.gcn.op_norm_cap},
              {"init_scale", c.gcn.init_scale},
              {"weight_seed", c.gcn.weight_seed}};
  return j;
}

SeedResult run_seed(const ExperimentConfig& cfg, std::uint64_t seed) {
  SeedResult out;
  out.seed = seed;

  SampledGraph graph;
  std::optional<SpectralDecomposition> spec;
  if (!cfg.graph_file.empty()) {
    graph = load_edge_list(cfg.graph_file);
  } else {
    GraphonModel model = resolve_model(cfg.model);
    graph = sample_graph(model, cfg.n, resolve_rho(cfg.rho_mode, cfg.n, cfg.rho), seed);
    if (model.is_block() && model.equal_weights()) spec = sbm_spectrum(model);
  }
  const double rho = graph.rho;
  const int n = graph.n;
  const int d = resolve_dimension(cfg.d_policy, n, rho);

  SplitOptions opts;
  opts.p = cfg.p;
  opts.seed = seed;
  opts.negative_ratio = cfg.negative_ratio;
  opts.keep_connected = cfg.keep_connected;
  SplitSpec split = cfg.protocol == SplitProtocol::kInSample ? in_sample_split(graph, opts)
                                                             : out_sample_split(graph, opts);
  const PairList test = split.test_pairs();
  std::vector<int> labels(test.size(), 0);
  std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(split.test_pos.size()), 1);

  SampledGraph fit_graph = graph.with_edges(split.fit_graph_edges());
  SampledGraph inf_graph = cfg.protocol == SplitProtocol::kInSample
                               ? fit_graph
                               : graph.with_edges(split.inference_graph_edges());

  json details;
  details["n"] = n;
  details["rho"] = rho;
  details["d"] = d;
  details["edges"] = graph.edge_count();
  details["train_pairs"] = split.train_pos.size() + split.train_neg.size();
  details["test_pairs"] = test.size();
  details["subsampled"] = split.subsampled;

  std::vector<double> scores;
  if (cfg.method == Method::kGcnUntrained) {
    GcnConfig g = cfg.gcn;
    g.L = cfg.L;
    GcnOutput go = gcn_forward(inf_graph, g, seed);
    const RowMatrix& top = go.embeddings.layers.back();
    scores.reserve(test.size());
    for (auto [i, j] : test) scores.push_back(sigmoid(top.row(i).dot(top.row(j))));
    auto msg = collapse_diagnostic(go.messages);
    auto embs = collapse_diagnostic(go.embeddings);
    for (int k = 1; k <= cfg.L; ++k) {
      out.metrics["message_spread_layer" + std::to_string(k)] = msg[k].spread;
      out.metrics["embedding_spread_layer" + std::to_string(k)] = embs[k].spread;
    }
  } else {
    const PairList train = split.train_pairs();
    // Out-sample training only observes G1, so embed it as a graph on V1
    // alone; isolated V2 vertices would otherwise deflate the moments.
    SampledGraph g1;
    PairList train_local = train;
    if (cfg.protocol == SplitProtocol::kOutSample) {
      std::vector<int> local(static_cast<std::size_t>(n), -1);
      for (std::size_t t = 0; t < split.v1.size(); ++t)
        local[static_cast<std::size_t>(split.v1[t])] = static_cast<int>(t);
      EdgeList e;
      e.reserve(split.train_pos.size());
      for (auto [i, j] : split.train_pos) e.emplace_back(local[i], local[j]);
      g1 = SampledGraph::from_edges(static_cast<int>(split.v1.size()), e);
      g1.rho = rho;
      for (auto& [i, j] : train_local) {
        i = local[static_cast<std::size_t>(i)];
        j = local[static_cast<std::size_t>(j)];
      }
    }
    const SampledGraph& train_graph = cfg.protocol == SplitProtocol::kOutSample ? g1 : fit_graph;
    const int n_fit = train_graph.n;
    details["fit_vertices"] = n_fit;
    EmbeddingTable emb_fit = embed(train_graph, cfg.L, d, seed);
    const int w = cfg.L + 1;
    std::vector<double> rows;
    const auto all_pairs = static_cast<std::int64_t>(n_fit) * (n_fit - 1) / 2;
    if (static_cast<std::int64_t>(train_local.size()) * 8 < all_pairs) {
      rows = pair_moments(emb_fit, train_local, cfg.symmetrize);
    } else {
      // Dense pair coverage: one GEMM per layer is cheaper than per-pair dots.
      MomentEstimates m_fit = moment_estimates(emb_fit, cfg.symmetrize);
      rows.reserve(train_local.size() * static_cast<std::size_t>(w));
      for (auto [i, j] : train_local) {
        const double* q = m_fit.row(MomentEstimates::pair_index(n_fit, i, j));
        rows.insert(rows.end(), q, q + w);
      }
    }
    std::vector<double> targets;
    targets.reserve(train.size());
    for (auto [i, j] : train) targets.push_back(fit_graph.has_edge(i, j) ? 1.0 : 0.0);
    RegressionFit fit;
    if (cfg.method == Method::kLggnnBox) {
      SufficientStats stats = accumulate_rows(rows, w, targets);
      SearchSpace space = resolve_space(cfg.bounds, spec, w, rho);
      fit = fit_box_constrained(stats, space);
      out.metrics["kkt_ok"] = fit.kkt.ok ? 1.0 : 0.0;
    } else {
      int comps = cfg.pls_components > 0 ? cfg.pls_components : std::min(3, w);
      fit = fit_pls_design(rows, w, targets, comps);
    }
    details["fit"] = fit_to_json(fit);
    EmbeddingTable emb_inf = cfg.protocol == SplitProtocol::kInSample ? std::move(emb_fit)
                                                                       : embed(inf_graph, cfg.L, d, seed);
    scores = predict_rows(fit, pair_moments(emb_inf, test, cfg.symmetrize));
  }

  std::vector<double> truth;
  if (graph.has_latents()) {
    truth.reserve(test.size());
    for (auto [i, j] : test) truth.push_back(graph.true_probability(i, j));
  }
  EvalReport rep = evaluate(scores, labels, truth, cfg.hits_k, cfg.ratio_k);
  if (std::isfinite(rep.auc_roc)) out.metrics["auc_roc"] = rep.auc_roc;
  for (auto [k, v] : rep.hits_at_k) out.metrics["hits_at_" + std::to_string(k)] = v;
  for (auto [k, v] : rep.prob_ratio_at_k) out.metrics["prob_ratio_at_" + std::to_string(k)] = v;
  out.metrics["cross_entropy"] = rep.cross_entropy;
  if (!truth.empty()) {
    double risk = 0.0;
    for (std::size_t t = 0; t < truth.size(); ++t) risk += (scores[t] - truth[t]) * (scores[t] - truth[t]);
    out.metrics["test_risk"] = risk / static_cast<double>(truth.size());
  }
  json flagged = json::object();
  for (auto [k, v] : rep.hits_flagged) {
    if (v) flagged[std::to_string(k)] = true;
  }
  if (!flagged.empty()) details["hits_flagged"] = flagged;
  details["positives"] = rep.positives;
  details["negatives"] = rep.negatives;
  if (cfg.save_predictions) details["predictions"] = scores;
  out.details = std::move(details);
  out.ok = true;
  return out;
}

void aggregate_results(ResultRow& row) {
  row.aggregate.clear();
  row.metric_order.clear();
  auto rank = [](const std::string& m) {
    if (m == "auc_roc") return 0;
    if (m.rfind("hits_at_", 0) == 0) return 1;
    if (m.rfind("prob_ratio_at_", 0) == 0) return 2;
    if (m == "cross_entropy") return 3;
    if (m == "test_risk") return 4;
    return 5;
  };
  auto suffix = [](const std::string& m) {
    auto pos = m.find_last_of('_');
    try {
      return std::stoi(m.substr(pos + 1));
    } catch (...) {
      return 0;
    }
  };
  std::vector<std::string> names;
  for (const SeedResult& s : row.seeds) {
    if (!s.ok) continue;
    for (const auto& [k, v] : s.metrics) {
      if (std::find(names.begin(), names.end(), k) == names.end()) names.push_back(k);
    }
  }
  std::sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (rank(a) <= 2 && suffix(a) != suffix(b)) return suffix(a) < suffix(b);
    return a < b;
  });
  for (const std::string& m : names) {
    std::vector<double> v;
    for (const SeedResult& s : row.seeds) {
      if (!s.ok) continue;
      auto it = s.metrics.find(m);
      if (it != s.metrics.end()) v.push_back(it->second);
    }
    MetricSummary sum;
    sum.count = static_cast<int>(v.size());
    if (!v.empty()) {
      for (double x : v) sum.mean += x;
      sum.mean /= static_cast<double>(v.size());
      if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) ss += (x - sum.mean) * (x - sum.mean);
        sum.sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
      }
    }
    row.aggregate[m] = sum;
    row.metric_order.push_back(m);
  }
}

json seed_to_json(const SeedResult& s, const json& config) {
  json j;
  j["config"] = config;
  j["seed"] = s.seed;
  j["ok"] = s.ok;
  if (!s.ok) j["error"] = s.error;
  j["metrics"] = s.metrics;
  j["details"] = s.details;
  return j;
}

json result_to_json(const ResultRow& row) {
  json j;
  j["config"] = row.config;
  json seeds = json::array();
  for (const SeedResult& s : row.seeds) {
    json e = seed_to_json(s, json());
    e.erase("config");
    seeds.push_back(std::move(e));
  }
  j["seeds"] = std::move(seeds);
  json agg = json::object();
  for (const std::string& m : row.metric_order) {
    const MetricSummary& s = row.aggregate.at(m);
    agg[m] = {{"mean", s.mean}, {"sd", s.sd}, {"count", s.count}};
  }
  j["aggregate"] = std::move(agg);
  j["sd_convention"] = "sample standard deviation across seeds";
  return j;
}

namespace {

const std::vector<std::string> kConfigColumns{"name", "model", "n", "rho_mode", "L", "d_policy",
                                              "method", "protocol", "p", "seeds"};

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  return s;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string aggregate_csv_header(const ResultRow& row) {
  std::string h;
  for (const auto& c : kConfigColumns) h += (h.empty() ? "" : ",") + c;
  for (const auto& m : row.metric_order) h += "," + m + "_mean," + m + "_sd";
  return h;
}

std::string aggregate_csv_line(const ResultRow& row) {
  std::string line;
  bool first = true;
  for (const auto& c : kConfigColumns) {
    if (!first) line += ",";
    first = false;
    json v = row.config.contains(c) ? row.config.at(c) : json();
    if (c == "model" && v.is_object()) v = v.value("name", std::string(v.value("kind", "inline")));
    line += v.is_null() ? "" : csv_cell(v);
  }
  for (const auto& m : row.metric_order) {
    const MetricSummary& s = row.aggregate.at(m);
    line += "," + format_double(s.mean) + "," + format_double(s.sd);
  }
  return line;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename '" + tmp.string() + "' to '" + path + "': " + ec.message());
}

ResultRow run_experiment(const ExperimentConfig& cfg) {
  ResultRow row;
  row.config = config_to_json(cfg);
  for (std::uint64_t seed : cfg.seeds) {
    SeedResult r;
    try {
      r = run_seed(cfg, seed);
    } catch (const std::exception& e) {
      r = SeedResult{};
      r.seed = seed;
      r.ok = false;
      r.error = e.what();
    }
    if (!cfg.output_dir.empty()) {
      write_file_atomic(cfg.output_dir + "/" + cfg.name + "_seed" + std::to_string(seed) + ".json",
                        seed_to_json(r, row.config).dump(2) + "\n");
    }
    row.seeds.push_back(std::move(r));
  }
  aggregate_results(row);
  if (!cfg.output_dir.empty()) {
    write_file_atomic(cfg.output_dir + "/" + cfg.name + ".csv",
                      aggregate_csv_header(row) + "\n" + aggregate_csv_line(row) + "\n");
  }
  return row;
}

CoraConfig cora_config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("cora config must be an object");
  CoraConfig c;
  try {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      const std::string& k = it.key();
      const json& v = it.value();
      if (k == "path") c.path = v.get<std::string>();
      else if (k == "layers") c.layers = v.get<std::vector<int>>();
      else if (k == "methods") {
        c.methods.clear();
        for (const auto& m : v) c.methods.push_back(method_from_string(m.get<std::string>()));
      } else if (k == "seeds") c.seeds = v.get<std::vector<std::uint64_t>>();
      else if (k == "p") c.p = v.get<double>();
      else if (k == "hits_k") c.hits_k = v.get<std::vector<int>>();
      else if (k == "output_dir") c.output_dir = v.get<std::string>();
      else throw ConfigError("unknown cora config key '" + k + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad cora config: ") + e.what());
  }
  if (c.seeds.empty()) throw ConfigError("seeds must be nonempty");
  return c;
}

std::vector<ResultRow> run_cora(const CoraConfig& cfg) {
  if (cfg.path.empty() || !std::filesystem::exists(cfg.path)) {
    throw IoError("Cora edge list not found at '" + cfg.path +
                  "'; supply the path in the config (key \"path\") or LGGNN_CORA_PATH");
  }
  std::vector<ResultRow> rows;
  for (int L : cfg.layers) {
    for (Method m : cfg.methods) {
      ExperimentConfig e;
      e.name = std::string("cora_") + to_string(m) + "_L" + std::to_string(L);
      e.model = "edge_list";
      e.graph_file = cfg.path;
      e.L = L;
      e.method = m;
      e.protocol = SplitProtocol::kInSample;
      e.p = cfg.p;
      e.negative_ratio = 1.0;
      e.keep_connected = true;
      e.hits_k = cfg.hits_k;
      e.ratio_k.clear();
      e.seeds = cfg.seeds;
      e.output_dir = cfg.output_dir;
      rows.push_back(run_experiment(e));
    }
  }
  return rows;
}

}  // namespace lggnn
