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
#include "graphon/sampled_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "common/errors.hpp"
#include "common/rng.hpp"

namespace lggnn {

SampledGraph SampledGraph::from_edges(int n, const EdgeList& edges) {
  if (n < 0) throw ParameterError("vertex count must be nonnegative");
  SampledGraph g;
  g.n = n;
  std::vector<std::vector<int>> nbrs(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParameterError("edge endpoint out of range");
    if (u == v) {
      ++g.self_loops_dropped;
      continue;
    }
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    auto& list = nbrs[i];
    std::sort(list.begin(), list.end());
    auto last = std::unique(list.begin(), list.end());
    g.duplicates_merged += list.end() - last;
    list.erase(last, list.end());
    g.offsets[i + 1] = g.offsets[i] + static_cast<std::int64_t>(list.size());
  }
  // Each duplicate was seen from both endpoints.
  g.duplicates_merged /= 2;
  g.adj.reserve(static_cast<std::size_t>(g.offsets[n]));
  for (auto& list : nbrs) g.adj.insert(g.adj.end(), list.begin(), list.end());
  return g;
}

bool SampledGraph::has_edge(int i, int j) const {
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

double SampledGraph::density() const {
  if (n < 2) return 0.0;
  return 2.0 * static_cast<double>(edge_count()) / (static_cast<double>(n) * (n - 1));
}

EdgeList SampledGraph::edges() const {
  EdgeList out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int i = 0; i < n; ++i) {
    for (int j : neighbors(i)) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

SparseAdjacency SampledGraph::adjacency() const {
  SparseAdjacency A(n, n);
  A.reserve(static_cast<std::int64_t>(adj.size()));
  for (int i = 0; i < n; ++i) {
    A.startVec(i);
    for (int j : neighbors(i)) A.insertBack(i, j) = 1.0;
  }
  A.finalize();
  return A;
}

Eigen::MatrixXd SampledGraph::dense_adjacency() const {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j : neighbors(i)) A(i, j) = 1.0;
  }
  return A;
}

double SampledGraph::true_probability(int i, int j) const {
  if (!model || !has_latents()) throw EmptyDataError("graph carries no latent features");
  if (i == j) return 0.0;
  if (model->kind() == GraphonKind::kGeometric) {
    return rho * model->eval_sphere(sphere_points.row(i).data(), sphere_points.row(j).data());
  }
  return rho * model->eval(latents[i], latents[j]);
}

std::vector<int> SampledGraph::communities() const {
  if (!model || latents.empty() || !model->is_block()) {
    throw EmptyDataError("graph has no block-model latents");
  }
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = model->community_of(latents[i]);
  return c;
}

SampledGraph SampledGraph::with_edges(const EdgeList& edges) const {
  SampledGraph g = from_edges(n, edges);
  g.rho = rho;
  g.seed = seed;
  g.model = model;
  g.latents = latents;
  g.sphere_points = sphere_points;
  g.vertex_ids = vertex_ids;
  return g;
}

SampledGraph sample_graph(const GraphonModel& model, int n, double rho, std::uint64_t seed) {
  if (n < 2) throw ParameterError("sample_graph needs n >= 2");
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0,1]");
  model.validate();

  const CounterRng root(seed);
  const CounterRng latent_rng = root.substream(streams::kLatents);
  const CounterRng edge_rng = root.substream(streams::kEdges);

  std::vector<double> latents;
  RowMatrix points;
  if (model.kind() == GraphonKind::kGeometric) {
    const int dim = model.sphere_dim();
    points.resize(n, dim);
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < dim; ++c) {
        points(i, c) = latent_rng.normal(static_cast<std::uint64_t>(i) * dim + c);
      }
      points.row(i).normalize();
    }
  } else {
    latents.resize(n);
    for (int i = 0; i < n; ++i) latents[i] = latent_rng.uniform(static_cast<std::uint64_t>(i));
  }

  EdgeList edges;
  std::vector<int> comm;
  if (model.is_block()) {
    comm.resize(n);
    for (int i = 0; i < n; ++i) comm[i] = model.community_of(latents[i]);
  }
  const Eigen::MatrixXd& P = model.block_matrix();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double w = model.is_block() ? P(comm[i], comm[j])
                                  : model.eval_sphere(points.row(i).data(), points.row(j).data());
      double prob = rho * w;
      if (prob <= 0.0) continue;
      // Counter = pair index in the full n x n layout.
      double u = edge_rng.uniform(static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n) + j);
      if (u < prob) edges.emplace_back(i, j);
    }
  }

  SampledGraph g = SampledGraph::from_edges(n, edges);
  g.rho = rho;
  g.seed = seed;
  g.model = std::make_shared<const GraphonModel>(model);
  g.latents = std::move(latents);
  g.sphere_points = std::move(points);
  return g;
}

namespace {

bool parse_id(std::string_view tok, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size() && out >= 0;
}

}  // namespace

SampledGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::int64_t declared_n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      // Optional header written by save_edge_list: "# n=<count> ...".
      std::istringstream hs(line.substr(hash + 1));
      std::string first;
      if (hs >> first && first.rfind("n=", 0) == 0) {
        std::int64_t v = 0;
        if (parse_id(std::string_view(first).substr(2), v)) declared_n = v;
      }
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    std::int64_t u = 0, v = 0;
    if (toks.size() != 2 || !parse_id(toks[0], u) || !parse_id(toks[1], v)) {
      throw ParseError("malformed edge at line " + std::to_string(line_no) + ": '" + line + "'",
                       line_no);
    }
    raw.emplace_back(u, v);
  }

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (declared_n >= 0 && (ids.empty() || ids.back() < declared_n)) {
    ids.resize(static_cast<std::size_t>(declared_n));
    for (std::int64_t i = 0; i < declared_n; ++i) ids[static_cast<std::size_t>(i)] = i;
  }
  auto index_of = [&](std::int64_t id) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  EdgeList edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));

  SampledGraph g = SampledGraph::from_edges(static_cast<int>(ids.size()), edges);
  g.vertex_ids = std::move(ids);
  double rho = g.density();
  g.rho = rho > 0.0 ? rho : 1.0;
  return g;
}

SampledGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

void save_edge_list(const SampledGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list '" + path + "'");
  out << "# n=" << graph.n << " edges=" << graph.edge_count() << "\n";
  for (auto [u, v] : graph.edges()) {
    if (!graph.vertex_ids.empty()) {
      out << graph.vertex_ids[u] << ' ' << graph.vertex_ids[v] << '\n';
    } else {
      out << u << ' ' << v << '\n';
    }
  }
  if (!out) throw IoError("failed writing edge list '" + path + "'");
}

}  // namespace lggnn
