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
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "graphon/graphon_model.hpp"

namespace lggnn {

using EdgeList = std::vector<std::pair<int, int>>;
using SparseAdjacency = Eigen::SparseMatrix<double, Eigen::RowMajor, std::int64_t>;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Simple undirected graph in CSR form with ascending neighbor lists, plus
/// the latent state it was sampled from when known.
struct SampledGraph {
  int n = 0;
  std::vector<std::int64_t> offsets{0};
  std::vector<int> adj;

  double rho = 1.0;
  std::uint64_t seed = 0;
  std::shared_ptr<const GraphonModel> model;
  std::vector<double> latents;   // block models
  RowMatrix sphere_points;       // geometric model, n x dim

  // Ingestion bookkeeping.
  std::vector<std::int64_t> vertex_ids;
  std::int64_t self_loops_dropped = 0;
  std::int64_t duplicates_merged = 0;

  /// Builds a graph from an arbitrary edge list; self-loops and duplicates
  /// are removed and counted.
  static SampledGraph from_edges(int n, const EdgeList& edges);

  std::int64_t edge_count() const { return static_cast<std::int64_t>(adj.size()) / 2; }
  int degree(int i) const { return static_cast<int>(offsets[i + 1] - offsets[i]); }
  std::span<const int> neighbors(int i) const {
    return {adj.data() + offsets[i], static_cast<std::size_t>(degree(i))};
  }
  bool has_edge(int i, int j) const;
  double density() const;

  /// Edges with u < v in lexicographic order.
  EdgeList edges() const;
  SparseAdjacency adjacency() const;
  Eigen::MatrixXd dense_adjacency() const;

  bool has_latents() const { return !latents.empty() || sphere_points.rows() > 0; }
  /// rho * W(omega_i, omega_j).
  double true_probability(int i, int j) const;
  /// Community label per vertex for block models.
  std::vector<int> communities() const;

  /// Same vertex set and latent state with a different edge set.
  SampledGraph with_edges(const EdgeList& edges) const;
};

SampledGraph sample_graph(const GraphonModel& model, int n, double rho, std::uint64_t seed);

/// Whitespace-separated integer pairs, '#' comments. Ids are remapped to
/// 0..n-1 in ascending order; rho is set to the edge density.
SampledGraph load_edge_list(const std::string& path);
SampledGraph parse_edge_list(const std::string& text);
void save_edge_list(const SampledGraph& graph, const std::string& path);

}  // namespace lggnn
