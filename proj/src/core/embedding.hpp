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
#include <string>
#include <vector>

#include "graphon/sampled_graph.hpp"

namespace lggnn {

/// lambda_i^k for all vertices and layers k = 0..L; layers[k] is n x d.
struct EmbeddingTable {
  int n = 0;
  int L = 0;
  int d = 0;
  std::uint64_t feature_seed = 0;
  std::vector<RowMatrix> layers;
};

/// max(64, ceil(4 / rho)).
int default_dimension(double rho);

/// n x d matrix of i.i.d. N(0, 1/d) entries.
RowMatrix init_features(int n, int d, std::uint64_t seed);

EmbeddingTable embed(const SampledGraph& graph, int L, int d, std::uint64_t seed);
/// Message passing from explicit features Z (n x d).
EmbeddingTable embed_features(const SampledGraph& graph, int L, const RowMatrix& Z);

/// E[<lambda_i^k1, lambda_j^k2> | A] from adjacency powers.
Eigen::MatrixXd expected_dotproduct_oracle(const SampledGraph& graph, int k1, int k2);

/// Rows are vertices, columns are layer blocks.
void write_embedding_csv(const EmbeddingTable& emb, const std::string& path);

}  // namespace lggnn
