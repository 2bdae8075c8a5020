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
#include <vector>

#include "core/embedding.hpp"

namespace lggnn {

enum class Activation { kIdentity, kRelu };
enum class WeightMode { kIdentity, kFixedRandom };

struct GcnConfig {
  int L = 2;
  int d = 64;
  Activation activation = Activation::kIdentity;
  WeightMode weight_mode = WeightMode::kIdentity;
  std::uint64_t weight_seed = 0;
  /// Operator-norm cap M for generated weights.
  double op_norm_cap = 1.0;
  /// lambda^0 coordinates are N(0, s^2/d).
  double init_scale = 1.0;
};

struct GcnOutput {
  /// layers[k] = lambda^k.
  EmbeddingTable embeddings;
  /// layers[0] = lambda^0, layers[k] = normalized neighbor sum feeding layer k.
  EmbeddingTable messages;
  /// Per layer k = 1..L: the self and neighbor weight matrices.
  std::vector<Eigen::MatrixXd> self_weights;
  std::vector<Eigen::MatrixXd> neighbor_weights;
};

GcnOutput gcn_forward(const SampledGraph& graph, const GcnConfig& cfg, std::uint64_t seed);

struct LayerSpread {
  /// max_i |lambda_i - mean_i lambda_i|
  double spread = 0.0;
  /// Sample standard deviation of |lambda_i| across vertices.
  double norm_sd = 0.0;
};

std::vector<LayerSpread> collapse_diagnostic(const EmbeddingTable& emb);

}  // namespace lggnn
