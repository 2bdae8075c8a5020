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
#include "gcn/gcn_baseline.hpp"

#include <cmath>

#include "common/errors.hpp"
#include "common/rng.hpp"

namespace lggnn {
namespace {

Eigen::MatrixXd random_weight(int d, double cap, const CounterRng& rng) {
  Eigen::MatrixXd W(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) W(r, c) = scale * rng.normal(static_cast<std::uint64_t>(r) * d + c);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(W);
  double op = svd.singularValues()(0);
  if (op > cap) W *= cap / op;
  return W;
}

}  // namespace

GcnOutput gcn_forward(const SampledGraph& graph, const GcnConfig& cfg, std::uint64_t seed) {
  if (cfg.L < 0 || cfg.d < 1) throw ParameterError("GCN needs L >= 0 and d >= 1");
  if (!(cfg.init_scale > 0.0)) throw ParameterError("init scale must be positive");
  if (cfg.weight_mode == WeightMode::kFixedRandom && !(cfg.op_norm_cap > 0.0)) {
    throw ParameterError("operator-norm cap must be positive");
  }
  if (graph.n < 1) throw ParameterError("GCN needs at least one vertex");
  const int n = graph.n;
  const int d = cfg.d;

  GcnOutput out;
  RowMatrix h = init_features(n, d, seed) * cfg.init_scale;
  out.embeddings.n = out.messages.n = n;
  out.embeddings.L = out.messages.L = cfg.L;
  out.embeddings.d = out.messages.d = d;
  out.embeddings.feature_seed = out.messages.feature_seed = seed;
  out.embeddings.layers.push_back(h);
  out.messages.layers.push_back(h);

  std::vector<double> inv_sqrt_deg(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (graph.degree(i) > 0) inv_sqrt_deg[i] = 1.0 / std::sqrt(static_cast<double>(graph.degree(i)));
  }
  const CounterRng wrng = CounterRng(cfg.weight_seed).substream(streams::kWeights);

  for (int k = 1; k <= cfg.L; ++k) {
    Eigen::MatrixXd M0, M1;
    if (cfg.weight_mode == WeightMode::kIdentity) {
      M0 = M1 = Eigen::MatrixXd::Identity(d, d);
    } else {
      M0 = random_weight(d, cfg.op_norm_cap, wrng.substream(2 * static_cast<std::uint64_t>(k)));
      M1 = random_weight(d, cfg.op_norm_cap, wrng.substream(2 * static_cast<std::uint64_t>(k) + 1));
    }
    RowMatrix msg = RowMatrix::Zero(n, d);
    for (int i = 0; i < n; ++i) {
      auto row = msg.row(i);
      for (int j : graph.neighbors(i)) row += (inv_sqrt_deg[i] * inv_sqrt_deg[j]) * h.row(j);
    }
    RowMatrix next = h * M0.transpose() + msg * M1.transpose();
    if (cfg.activation == Activation::kRelu) next = next.cwiseMax(0.0);
    h = std::move(next);
    out.messages.layers.push_back(std::move(msg));
    out.embeddings.layers.push_back(h);
    out.self_weights.push_back(std::move(M0));
    out.neighbor_weights.push_back(std::move(M1));
  }
  return out;
}

std::vector<LayerSpread> collapse_diagnostic(const EmbeddingTable& emb) {
  std::vector<LayerSpread> out;
  for (const RowMatrix& layer : emb.layers) {
    LayerSpread s;
    const auto n = layer.rows();
    if (n == 0) {
      out.push_back(s);
      continue;
    }
    Eigen::RowVectorXd mean = layer.colwise().mean();
    Eigen::VectorXd norms(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      s.spread = std::max(s.spread, (layer.row(i) - mean).norm());
      norms(i) = layer.row(i).norm();
    }
    if (n > 1) {
      double m = norms.mean();
      s.norm_sd = std::sqrt((norms.array() - m).square().sum() / static_cast<double>(n - 1));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace lggnn
