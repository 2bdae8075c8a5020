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
#include "core/embedding.hpp"

#include <cmath>
#include <fstream>

#include "common/errors.hpp"
#include "common/rng.hpp"

namespace lggnn {
namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// out_i = sum over ascending neighbors l of in_l.
void aggregate(const SampledGraph& g, const RowMatrix& in, RowMatrix& out) {
  out.setZero(in.rows(), in.cols());
  for (int i = 0; i < g.n; ++i) {
    auto row = out.row(i);
    for (int l : g.neighbors(i)) row += in.row(l);
  }
}

}  // namespace

int default_dimension(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0,1]");
  return std::max(64, static_cast<int>(std::ceil(4.0 / rho)));
}

RowMatrix init_features(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 1) throw ParameterError("init_features needs n >= 0 and d >= 1");
  const CounterRng rng = CounterRng(seed).substream(streams::kFeatures);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  RowMatrix Z(n, d);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < d; ++c) {
      Z(i, c) = scale * rng.normal(static_cast<std::uint64_t>(i) * d + c);
    }
  }
  return Z;
}

EmbeddingTable embed_features(const SampledGraph& graph, int L, const RowMatrix& Z) {
  if (L < 0) throw ParameterError("layer count must be >= 0");
  if (graph.n < 2) throw ParameterError("embedding needs n >= 2");
  if (Z.rows() != graph.n || Z.cols() < 1) throw ParameterError("feature matrix has wrong shape");
  EmbeddingTable emb;
  emb.n = graph.n;
  emb.L = L;
  emb.d = static_cast<int>(Z.cols());
  emb.layers.resize(static_cast<std::size_t>(L) + 1);

  const double nm1 = static_cast<double>(graph.n - 1);
  RowMatrix agg;
  aggregate(graph, Z, agg);
  emb.layers[0] = agg * (1.0 / std::sqrt(nm1));
  for (int k = 1; k <= L; ++k) {
    const RowMatrix& prev = emb.layers[k - 1];
    aggregate(graph, prev, agg);
    emb.layers[k] = prev + agg * (1.0 / nm1);
  }
  return emb;
}

EmbeddingTable embed(const SampledGraph& graph, int L, int d, std::uint64_t seed) {
  EmbeddingTable emb = embed_features(graph, L, init_features(graph.n, d, seed));
  emb.feature_seed = seed;
  return emb;
}

Eigen::MatrixXd expected_dotproduct_oracle(const SampledGraph& graph, int k1, int k2) {
  if (k1 < 0 || k2 < 0) throw ParameterError("layer indices must be >= 0");
  if (graph.n < 2) throw ParameterError("oracle needs n >= 2");
  const int top = k1 + k2 + 2;
  const double nm1 = static_cast<double>(graph.n - 1);
  const Eigen::MatrixXd A = graph.dense_adjacency();
  // What[q] = A^q / (n-1)^(q-1).
  std::vector<Eigen::MatrixXd> What(static_cast<std::size_t>(top) + 1);
  What[1] = A;
  for (int q = 2; q <= top; ++q) What[q] = (What[q - 1] * A) / nm1;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(graph.n, graph.n);
  for (int q1 = 0; q1 <= k1; ++q1) {
    for (int q2 = 0; q2 <= k2; ++q2) {
      out += binom(k1, q1) * binom(k2, q2) * What[q1 + q2 + 2];
    }
  }
  return out;
}

void write_embedding_csv(const EmbeddingTable& emb, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write embedding '" + path + "'");
  out.precision(17);
  out << "vertex";
  for (int k = 0; k <= emb.L; ++k) {
    for (int c = 0; c < emb.d; ++c) out << ",l" << k << "_" << c;
  }
  out << '\n';
  for (int i = 0; i < emb.n; ++i) {
    out << i;
    for (int k = 0; k <= emb.L; ++k) {
      for (int c = 0; c < emb.d; ++c) out << ',' << emb.layers[k](i, c);
    }
    out << '\n';
  }
  if (!out) throw IoError("failed writing embedding '" + path + "'");
}

}  // namespace lggnn
