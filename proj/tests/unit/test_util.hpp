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

namespace lggnn::test {

inline std::string data_path(const std::string& rel) { return std::string(LGGNN_DATA_DIR) + "/" + rel; }

inline SampledGraph path_graph(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SampledGraph::from_edges(n, e);
}

inline SampledGraph complete_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return SampledGraph::from_edges(n, e);
}

inline SampledGraph cycle_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SampledGraph::from_edges(n, e);
}

// Erdos-Renyi graph from a small LCG, independent of the library RNG.
inline SampledGraph lcg_graph(int n, double p, std::uint64_t seed) {
  std::uint64_t s = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      const double u = static_cast<double>(s >> 11) * 0x1.0p-53;
      if (u < p) e.emplace_back(i, j);
    }
  }
  return SampledGraph::from_edges(n, e);
}

}  // namespace lggnn::test
