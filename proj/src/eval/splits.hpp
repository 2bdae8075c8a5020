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

#include "graphon/sampled_graph.hpp"

namespace lggnn {

using PairList = std::vector<std::pair<int, int>>;

enum class SplitProtocol { kInSample, kOutSample };

struct SplitOptions {
  double p = 0.2;
  std::uint64_t seed = 0;
  /// In-sample only: 0 keeps the full negative partition, r > 0 samples
  /// r negatives per positive in each of train / val / test.
  double negative_ratio = 0.0;
  /// In-sample only: reject removals that would disconnect a component.
  bool keep_connected = false;
  /// Test pair universes above this size are subsampled when n > 2000.
  std::int64_t max_test_pairs = 200000;
};

/// All pair lists hold (i, j) with i < j.
struct SplitSpec {
  SplitProtocol protocol = SplitProtocol::kInSample;
  double p = 0.2;
  std::uint64_t seed = 0;
  PairList train_pos, train_neg;
  PairList val_pos, val_neg;
  PairList test_pos, test_neg;
  /// Out-sample: E_2 edges outside the test set.
  PairList message_passing;
  std::vector<int> v1, v2;
  bool subsampled = false;
  std::int64_t removals_rejected = 0;

  PairList train_pairs() const;
  PairList val_pairs() const;
  PairList test_pairs() const;
  /// Graph seen while fitting: the positive training edges.
  EdgeList fit_graph_edges() const { return train_pos; }
  /// Graph used to embed before predicting test pairs.
  EdgeList inference_graph_edges() const;
};

SplitSpec in_sample_split(const SampledGraph& graph, const SplitOptions& opts);
SplitSpec out_sample_split(const SampledGraph& graph, const SplitOptions& opts);

}  // namespace lggnn
