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
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"

namespace lggnn {

double auc_roc(const std::vector<double>& scores, const std::vector<int>& labels);

struct HitsResult {
  double value = 0.0;
  /// Fewer than k negatives; the minimum negative served as threshold.
  bool flagged = false;
};

HitsResult hits_at_k(const std::vector<double>& scores, const std::vector<int>& labels, int k);

double probability_ratio_at_k(const std::vector<double>& scores, const std::vector<double>& true_probs, int k);

/// min over in-community scores > max over cross-community scores.
bool e_rank_check(const std::vector<double>& scores, const std::vector<int>& in_community);

inline constexpr double kCrossEntropyEps = 1e-7;

double cross_entropy(const std::vector<double>& probs, const std::vector<int>& labels,
                     double eps = kCrossEntropyEps);

struct EvalReport {
  double auc_roc = 0.0;  // NaN when one class is absent
  std::map<int, double> hits_at_k;
  std::map<int, bool> hits_flagged;
  std::map<int, double> prob_ratio_at_k;
  double cross_entropy = 0.0;
  std::optional<bool> e_rank;
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
};

/// Labels 1/0; true_probs may be empty, which skips the probability ratio.
EvalReport evaluate(const std::vector<double>& scores, const std::vector<int>& labels,
                    const std::vector<double>& true_probs, const std::vector<int>& hits_ks,
                    const std::vector<int>& ratio_ks);

nlohmann::json report_to_json(const EvalReport& report);

}  // namespace lggnn
