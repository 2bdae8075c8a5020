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
#include "eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "common/errors.hpp"

namespace lggnn {

double auc_roc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) throw ParameterError("scores and labels differ in length");
  const std::size_t n = scores.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;
  double pos = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores[idx[j + 1]] == scores[idx[i]]) ++j;
    double midrank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) {
      if (labels[idx[t]] != 0) {
        rank_sum += midrank;
        pos += 1.0;
      }
    }
    i = j + 1;
  }
  const double neg = static_cast<double>(n) - pos;
  if (pos == 0.0 || neg == 0.0) throw EmptyDataError("AUC needs both classes");
  return (rank_sum - pos * (pos + 1.0) / 2.0) / (pos * neg);
}

HitsResult hits_at_k(const std::vector<double>& scores, const std::vector<int>& labels, int k) {
  if (scores.size() != labels.size()) throw ParameterError("scores and labels differ in length");
  if (k < 1) throw ParameterError("k must be >= 1");
  std::vector<double> pos, neg;
  for (std::size_t i = 0; i < scores.size(); ++i) (labels[i] != 0 ? pos : neg).push_back(scores[i]);
  if (pos.empty()) throw EmptyDataError("Hits@k needs at least one positive");
  HitsResult r;
  double threshold = -INFINITY;
  if (!neg.empty()) {
    if (static_cast<std::size_t>(k) > neg.size()) {
      r.flagged = true;
      threshold = *std::min_element(neg.begin(), neg.end());
    } else {
      std::nth_element(neg.begin(), neg.begin() + (k - 1), neg.end(), std::greater<>());
      threshold = neg[static_cast<std::size_t>(k - 1)];
    }
  } else {
    r.flagged = true;
  }
  std::size_t hits = 0;
  for (double s : pos) hits += s > threshold ? 1 : 0;
  r.value = static_cast<double>(hits) / static_cast<double>(pos.size());
  return r;
}

double probability_ratio_at_k(const std::vector<double>& scores, const std::vector<double>& true_probs, int k) {
  if (true_probs.empty()) throw EmptyDataError("probability ratio needs true edge probabilities");
  if (scores.size() != true_probs.size()) throw ParameterError("scores and probabilities differ in length");
  if (k < 1 || static_cast<std::size_t>(k) > scores.size()) throw ParameterError("k out of range");
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double pred = 0.0;
  for (int r = 0; r < k; ++r) pred += true_probs[idx[r]];
  std::vector<double> sorted(true_probs);
  std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end(), std::greater<>());
  std::sort(sorted.begin(), sorted.begin() + k, std::greater<>());
  double best = 0.0;
  for (int r = 0; r < k; ++r) best += sorted[r];
  if (best == 0.0) return 1.0;
  return pred / best;
}

bool e_rank_check(const std::vector<double>& scores, const std::vector<int>& in_community) {
  if (scores.size() != in_community.size()) throw ParameterError("scores and labels differ in length");
  double min_in = INFINITY, max_out = -INFINITY;
  bool any_in = false, any_out = false;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (in_community[i] != 0) {
      min_in = std::min(min_in, scores[i]);
      any_in = true;
    } else {
      max_out = std::max(max_out, scores[i]);
      any_out = true;
    }
  }
  if (!any_in || !any_out) throw EmptyDataError("E_rank needs in- and cross-community pairs");
  return min_in > max_out;
}

double cross_entropy(const std::vector<double>& probs, const std::vector<int>& labels, double eps) {
  if (probs.size() != labels.size()) throw ParameterError("probabilities and labels differ in length");
  if (probs.empty()) throw EmptyDataError("cross entropy of no samples");
  double s = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    double p = std::clamp(probs[i], eps, 1.0 - eps);
    s -= labels[i] != 0 ? std::log(p) : std::log1p(-p);
  }
  return s / static_cast<double>(probs.size());
}

EvalReport evaluate(const std::vector<double>& scores, const std::vector<int>& labels,
                    const std::vector<double>& true_probs, const std::vector<int>& hits_ks,
                    const std::vector<int>& ratio_ks) {
  EvalReport r;
  for (int y : labels) (y != 0 ? r.positives : r.negatives) += 1;
  // Single-class inputs leave AUC undefined (NaN) and Hits@k unset.
  r.auc_roc = r.positives > 0 && r.negatives > 0 ? auc_roc(scores, labels)
                                                 : std::numeric_limits<double>::quiet_NaN();
  for (int k : r.positives > 0 ? hits_ks : std::vector<int>{}) {
    HitsResult h = hits_at_k(scores, labels, k);
    r.hits_at_k[k] = h.value;
    r.hits_flagged[k] = h.flagged;
  }
  if (!true_probs.empty()) {
    for (int k : ratio_ks) {
      r.prob_ratio_at_k[k] = probability_ratio_at_k(scores, true_probs, std::min<int>(k, static_cast<int>(scores.size())));
    }
  }
  r.cross_entropy = cross_entropy(scores, labels);
  return r;
}

nlohmann::json report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["auc_roc"] = report.auc_roc;
  for (auto [k, v] : report.hits_at_k) j["hits_at_" + std::to_string(k)] = v;
  for (auto [k, v] : report.hits_flagged) {
    if (v) j["hits_at_" + std::to_string(k) + "_flagged"] = true;
  }
  for (auto [k, v] : report.prob_ratio_at_k) j["prob_ratio_at_" + std::to_string(k)] = v;
  j["cross_entropy"] = report.cross_entropy;
  if (report.e_rank) j["e_rank"] = *report.e_rank;
  j["positives"] = report.positives;
  j["negatives"] = report.negatives;
  return j;
}

}  // namespace lggnn
