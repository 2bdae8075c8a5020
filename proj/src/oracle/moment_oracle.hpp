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

#include <vector>

#include <Eigen/Dense>

#include "graphon/sampled_graph.hpp"

namespace lggnn {

inline constexpr int kMaxEmpiricalOrder = 8;
inline constexpr int kExactMomentLimit = 3000;

/// What_ij^(k) = (A^k)_ij / (n-1)^(k-1) for k = 2..k_max.
struct EmpiricalMoments {
  int n = 0;
  int k_max = 0;
  /// True when walk counts were accumulated in exact integers.
  bool exact = true;
  /// values[k] for k = 2..k_max; lower slots are empty.
  std::vector<Eigen::MatrixXd> values;

  double at(int k, int i, int j) const;
};

EmpiricalMoments empirical_moments(const SampledGraph& graph, int k_max);

/// a_k = (8(k+2))^k k^(k+1) sqrt(k!).
double rate_constant_a(int k);

struct RateValue {
  double value = 0.0;
  int argmax_k = 0;
  /// The absolute constant in a_k is unknown and fixed to 1.
  bool diagnostic_only = true;
};

/// max over 2 <= k <= m+1 of (log n)^k / sqrt(n-1) [3 a_k sqrt(rho) + 96 a_(k-1) / sqrt(d)].
RateValue rate_r(int n, int d, int m, double rho);

}  // namespace lggnn
