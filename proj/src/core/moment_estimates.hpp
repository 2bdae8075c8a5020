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

/// q_ij^(k) for pairs i < j and k = 2..L+2, stored pair-major with L+1
/// values per pair.
struct MomentEstimates {
  int n = 0;
  int L = 0;
  bool symmetrized = true;
  std::vector<double> values;

  int width() const { return L + 1; }
  std::int64_t pair_count() const { return static_cast<std::int64_t>(n) * (n - 1) / 2; }
  static std::int64_t pair_index(int n, int i, int j);
  /// Inverse of pair_index.
  static std::pair<int, int> pair_at(int n, std::int64_t index);

  const double* row(std::int64_t pair) const { return values.data() + pair * width(); }
  double* row(std::int64_t pair) { return values.data() + pair * width(); }
  /// k in 2..L+2; (i, j) in either order.
  double q(int i, int j, int k) const;
};

/// Turns dot products dots[r] = <lambda^r, lambda^0> (r = 0..L) into the
/// binomial-recursion estimators, in place.
void dots_to_moments(double* dots, int L);
/// Inverse of dots_to_moments.
void moments_to_dots(double* values, int L);

/// Symmetrized (q_ij + q_ji)/2 by default; raw uses the (i, j), i < j, evaluation.
MomentEstimates moment_estimates(const EmbeddingTable& emb, bool symmetrize = true);

/// Estimators for an explicit pair list; rows of L+1 values per pair.
std::vector<double> pair_moments(const EmbeddingTable& emb, const std::vector<std::pair<int, int>>& pairs,
                                 bool symmetrize = true);

}  // namespace lggnn
