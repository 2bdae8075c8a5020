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
#include "core/moment_estimates.hpp"

#include <cmath>

#include "common/errors.hpp"

namespace lggnn {
namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::int64_t MomentEstimates::pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  const std::int64_t ii = i;
  return ii * n - ii * (ii + 1) / 2 + (j - i - 1);
}

std::pair<int, int> MomentEstimates::pair_at(int n, std::int64_t index) {
  // Row i holds n-1-i pairs.
  int i = 0;
  std::int64_t start = 0;
  auto count = [&](int r) { return static_cast<std::int64_t>(n - 1 - r); };
  // Closed-form guess then fix up.
  const double nn = static_cast<double>(n);
  double guess = std::floor(((2 * nn - 1) - std::sqrt((2 * nn - 1) * (2 * nn - 1) - 8.0 * index)) / 2.0);
  i = std::max(0, std::min(n - 2, static_cast<int>(guess)));
  start = static_cast<std::int64_t>(i) * n - static_cast<std::int64_t>(i) * (i + 1) / 2;
  while (start > index) {
    --i;
    start -= count(i);
  }
  while (start + count(i) <= index) {
    start += count(i);
    ++i;
  }
  return {i, i + 1 + static_cast<int>(index - start)};
}

double MomentEstimates::q(int i, int j, int k) const {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw ParameterError("invalid pair");
  if (k < 2 || k > L + 2) throw ParameterError("moment order out of range");
  return row(pair_index(n, i, j))[k - 2];
}

void dots_to_moments(double* v, int L) {
  // v[r] holds <lambda^r, lambda^0> on entry and q^(r+2) on exit.
  for (int r = 0; r <= L; ++r) {
    double s = v[r];
    for (int t = 0; t < r; ++t) s -= binom(r, t) * v[t];
    v[r] = s;
  }
}

void moments_to_dots(double* v, int L) {
  for (int r = L; r >= 0; --r) {
    double s = 0.0;
    for (int t = 0; t <= r; ++t) s += binom(r, t) * v[t];
    v[r] = s;
  }
}

MomentEstimates moment_estimates(const EmbeddingTable& emb, bool symmetrize) {
  if (emb.layers.size() != static_cast<std::size_t>(emb.L) + 1) {
    throw ParameterError("embedding table is incomplete");
  }
  MomentEstimates out;
  out.n = emb.n;
  out.L = emb.L;
  out.symmetrized = symmetrize;
  const int w = out.width();
  out.values.assign(static_cast<std::size_t>(out.pair_count()) * w, 0.0);

  const RowMatrix& base = emb.layers[0];
  for (int r = 0; r <= emb.L; ++r) {
    Eigen::MatrixXd D = emb.layers[r] * base.transpose();
    std::int64_t p = 0;
    for (int i = 0; i < emb.n; ++i) {
      for (int j = i + 1; j < emb.n; ++j, ++p) {
        out.values[static_cast<std::size_t>(p * w + r)] =
            symmetrize ? 0.5 * (D(i, j) + D(j, i)) : D(i, j);
      }
    }
  }
  for (std::int64_t p = 0; p < out.pair_count(); ++p) dots_to_moments(out.row(p), emb.L);
  return out;
}

std::vector<double> pair_moments(const EmbeddingTable& emb, const std::vector<std::pair<int, int>>& pairs,
                                 bool symmetrize) {
  const int w = emb.L + 1;
  std::vector<double> out(pairs.size() * static_cast<std::size_t>(w));
  const RowMatrix& base = emb.layers[0];
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    if (i == j || i < 0 || j < 0 || i >= emb.n || j >= emb.n) throw ParameterError("invalid pair");
    double* v = out.data() + p * w;
    for (int r = 0; r <= emb.L; ++r) {
      double dij = emb.layers[r].row(i).dot(base.row(j));
      v[r] = symmetrize ? 0.5 * (dij + emb.layers[r].row(j).dot(base.row(i))) : dij;
    }
    dots_to_moments(v, emb.L);
  }
  return out;
}

}  // namespace lggnn
