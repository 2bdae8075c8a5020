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
#include "oracle/moment_oracle.hpp"

#include <cmath>

#include "common/errors.hpp"

namespace lggnn {

double EmpiricalMoments::at(int k, int i, int j) const {
  if (k < 2 || k > k_max) throw ParameterError("moment order out of range");
  return values[k](i, j);
}

EmpiricalMoments empirical_moments(const SampledGraph& graph, int k_max) {
  if (k_max > kMaxEmpiricalOrder) {
    throw UnsupportedOrderError("empirical moments support k_max <= " +
                                std::to_string(kMaxEmpiricalOrder));
  }
  if (k_max < 2) throw ParameterError("k_max must be >= 2");
  if (graph.n < 2) throw ParameterError("empirical moments need n >= 2");
  const int n = graph.n;
  const double nm1 = static_cast<double>(n - 1);

  EmpiricalMoments out;
  out.n = n;
  out.k_max = k_max;
  out.values.resize(static_cast<std::size_t>(k_max) + 1);
  out.exact = n <= kExactMomentLimit;

  if (out.exact) {
    // Walk counts stay below n^(k-1) <= 3000^7 < 2^127.
    using Wide = __int128;
    const auto nn = static_cast<std::size_t>(n);
    std::vector<Wide> prev(nn * nn, 0), cur(nn * nn, 0);
    for (int i = 0; i < n; ++i) {
      for (int j : graph.neighbors(i)) prev[i * nn + j] = 1;
    }
    for (int k = 2; k <= k_max; ++k) {
      std::fill(cur.begin(), cur.end(), Wide(0));
      for (int i = 0; i < n; ++i) {
        Wide* dst = cur.data() + i * nn;
        for (int l : graph.neighbors(i)) {
          const Wide* src = prev.data() + static_cast<std::size_t>(l) * nn;
          for (std::size_t j = 0; j < nn; ++j) dst[j] += src[j];
        }
      }
      const double denom = std::pow(nm1, k - 1);
      Eigen::MatrixXd M(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = static_cast<double>(cur[i * nn + j]) / denom;
      }
      out.values[k] = std::move(M);
      std::swap(prev, cur);
    }
    return out;
  }

  // Normalizing each step keeps magnitudes O(1).
  const SparseAdjacency A = graph.adjacency();
  Eigen::MatrixXd cur = Eigen::MatrixXd(A);
  for (int k = 2; k <= k_max; ++k) {
    cur = (A * cur) / nm1;
    out.values[k] = cur;
  }
  return out;
}

double rate_constant_a(int k) {
  if (k < 1) throw ParameterError("a_k needs k >= 1");
  const double kd = static_cast<double>(k);
  return std::pow(8.0 * (kd + 2.0), kd) * std::pow(kd, kd + 1.0) * std::sqrt(std::tgamma(kd + 1.0));
}

RateValue rate_r(int n, int d, int m, double rho) {
  if (n < 2) throw ParameterError("rate_r needs n >= 2");
  if (m < 1) throw ParameterError("rate_r needs m >= 1");
  if (d < 1) throw ParameterError("rate_r needs d >= 1");
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0,1]");
  const double logn = std::log(static_cast<double>(n));
  const double root = std::sqrt(static_cast<double>(n - 1));
  RateValue out;
  out.value = -1.0;
  for (int k = 2; k <= m + 1; ++k) {
    double term = std::pow(logn, k) / root *
                  (3.0 * rate_constant_a(k) * std::sqrt(rho) +
                   96.0 * rate_constant_a(k - 1) / std::sqrt(static_cast<double>(d)));
    if (term > out.value) {
      out.value = term;
      out.argmax_k = k;
    }
  }
  return out;
}

}  // namespace lggnn
