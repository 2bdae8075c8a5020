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
#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "common/errors.hpp"
#include "core/embedding.hpp"
#include "core/moment_estimates.hpp"
#include "graphon/graphon_model.hpp"
#include "test_util.hpp"

using namespace lggnn;

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// What^(m) = A^m / (n-1)^(m-1), m >= 1.
Eigen::MatrixXd walk_moment(const Eigen::MatrixXd& A, int m) {
  Eigen::MatrixXd M = A;
  for (int r = 1; r < m; ++r) M = M * A;
  return M / std::pow(static_cast<double>(A.rows() - 1), m - 1);
}

}  // namespace

TEST_SUITE("embedding") {

TEST_CASE("initial features") {
  const auto Z = init_features(1000, 100, 42);
  CHECK(Z.rows() == 1000);
  CHECK(Z.cols() == 100);
  CHECK(std::abs(Z.rowwise().squaredNorm().mean() - 1.0) < 0.05);
  const auto Z2 = init_features(1000, 100, 42);
  CHECK((Z - Z2).cwiseAbs().maxCoeff() == 0.0);
  const auto Z3 = init_features(1000, 100, 43);
  CHECK((Z - Z3).cwiseAbs().maxCoeff() > 0.0);
  double acc = 0.0;
  int count = 0;
  for (int i = 0; i < 1000; i += 7) {
    for (int j = i + 1; j < 1000; j += 13) {
      acc += Z.row(i).dot(Z.row(j));
      ++count;
    }
  }
  CHECK(std::abs(acc / count) < 0.02);
  CHECK_THROWS_AS(init_features(10, 0, 1), ParameterError);
  CHECK(default_dimension(1.0) == 64);
  CHECK(default_dimension(0.01) == 400);
  CHECK(default_dimension(0.03) == 134);
}

TEST_CASE("empty graph and path graph") {
  const auto empty = SampledGraph::from_edges(5, {});
  const auto emb = embed(empty, 3, 8, 1);
  for (const auto& layer : emb.layers) CHECK(layer.cwiseAbs().maxCoeff() == 0.0);
  const auto q = moment_estimates(emb);
  for (double v : q.values) CHECK(v == 0.0);

  const auto path = test::path_graph(3);
  const auto Z = init_features(3, 5, 9);
  const auto pe = embed_features(path, 1, Z);
  const Eigen::RowVectorXd want = (Z.row(0) + Z.row(2)) / std::sqrt(2.0);
  CHECK((pe.layers[0].row(1) - want).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(pe.layers[0].row(0).isApprox(Z.row(1) / std::sqrt(2.0)));
}

TEST_CASE("identity-weight expansion over matrix powers") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 12 + trial;
    const auto g = test::lcg_graph(n, 0.3, 100 + trial);
    const auto Z = init_features(n, 6, trial);
    const auto emb = embed_features(g, 4, Z);
    const Eigen::MatrixXd A = g.dense_adjacency();
    const Eigen::MatrixXd Zd = Z;
    for (int k = 0; k <= 4; ++k) {
      Eigen::MatrixXd coef = Eigen::MatrixXd::Zero(n, n);
      for (int q = 0; q <= k; ++q) coef += binom(k, q) * walk_moment(A, q + 1);
      const Eigen::MatrixXd want = coef * Zd / std::sqrt(static_cast<double>(n - 1));
      const Eigen::MatrixXd got = emb.layers[k];
      const double scale = std::max(want.cwiseAbs().maxCoeff(), 1e-300);
      CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-9 * scale);
    }
  }
}

TEST_CASE("linearity in the features") {
  const auto g = test::lcg_graph(20, 0.3, 5);
  const auto Z = init_features(20, 4, 3);
  const auto e1 = embed_features(g, 3, Z);
  const RowMatrix Z2 = Z * 2.0;
  const auto e2 = embed_features(g, 3, Z2);
  for (int k = 0; k <= 3; ++k) CHECK((e2.layers[k] - 2.0 * e1.layers[k]).cwiseAbs().maxCoeff() == 0.0);
  const RowMatrix Zn = Z * -0.5;
  const auto e3 = embed_features(g, 3, Zn);
  for (int k = 0; k <= 3; ++k) CHECK((e3.layers[k] + 0.5 * e1.layers[k]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("moment recursion and reconstruction") {
  const auto g = test::lcg_graph(15, 0.4, 8);
  const auto emb = embed(g, 3, 7, 2);
  const auto raw = moment_estimates(emb, false);
  const auto sym = moment_estimates(emb, true);
  CHECK(raw.pair_count() == 105);
  for (int i = 0; i < 15; ++i) {
    for (int j = i + 1; j < 15; ++j) {
      auto dot = [&](int a, int b, int r) { return emb.layers[r].row(a).dot(emb.layers[0].row(b)); };
      // Direct recursion: q^(k) = <l_i^(k-2), l_j^0> - sum_{r<k-2} C(k-2, r) q^(r+2).
      std::vector<double> q(4);
      for (int k = 2; k <= 5; ++k) {
        double v = dot(i, j, k - 2);
        for (int r = 0; r < k - 2; ++r) v -= binom(k - 2, r) * q[r];
        q[k - 2] = v;
        CHECK(raw.q(i, j, k) == doctest::Approx(v).epsilon(1e-12));
        CHECK(raw.q(j, i, k) == raw.q(i, j, k));
      }
      for (int k = 2; k <= 5; ++k) {
        double recon = 0.0;
        for (int r = 0; r <= k - 2; ++r) recon += binom(k - 2, r) * raw.q(i, j, r + 2);
        const double d = dot(i, j, k - 2);
        CHECK(std::abs(recon - d) <= 1e-9 * std::max(1.0, std::abs(d)));
      }
      // Symmetrized value averages the two orientations.
      std::vector<double> qt(4);
      for (int k = 2; k <= 5; ++k) {
        double v = dot(j, i, k - 2);
        for (int r = 0; r < k - 2; ++r) v -= binom(k - 2, r) * qt[r];
        qt[k - 2] = v;
        CHECK(sym.q(i, j, k) == doctest::Approx(0.5 * (q[k - 2] + v)).epsilon(1e-12));
      }
    }
  }
  for (std::int64_t p = 0; p < raw.pair_count(); ++p) {
    auto [i, j] = MomentEstimates::pair_at(15, p);
    CHECK(MomentEstimates::pair_index(15, i, j) == p);
  }
  std::vector<double> v{1.0, 2.0, -3.0, 0.5};
  auto w = v;
  dots_to_moments(w.data(), 3);
  moments_to_dots(w.data(), 3);
  for (int r = 0; r < 4; ++r) CHECK(w[r] == doctest::Approx(v[r]));

  std::vector<std::pair<int, int>> pairs{{0, 5}, {7, 2}, {3, 14}};
  const auto rows = pair_moments(emb, pairs, true);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (int k = 2; k <= 5; ++k) {
      CHECK(rows[p * 4 + (k - 2)] == doctest::Approx(sym.q(pairs[p].first, pairs[p].second, k)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(sym.q(1, 1, 2), ParameterError);
  CHECK_THROWS_AS(sym.q(0, 1, 6), ParameterError);
}

TEST_CASE("expected dot-product oracle") {
  const auto k3 = test::complete_graph(3);
  const auto o = expected_dotproduct_oracle(k3, 0, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(o(i, j) == doctest::Approx(0.5));

  const auto g = test::lcg_graph(12, 0.4, 1);
  const Eigen::MatrixXd A = g.dense_adjacency();
  const auto o00 = expected_dotproduct_oracle(g, 0, 0);
  CHECK((o00 - walk_moment(A, 2)).cwiseAbs().maxCoeff() < 1e-12);
  const auto o10 = expected_dotproduct_oracle(g, 1, 0);
  CHECK((o10 - walk_moment(A, 2) - walk_moment(A, 3)).cwiseAbs().maxCoeff() < 1e-12);
  const auto o21 = expected_dotproduct_oracle(g, 2, 1);
  const Eigen::MatrixXd want =
      walk_moment(A, 2) + 3 * walk_moment(A, 3) + 3 * walk_moment(A, 4) + walk_moment(A, 5);
  CHECK((o21 - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("moment estimators are unbiased for empirical moments") {
  const auto g = sample_graph(GraphonModel::ssbm(6, 0.8, 0.2), 20, 1.0, 3);
  const Eigen::MatrixXd A = g.dense_adjacency();
  const int M = 200;
  const int L = 2;
  const std::int64_t P = 190;
  std::vector<double> sum(P * 3, 0.0), sq(P * 3, 0.0);
  for (int s = 0; s < M; ++s) {
    const auto q = moment_estimates(embed(g, L, 16, 1000 + s));
    for (std::size_t t = 0; t < q.values.size(); ++t) {
      sum[t] += q.values[t];
      sq[t] += q.values[t] * q.values[t];
    }
  }
  int worst_outside = 0;
  for (int k = 2; k <= 4; ++k) {
    const auto W = walk_moment(A, k);
    for (std::int64_t p = 0; p < P; ++p) {
      auto [i, j] = MomentEstimates::pair_at(20, p);
      const std::size_t t = static_cast<std::size_t>(p * 3 + (k - 2));
      const double mean = sum[t] / M;
      const double sd = std::sqrt(std::max(0.0, (sq[t] - M * mean * mean) / (M - 1)));
      const double se = sd / std::sqrt(static_cast<double>(M));
      if (std::abs(mean - W(i, j)) > 3.0 * se + 1e-12) ++worst_outside;
    }
  }
  // 570 comparisons at three standard errors: about 1.5 exceedances expected.
  CHECK(worst_outside <= 6);
}

TEST_CASE("no oversmoothing collapse of the second moment") {
  const auto g = sample_graph(GraphonModel::ssbm(6, 0.8, 0.2), 500, 1.0, 21);
  for (int L = 1; L <= 6; ++L) {
    const auto emb = embed(g, L, 64, 5);
    const auto q = moment_estimates(emb);
    double m = 0.0, m2 = 0.0;
    const std::int64_t P = q.pair_count();
    for (std::int64_t p = 0; p < P; ++p) {
      const double v = q.row(p)[0];
      m += v;
      m2 += v * v;
    }
    m /= P;
    const double var = m2 / P - m * m;
    CHECK(var > 1e-4);
    for (double v : q.values) REQUIRE(std::isfinite(v));
  }
}

TEST_CASE("csv export") {
  const auto g = test::path_graph(4);
  const auto emb = embed(g, 1, 3, 1);
  const auto path = (std::filesystem::temp_directory_path() / "lggnn_emb.csv").string();
  write_embedding_csv(emb, path);
  std::ifstream in(path);
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "vertex,l0_0,l0_1,l0_2,l1_0,l1_1,l1_2");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
