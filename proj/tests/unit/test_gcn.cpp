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

#include "doctest.h"
#include "common/errors.hpp"
#include "gcn/gcn_baseline.hpp"
#include "graphon/graphon_model.hpp"
#include "test_util.hpp"

using namespace lggnn;

TEST_SUITE("gcn") {

TEST_CASE("empty graph keeps only the self term") {
  const auto g = SampledGraph::from_edges(5, {});
  GcnConfig cfg;
  cfg.L = 3;
  cfg.d = 4;
  cfg.weight_mode = WeightMode::kFixedRandom;
  cfg.weight_seed = 7;
  const auto out = gcn_forward(g, cfg, 2);
  Eigen::MatrixXd want = out.embeddings.layers[0];
  for (int k = 1; k <= 3; ++k) {
    want = want * out.self_weights[k - 1].transpose();
    CHECK((Eigen::MatrixXd(out.embeddings.layers[k]) - want).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(out.messages.layers[k].cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("two connected vertices by hand") {
  const auto g = SampledGraph::from_edges(2, {{0, 1}});
  GcnConfig cfg;
  cfg.L = 1;
  cfg.d = 1;
  const auto out = gcn_forward(g, cfg, 5);
  const double a = out.embeddings.layers[0](0, 0);
  const double b = out.embeddings.layers[0](1, 0);
  CHECK(out.embeddings.layers[1](0, 0) == doctest::Approx(a + b).epsilon(1e-15));
  CHECK(out.embeddings.layers[1](1, 0) == doctest::Approx(b + a).epsilon(1e-15));
}

TEST_CASE("relu output is nonnegative") {
  const auto g = test::lcg_graph(40, 0.2, 3);
  GcnConfig cfg;
  cfg.L = 3;
  cfg.d = 8;
  cfg.activation = Activation::kRelu;
  cfg.weight_mode = WeightMode::kFixedRandom;
  const auto out = gcn_forward(g, cfg, 1);
  for (int k = 1; k <= 3; ++k) CHECK(out.embeddings.layers[k].minCoeff() >= 0.0);
  CHECK(out.embeddings.layers[0].minCoeff() < 0.0);
}

TEST_CASE("regular graphs aggregate by neighbor averaging") {
  const auto g = test::cycle_graph(9);
  GcnConfig cfg;
  cfg.L = 2;
  cfg.d = 3;
  const auto out = gcn_forward(g, cfg, 4);
  for (int k = 1; k <= 2; ++k) {
    const auto& prev = out.embeddings.layers[k - 1];
    for (int i = 0; i < 9; ++i) {
      const Eigen::RowVectorXd want = 0.5 * (prev.row((i + 1) % 9) + prev.row((i + 8) % 9));
      CHECK((out.messages.layers[k].row(i) - want).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("weight generation respects the operator-norm cap") {
  const auto g = test::lcg_graph(20, 0.3, 1);
  GcnConfig cfg;
  cfg.L = 3;
  cfg.d = 16;
  cfg.weight_mode = WeightMode::kFixedRandom;
  cfg.op_norm_cap = 0.7;
  const auto out = gcn_forward(g, cfg, 1);
  REQUIRE(out.self_weights.size() == 3);
  for (int k = 0; k < 3; ++k) {
    for (const auto* M : {&out.self_weights[k], &out.neighbor_weights[k]}) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(*M);
      CHECK(svd.singularValues()(0) <= 0.7 + 1e-12);
    }
  }
  const auto again = gcn_forward(g, cfg, 1);
  CHECK((again.self_weights[1] - out.self_weights[1]).cwiseAbs().maxCoeff() == 0.0);
  cfg.init_scale = 0.0;
  CHECK_THROWS_AS(gcn_forward(g, cfg, 1), ParameterError);
}

TEST_CASE("initial scale") {
  const auto g = SampledGraph::from_edges(2000, {});
  GcnConfig cfg;
  cfg.L = 0;
  cfg.d = 50;
  cfg.init_scale = 3.0;
  const auto out = gcn_forward(g, cfg, 8);
  CHECK(out.embeddings.layers[0].rowwise().squaredNorm().mean() == doctest::Approx(9.0).epsilon(0.03));
}

TEST_CASE("collapse diagnostic") {
  EmbeddingTable same;
  same.n = 4;
  same.d = 2;
  RowMatrix m(4, 2);
  m << 1.0, 2.0, 1.0, 2.0, 1.0, 2.0, 1.0, 2.0;
  same.layers.push_back(m);
  const auto s = collapse_diagnostic(same);
  CHECK(s[0].spread == 0.0);
  CHECK(s[0].norm_sd == 0.0);

  RowMatrix h(3, 1);
  h << 0.0, 1.0, 5.0;
  EmbeddingTable t;
  t.n = 3;
  t.d = 1;
  t.layers.push_back(h);
  const auto st = collapse_diagnostic(t);
  CHECK(st[0].spread == doctest::Approx(3.0));
  CHECK(st[0].norm_sd == doctest::Approx(std::sqrt(7.0)));

  // Random initial features do not collapse at any size.
  for (int n : {400, 1600}) {
    const auto g = sample_graph(GraphonModel::ssbm(6, 0.8, 0.2), n, 1.0, 3);
    GcnConfig cfg;
    cfg.L = 1;
    cfg.d = 16;
    const auto out = gcn_forward(g, cfg, 3);
    const auto sp = collapse_diagnostic(out.embeddings);
    CHECK(sp[0].spread > 1.0);
  }
}

}  // TEST_SUITE
