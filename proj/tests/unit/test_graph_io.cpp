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
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "common/errors.hpp"
#include "graphon/graphon_model.hpp"
#include "graphon/sampled_graph.hpp"
#include "test_util.hpp"

using namespace lggnn;

TEST_SUITE("graph_io") {

TEST_CASE("edge list parsing") {
  const auto g = parse_edge_list("0 1\n1 2");
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_latents());
  CHECK(g.rho == doctest::Approx(2.0 / 3.0));

  const auto loop = parse_edge_list("0 1\n2 2\n1 2\n");
  CHECK(loop.self_loops_dropped == 1);
  CHECK(loop.edge_count() == 2);

  const auto dup = parse_edge_list("# comment\n0 1\n1 0\n0 1 # trailing\n\n");
  CHECK(dup.edge_count() == 1);
  CHECK(dup.duplicates_merged == 2);

  // Sparse ids are remapped in ascending order.
  const auto sparse = parse_edge_list("10 30\n30 20\n");
  CHECK(sparse.n == 3);
  CHECK(sparse.vertex_ids == std::vector<std::int64_t>{10, 20, 30});
  CHECK(sparse.has_edge(0, 2));
  CHECK(sparse.has_edge(1, 2));
}

TEST_CASE("malformed lines report their line number") {
  for (auto [text, line] : {std::pair{"0 1\n1 x\n", 2}, std::pair{"0 1\n\n1 2 3\n", 3}, std::pair{"-1 2\n", 1},
                            std::pair{"0 1\n2\n", 2}}) {
    try {
      parse_edge_list(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == static_cast<std::size_t>(line));
    }
  }
  CHECK(parse_edge_list("# nothing\n").n == 0);
  CHECK_THROWS_AS(load_edge_list("/nonexistent/edges.txt"), IoError);
}

TEST_CASE("save and load round trip keeps isolated vertices") {
  const auto g = sample_graph(GraphonModel::ssbm(3, 0.05, 0.01), 60, 1.0, 4);
  const auto path = (std::filesystem::temp_directory_path() / "lggnn_roundtrip.txt").string();
  save_edge_list(g, path);
  const auto back = load_edge_list(path);
  std::filesystem::remove(path);
  CHECK(back.n == g.n);
  CHECK(back.adj == g.adj);
  CHECK(back.offsets == g.offsets);
}

TEST_CASE("adjacency views agree") {
  const auto g = test::lcg_graph(30, 0.2, 3);
  const auto A = g.dense_adjacency();
  const auto S = g.adjacency();
  CHECK((Eigen::MatrixXd(S) - A).cwiseAbs().maxCoeff() == 0.0);
  CHECK((A - A.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(A.diagonal().cwiseAbs().maxCoeff() == 0.0);
  CHECK(A.sum() / 2 == doctest::Approx(static_cast<double>(g.edge_count())));
  const auto edges = g.edges();
  CHECK(static_cast<std::int64_t>(edges.size()) == g.edge_count());
  for (auto [u, v] : edges) CHECK(u < v);
  CHECK(g.density() == doctest::Approx(2.0 * g.edge_count() / (30.0 * 29.0)));
}

TEST_CASE("Cora edge list statistics when available") {
  const char* env = std::getenv("LGGNN_CORA_PATH");
  if (!env || !std::filesystem::exists(env)) {
    MESSAGE("LGGNN_CORA_PATH not set; skipping");
    return;
  }
  const auto g = load_edge_list(env);
  CHECK(g.n == 2708);
  CHECK(g.edge_count() == 5278);
}

}  // TEST_SUITE
