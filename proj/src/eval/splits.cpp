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
#include "eval/splits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "common/errors.hpp"
#include "common/rng.hpp"

namespace lggnn {
namespace {

std::uint64_t pair_counter(int n, int i, int j) {
  return static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(j);
}

void check_fraction(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("holdout fraction must lie in (0,1)");
}

PairList concat(const PairList& a, const PairList& b) {
  PairList out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void subsample(PairList& pairs, std::size_t keep, RngStream& rng) {
  if (pairs.size() <= keep) return;
  rng.shuffle(pairs);
  pairs.resize(keep);
  std::sort(pairs.begin(), pairs.end());
}

// Sample `count` distinct pairs uniformly from those accepted by `accept`,
// skipping `exclude` (sorted).
template <class Accept>
PairList sample_pairs(int n, std::size_t count, std::int64_t universe, RngStream& rng,
                      const PairList& exclude, Accept&& accept) {
  if (static_cast<std::int64_t>(count + exclude.size()) > universe) {
    throw EmptyDataError("not enough candidate pairs to sample negatives");
  }
  PairList out;
  std::vector<std::pair<int, int>> seen;
  while (out.size() < count) {
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (!accept(i, j)) continue;
    std::pair<int, int> pr{i, j};
    if (std::binary_search(exclude.begin(), exclude.end(), pr)) continue;
    auto it = std::lower_bound(seen.begin(), seen.end(), pr);
    if (it != seen.end() && *it == pr) continue;
    seen.insert(it, pr);
    out.push_back(pr);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// True when u and v stay connected after deleting edge (u, v) from `adj`.
bool connected_without(const std::vector<std::vector<int>>& adj, int u, int v) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if ((x == u && y == v) || (x == v && y == u)) continue;
      if (y == v) return true;
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

void erase_neighbor(std::vector<int>& list, int x) {
  list.erase(std::find(list.begin(), list.end(), x));
}

}  // namespace

PairList SplitSpec::train_pairs() const { return concat(train_pos, train_neg); }
PairList SplitSpec::val_pairs() const { return concat(val_pos, val_neg); }
PairList SplitSpec::test_pairs() const { return concat(test_pos, test_neg); }

EdgeList SplitSpec::inference_graph_edges() const {
  if (protocol == SplitProtocol::kInSample) return train_pos;
  return concat(train_pos, message_passing);
}

SplitSpec in_sample_split(const SampledGraph& graph, const SplitOptions& opts) {
  check_fraction(opts.p);
  if (graph.edge_count() == 0) throw EmptyDataError("in-sample split needs at least one edge");
  const double p = opts.p;
  const CounterRng root = CounterRng(opts.seed).substream(streams::kSplit);
  const CounterRng coin = root.substream(1);
  RngStream order(root.substream(2));

  SplitSpec s;
  s.protocol = SplitProtocol::kInSample;
  s.p = p;
  s.seed = opts.seed;

  const int n = graph.n;
  EdgeList edges = graph.edges();
  PairList removed;
  if (!opts.keep_connected) {
    for (auto [i, j] : edges) {
      (coin.uniform(pair_counter(n, i, j)) < p ? removed : s.train_pos).emplace_back(i, j);
    }
  } else {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
      auto nb = graph.neighbors(i);
      adj[i].assign(nb.begin(), nb.end());
    }
    EdgeList visit = edges;
    order.shuffle(visit);
    std::vector<char> gone(visit.size(), 0);
    for (std::size_t e = 0; e < visit.size(); ++e) {
      auto [i, j] = visit[e];
      if (coin.uniform(pair_counter(n, i, j)) >= p) continue;
      if (!connected_without(adj, i, j)) {
        ++s.removals_rejected;
        continue;
      }
      erase_neighbor(adj[i], j);
      erase_neighbor(adj[j], i);
      gone[e] = 1;
      removed.emplace_back(i, j);
    }
    for (std::size_t e = 0; e < visit.size(); ++e) {
      if (!gone[e]) s.train_pos.push_back(visit[e]);
    }
    std::sort(s.train_pos.begin(), s.train_pos.end());
    std::sort(removed.begin(), removed.end());
  }

  order.shuffle(removed);
  const std::size_t half = removed.size() / 2;
  s.val_pos.assign(removed.begin(), removed.begin() + static_cast<std::ptrdiff_t>(half));
  s.test_pos.assign(removed.begin() + static_cast<std::ptrdiff_t>(half), removed.end());
  std::sort(s.val_pos.begin(), s.val_pos.end());
  std::sort(s.test_pos.begin(), s.test_pos.end());

  if (opts.negative_ratio > 0.0) {
    RngStream neg(root.substream(3));
    auto want = [&](std::size_t pos) {
      return static_cast<std::size_t>(std::llround(opts.negative_ratio * static_cast<double>(pos)));
    };
    const std::int64_t non_edges = static_cast<std::int64_t>(n) * (n - 1) / 2 - graph.edge_count();
    auto in_test = [&](int i, int j) {
      return std::binary_search(s.test_pos.begin(), s.test_pos.end(), std::make_pair(i, j));
    };
    // Training negatives come from N u E_test, held-out negatives from N.
    s.train_neg = sample_pairs(n, want(s.train_pos.size()),
                               non_edges + static_cast<std::int64_t>(s.test_pos.size()), neg, {},
                               [&](int i, int j) { return !graph.has_edge(i, j) || in_test(i, j); });
    auto non_edge = [&](int i, int j) { return !graph.has_edge(i, j); };
    PairList used = s.train_neg;
    s.val_neg = sample_pairs(n, want(s.val_pos.size()), non_edges, neg, used, non_edge);
    used.insert(used.end(), s.val_neg.begin(), s.val_neg.end());
    std::sort(used.begin(), used.end());
    s.test_neg = sample_pairs(n, want(s.test_pos.size()), non_edges, neg, used, non_edge);
  } else {
    const CounterRng part = root.substream(4);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        bool is_edge = graph.has_edge(i, j);
        bool is_test = is_edge && std::binary_search(s.test_pos.begin(), s.test_pos.end(), std::make_pair(i, j));
        if (is_edge && !is_test) continue;
        double u = part.uniform(pair_counter(n, i, j));
        if (u < 1.0 - p) {
          s.train_neg.emplace_back(i, j);
        } else if (!is_test) {
          (u < 1.0 - p / 2.0 ? s.val_neg : s.test_neg).emplace_back(i, j);
        }
      }
    }
  }

  if (n > 2000) {
    RngStream sub(CounterRng(opts.seed).substream(streams::kSubsample));
    const auto cap = static_cast<std::size_t>(opts.max_test_pairs);
    if (s.test_pos.size() + s.test_neg.size() > cap) {
      s.subsampled = true;
      double frac = static_cast<double>(cap) / static_cast<double>(s.test_pos.size() + s.test_neg.size());
      subsample(s.test_pos, static_cast<std::size_t>(frac * static_cast<double>(s.test_pos.size())), sub);
      subsample(s.test_neg, cap - s.test_pos.size(), sub);
    }
  }
  return s;
}

SplitSpec out_sample_split(const SampledGraph& graph, const SplitOptions& opts) {
  check_fraction(opts.p);
  const double p = opts.p;
  const int n = graph.n;
  const CounterRng root = CounterRng(opts.seed).substream(streams::kSplit);
  RngStream order(root.substream(2));

  SplitSpec s;
  s.protocol = SplitProtocol::kOutSample;
  s.p = p;
  s.seed = opts.seed;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  order.shuffle(perm);
  const auto n2 = static_cast<int>(std::llround(p * n));
  if (n2 <= 0) throw EmptyDataError("holdout vertex set V2 is empty");
  if (n2 >= n) throw EmptyDataError("training vertex set V1 is empty");
  s.v2.assign(perm.begin(), perm.begin() + n2);
  s.v1.assign(perm.begin() + n2, perm.end());
  std::sort(s.v1.begin(), s.v1.end());
  std::sort(s.v2.begin(), s.v2.end());
  std::vector<char> in_v2(n, 0);
  for (int v : s.v2) in_v2[v] = 1;

  const CounterRng g1_coin = root.substream(5);
  const CounterRng test_coin = root.substream(6);
  for (int i = 0; i < n; ++i) {
    auto nb = graph.neighbors(i);
    auto it = std::upper_bound(nb.begin(), nb.end(), i);
    for (int j = i + 1; j < n; ++j) {
      bool edge = it != nb.end() && *it == j;
      if (edge) ++it;
      const std::uint64_t c = pair_counter(n, i, j);
      if (!in_v2[i] && !in_v2[j]) {
        bool train = g1_coin.uniform(c) < 1.0 - p;
        if (edge) {
          (train ? s.train_pos : s.val_pos).emplace_back(i, j);
        } else {
          (train ? s.train_neg : s.val_neg).emplace_back(i, j);
        }
      } else {
        bool test = test_coin.uniform(c) < p;
        if (edge) {
          (test ? s.test_pos : s.message_passing).emplace_back(i, j);
        } else if (test) {
          s.test_neg.emplace_back(i, j);
        }
      }
    }
  }

  if (n > 2000) {
    RngStream sub(CounterRng(opts.seed).substream(streams::kSubsample));
    const auto cap = static_cast<std::size_t>(opts.max_test_pairs);
    const std::size_t total = s.test_pos.size() + s.test_neg.size();
    if (total > cap) {
      s.subsampled = true;
      double frac = static_cast<double>(cap) / static_cast<double>(total);
      subsample(s.test_pos, static_cast<std::size_t>(frac * static_cast<double>(s.test_pos.size())), sub);
      subsample(s.test_neg, cap - s.test_pos.size(), sub);
    }
  }
  return s;
}

}  // namespace lggnn
