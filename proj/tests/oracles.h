// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the graph container.

#ifndef MCSRECRUIT_TESTS_ORACLES_H_
#define MCSRECRUIT_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mcsrecruit/social_graph.h"
#include "mcsrecruit/types.h"

namespace mcsrecruit::testing {

using DirectedEdge = std::pair<NodeId, NodeId>;

inline std::vector<DirectedEdge> DirectedEdges(const SocialGraph& g) {
  std::vector<DirectedEdge> edges;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) edges.emplace_back(u, v);
  }
  return edges;
}

// Round-by-round cascade for one fixed outcome of every edge attempt.
// Users reached in the same round join in ascending id order until `limit`
// users are active.
inline std::vector<NodeId> CascadeForOutcome(
    const SocialGraph& g, const std::vector<NodeId>& seeds,
    const std::set<DirectedEdge>& live, int64_t limit) {
  std::vector<bool> active(g.num_nodes(), false);
  std::vector<NodeId> order;
  for (NodeId s : seeds) {
    if (!active[s]) {
      active[s] = true;
      order.push_back(s);
    }
  }
  std::vector<NodeId> frontier = order;
  while (!frontier.empty() && static_cast<int64_t>(order.size()) < limit) {
    std::set<NodeId> reached;
    for (NodeId u : frontier) {
      for (NodeId v : g.neighbors(u)) {
        if (!active[v] && live.count({u, v})) reached.insert(v);
      }
    }
    frontier.clear();
    for (NodeId v : reached) {
      if (static_cast<int64_t>(order.size()) == limit) break;
      active[v] = true;
      order.push_back(v);
      frontier.push_back(v);
    }
  }
  return order;
}

// Exact activation probabilities of the extended IC cascade when every
// attempt on user v succeeds with accept[v]: sums over all 2^(directed edges)
// attempt outcomes.
inline std::vector<double> ExactIcActivation(const SocialGraph& g,
                                             const std::vector<NodeId>& seeds,
                                             const std::vector<double>& accept,
                                             int64_t limit) {
  const auto edges = DirectedEdges(g);
  std::vector<double> prob(g.num_nodes(), 0.0);
  for (uint64_t mask = 0; mask < (uint64_t{1} << edges.size()); ++mask) {
    std::set<DirectedEdge> live;
    double weight = 1.0;
    for (size_t e = 0; e < edges.size(); ++e) {
      const double p = accept[edges[e].second];
      if (mask >> e & 1) {
        live.insert(edges[e]);
        weight *= p;
      } else {
        weight *= 1.0 - p;
      }
    }
    if (weight == 0.0) continue;
    for (NodeId v : CascadeForOutcome(g, seeds, live, limit)) prob[v] += weight;
  }
  return prob;
}

// Unbudgeted IC through live-edge reachability: v is active iff some seed
// reaches it along edges whose attempt succeeded.
inline std::vector<double> ExactIcReachability(const SocialGraph& g,
                                               const std::vector<NodeId>& seeds,
                                               const std::vector<double>& accept) {
  const auto edges = DirectedEdges(g);
  const int n = g.num_nodes();
  std::vector<double> prob(n, 0.0);
  for (uint64_t mask = 0; mask < (uint64_t{1} << edges.size()); ++mask) {
    double weight = 1.0;
    std::vector<std::vector<NodeId>> out(n);
    for (size_t e = 0; e < edges.size(); ++e) {
      const double p = accept[edges[e].second];
      if (mask >> e & 1) {
        out[edges[e].first].push_back(edges[e].second);
        weight *= p;
      } else {
        weight *= 1.0 - p;
      }
    }
    if (weight == 0.0) continue;
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack(seeds.begin(), seeds.end());
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      if (seen[u]) continue;
      seen[u] = true;
      for (NodeId v : out[u]) stack.push_back(v);
    }
    for (int v = 0; v < n; ++v) {
      if (seen[v]) prob[v] += weight;
    }
  }
  return prob;
}

// Unbudgeted deterministic LT: iterate until no user's share of active
// friends reaches its threshold.
inline std::set<NodeId> LtFixedPoint(const SocialGraph& g,
                                     const std::vector<NodeId>& seeds,
                                     const std::vector<double>& threshold) {
  std::set<NodeId> active(seeds.begin(), seeds.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (active.count(v) || g.degree(v) == 0) continue;
      int friends = 0;
      for (NodeId u : g.neighbors(v)) friends += active.count(u) ? 1 : 0;
      if (static_cast<double>(friends) / g.degree(v) >= threshold[v]) {
        active.insert(v);
        changed = true;
      }
    }
  }
  return active;
}

// Expected fraction of covered cells when user v joins independently with
// probability accept[v] and then covers cell c with probability alpha[v][c]:
// enumerates all 2^users join outcomes.
inline double ExactExpectedCoverage(
    const std::vector<double>& accept,
    const std::vector<std::vector<double>>& alpha) {
  const size_t users = accept.size();
  const size_t cells = alpha.empty() ? 0 : alpha[0].size();
  double total = 0.0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << users); ++mask) {
    double weight = 1.0;
    for (size_t v = 0; v < users; ++v) {
      weight *= (mask >> v & 1) ? accept[v] : 1.0 - accept[v];
    }
    double covered = 0.0;
    for (size_t c = 0; c < cells; ++c) {
      double miss = 1.0;
      for (size_t v = 0; v < users; ++v) {
        if (mask >> v & 1) miss *= 1.0 - alpha[v][c];
      }
      covered += 1.0 - miss;
    }
    total += weight * covered;
  }
  return cells == 0 ? 0.0 : total / static_cast<double>(cells);
}

}  // namespace mcsrecruit::testing

#endif  // MCSRECRUIT_TESTS_ORACLES_H_
