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

#include "mcsrecruit/social_graph.h"

#include <algorithm>

namespace mcsrecruit {

SocialGraph SocialGraph::FromEdges(
    std::vector<UserId> users,
    std::span<const std::pair<UserId, UserId>> edges) {
  for (const auto& [a, b] : edges) {
    users.push_back(a);
    users.push_back(b);
  }
  std::sort(users.begin(), users.end());
  users.erase(std::unique(users.begin(), users.end()), users.end());

  SocialGraph g;
  g.user_ids_ = std::move(users);
  const auto index = [&g](UserId u) {
    return static_cast<NodeId>(
        std::lower_bound(g.user_ids_.begin(), g.user_ids_.end(), u) -
        g.user_ids_.begin());
  };

  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    const NodeId x = index(a);
    const NodeId y = index(b);
    arcs.emplace_back(x, y);
    arcs.emplace_back(y, x);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  const int n = g.num_nodes();
  g.offsets_.assign(n + 1, 0);
  for (const auto& arc : arcs) ++g.offsets_[arc.first + 1];
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.reserve(arcs.size());
  for (const auto& arc : arcs) g.targets_.push_back(arc.second);
  return g;
}

bool SocialGraph::HasEdge(NodeId a, NodeId b) const {
  const auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<NodeId> SocialGraph::NodeOf(UserId user) const {
  const auto it = std::lower_bound(user_ids_.begin(), user_ids_.end(), user);
  if (it == user_ids_.end() || *it != user) return std::nullopt;
  return static_cast<NodeId>(it - user_ids_.begin());
}

SocialGraph SocialGraph::InducedSubgraph(std::span<const NodeId> keep) const {
  std::vector<bool> kept(num_nodes(), false);
  std::vector<UserId> users;
  for (NodeId v : keep) {
    if (kept[v]) continue;
    kept[v] = true;
    users.push_back(user_ids_[v]);
  }
  std::vector<std::pair<UserId, UserId>> edges;
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (!kept[v]) continue;
    for (NodeId w : neighbors(v)) {
      if (w > v && kept[w]) edges.emplace_back(user_ids_[v], user_ids_[w]);
    }
  }
  return FromEdges(std::move(users), edges);
}

std::vector<std::pair<UserId, UserId>> SocialGraph::EdgeList() const {
  std::vector<std::pair<UserId, UserId>> edges;
  edges.reserve(targets_.size() / 2);
  for (NodeId v = 0; v < num_nodes(); ++v) {
    for (NodeId w : neighbors(v)) {
      if (w > v) edges.emplace_back(user_ids_[v], user_ids_[w]);
    }
  }
  return edges;
}

}  // namespace mcsrecruit
