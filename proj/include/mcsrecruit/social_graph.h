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

#ifndef MCSRECRUIT_SOCIAL_GRAPH_H_
#define MCSRECRUIT_SOCIAL_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mcsrecruit/types.h"

namespace mcsrecruit {

// Undirected friendship graph in CSR form. Symmetric, no self-loops, no
// duplicate edges; neighbor lists are sorted. Immutable after construction.
class SocialGraph {
 public:
  SocialGraph() = default;

  // Builds a graph over `users` (need not be sorted or unique) plus every
  // endpoint of `edges`. Self-loops are dropped, duplicates merged.
  static SocialGraph FromEdges(std::vector<UserId> users,
                               std::span<const std::pair<UserId, UserId>> edges);

  int num_nodes() const { return static_cast<int>(user_ids_.size()); }
  int64_t num_edges() const { return static_cast<int64_t>(targets_.size()) / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v],
            static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(NodeId v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool HasEdge(NodeId a, NodeId b) const;

  UserId user_id(NodeId v) const { return user_ids_[v]; }
  std::span<const UserId> user_ids() const { return user_ids_; }
  std::optional<NodeId> NodeOf(UserId user) const;

  // Vertex-induced subgraph on `keep` (any order; duplicates ignored).
  SocialGraph InducedSubgraph(std::span<const NodeId> keep) const;

  // Each undirected edge once, as (user, user) with first < second.
  std::vector<std::pair<UserId, UserId>> EdgeList() const;

 private:
  std::vector<UserId> user_ids_;  // ascending
  std::vector<int64_t> offsets_{0};
  std::vector<NodeId> targets_;
};

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_SOCIAL_GRAPH_H_
