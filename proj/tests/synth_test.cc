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

#include "mcsrecruit/synth.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace mcsrecruit {
namespace {

Grid TestGrid() { return Grid::WithCellDegrees(40.0, 40.5, -74.0, -73.5, 0.125, 0.125); }

int CountComponents(const SocialGraph& g) {
  std::vector<bool> seen(g.num_nodes(), false);
  int components = 0;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<NodeId> frontier;
    frontier.push(s);
    seen[s] = true;
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop();
      for (NodeId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
  }
  return components;
}

SynthParams TwoCommunities() {
  SynthParams p;
  p.communities = {{30, 1.0, {}}, {20, 1.0, {}}};
  p.p_out = 0.0;
  return p;
}

TEST(SynthTest, CompleteCommunitiesWithoutBridges) {
  const SyntheticDataset s = Synthesize(TwoCommunities(), TestGrid(), CycleSpec{}, 1);
  const SocialGraph& g = s.dataset.graph;
  ASSERT_EQ(g.num_nodes(), 50);
  EXPECT_EQ(g.num_edges(), 30 * 29 / 2 + 20 * 19 / 2);
  EXPECT_EQ(CountComponents(g), 2);
  for (NodeId v = 0; v < 50; ++v) {
    EXPECT_EQ(s.community[v], v < 30 ? 0 : 1);
  }
}

TEST(SynthTest, EdgeDensityFollowsProbabilities) {
  SynthParams p;
  p.communities = {{200, 0.1, {}}};
  const SyntheticDataset s = Synthesize(p, TestGrid(), CycleSpec{}, 2);
  const double pairs = 200.0 * 199.0 / 2.0;
  const double sd = std::sqrt(pairs * 0.1 * 0.9);
  EXPECT_NEAR(static_cast<double>(s.dataset.graph.num_edges()), 0.1 * pairs, 4 * sd);
}

TEST(SynthTest, ZeroRateProducesNoCheckIns) {
  SynthParams p = TwoCommunities();
  p.checkin_rate = 0.0;
  EXPECT_EQ(Synthesize(p, TestGrid(), CycleSpec{}, 3).dataset.num_checkins(), 0);
}

TEST(SynthTest, CheckInsFallInsideGridWindowAndHomes) {
  SynthParams p = TwoCommunities();
  p.home_fraction = 1.0;
  p.weeks = 3;
  const Grid grid = TestGrid();
  const CycleSpec cycles;
  const SyntheticDataset s = Synthesize(p, grid, cycles, 4);
  ASSERT_GT(s.dataset.num_checkins(), 0);
  for (int c = 0; c < 2; ++c) {
    EXPECT_EQ(s.home_subareas[c].size(), 4u);
  }
  std::set<int> homes0(s.home_subareas[0].begin(), s.home_subareas[0].end());
  for (int h : s.home_subareas[1]) EXPECT_FALSE(homes0.count(h));
  for (NodeId v = 0; v < s.dataset.graph.num_nodes(); ++v) {
    const auto& homes = s.home_subareas[s.community[v]];
    for (const CheckIn& c : s.dataset.checkins[v]) {
      const auto subarea = grid.LocateSubarea(c.lat, c.lon);
      ASSERT_TRUE(subarea.has_value());
      EXPECT_NE(std::find(homes.begin(), homes.end(), *subarea), homes.end());
      const auto since = c.time - p.start;
      const auto week = std::chrono::duration_cast<std::chrono::seconds>(since).count() /
                        (7 * 86400);
      ASSERT_LT(week, p.weeks);
      EXPECT_TRUE(LocateCycle(c.time, cycles, p.start + std::chrono::days{7 * week}));
    }
  }
}

TEST(SynthTest, SameSeedSameData) {
  const SynthParams p = TwoCommunities();
  const SyntheticDataset a = Synthesize(p, TestGrid(), CycleSpec{}, 5);
  const SyntheticDataset b = Synthesize(p, TestGrid(), CycleSpec{}, 5);
  ASSERT_EQ(a.dataset.num_checkins(), b.dataset.num_checkins());
  const auto ra = a.dataset.AllCheckIns();
  const auto rb = b.dataset.AllCheckIns();
  for (size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].time, rb[i].time);
    EXPECT_EQ(ra[i].lat, rb[i].lat);
  }
}

TEST(SynthTest, RejectsBadParameters) {
  SynthParams p = TwoCommunities();
  p.p_out = 1.5;
  EXPECT_THROW(Synthesize(p, TestGrid(), CycleSpec{}, 1), std::invalid_argument);
  p = TwoCommunities();
  p.communities[0].home_subareas = {99};
  EXPECT_THROW(Synthesize(p, TestGrid(), CycleSpec{}, 1), std::invalid_argument);
  p.communities.clear();
  EXPECT_THROW(Synthesize(p, TestGrid(), CycleSpec{}, 1), std::invalid_argument);
}

}  // namespace
}  // namespace mcsrecruit
