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
#include <random>
#include <stdexcept>
#include <string>

#include "mcsrecruit/random.h"

namespace mcsrecruit {
namespace {

bool IsProbability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void SynthParams::Validate() const {
  if (communities.empty()) throw std::invalid_argument("need >= 1 community");
  for (const SynthCommunity& c : communities) {
    if (c.size < 0) throw std::invalid_argument("community size must be >= 0");
    if (!IsProbability(c.p_in)) throw std::invalid_argument("p_in not in [0, 1]");
  }
  if (!IsProbability(p_out) || !IsProbability(home_fraction)) {
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  }
  if (checkin_rate < 0 || routine_slots < 0 || weeks < 0 ||
      home_subareas_per_community < 1) {
    throw std::invalid_argument("synth counts and rates must be non-negative");
  }
}

SyntheticDataset Synthesize(const SynthParams& params, const Grid& grid,
                            const CycleSpec& cycles, uint64_t seed) {
  params.Validate();
  cycles.Validate();
  SyntheticDataset out;
  const int num_communities = static_cast<int>(params.communities.size());
  for (int c = 0; c < num_communities; ++c) {
    out.community.insert(out.community.end(), params.communities[c].size, c);
  }
  const int n = static_cast<int>(out.community.size());

  std::mt19937_64 graph_rng(DeriveSeed(seed, 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<UserId, UserId>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int ca = out.community[a];
      const double p = ca == out.community[b] ? params.communities[ca].p_in
                                              : params.p_out;
      if (p > 0.0 && unit(graph_rng) < p) edges.emplace_back(a, b);
    }
  }
  std::vector<UserId> users(n);
  for (int v = 0; v < n; ++v) users[v] = v;
  SocialGraph graph = SocialGraph::FromEdges(std::move(users), edges);

  // Home subareas: explicit lists, otherwise disjoint blocks of a shuffled
  // list of unmasked subareas (wrapping when the grid is too small).
  std::mt19937_64 home_rng(DeriveSeed(seed, 2));
  std::vector<int> active(grid.num_active());
  for (int r = 0; r < grid.num_active(); ++r) active[r] = grid.SubareaOfRank(r);
  std::shuffle(active.begin(), active.end(), home_rng);
  size_t next_free = 0;
  for (const SynthCommunity& c : params.communities) {
    std::vector<int> homes = c.home_subareas;
    for (int s : homes) {
      if (s < 0 || s >= grid.gross_subareas() || grid.masked(s)) {
        throw std::invalid_argument("home subarea " + std::to_string(s) +
                                    " is not an unmasked grid cell");
      }
    }
    if (homes.empty()) {
      for (int k = 0; k < params.home_subareas_per_community; ++k) {
        homes.push_back(active[next_free++ % active.size()]);
      }
    }
    out.home_subareas.push_back(std::move(homes));
  }

  const int num_cycles = cycles.num_cycles();
  const int64_t slot_seconds = int64_t{cycles.cycle_hours} * 3600;
  std::vector<CheckIn> records;
  for (int v = 0; v < n; ++v) {
    std::mt19937_64 rng(DeriveSeed(seed, 3, v));
    const std::vector<int>& homes = out.home_subareas[out.community[v]];
    std::uniform_int_distribution<int> pick_home(0, static_cast<int>(homes.size()) - 1);
    std::uniform_int_distribution<int> pick_any(0, grid.num_active() - 1);
    std::uniform_int_distribution<int> pick_cycle(0, num_cycles - 1);
    std::vector<std::pair<int, int>> routine;  // (gross subarea, cycle)
    for (int k = 0; k < params.routine_slots; ++k) {
      const int subarea = unit(rng) < params.home_fraction
                              ? homes[pick_home(rng)]
                              : grid.SubareaOfRank(pick_any(rng));
      routine.emplace_back(subarea, pick_cycle(rng));
    }
    if (params.checkin_rate == 0.0) continue;
    std::poisson_distribution<int> visits(params.checkin_rate);
    std::uniform_int_distribution<int64_t> offset(0, slot_seconds - 1);
    for (int week = 0; week < params.weeks; ++week) {
      for (const auto& [subarea, cycle] : routine) {
        const int k = visits(rng);
        const int day = cycle / cycles.cycles_per_day();
        const int bin = cycle % cycles.cycles_per_day();
        const CellBounds box = grid.Bounds(subarea);
        for (int i = 0; i < k; ++i) {
          CheckIn c;
          c.user = v;
          c.time = params.start +
                   std::chrono::seconds{int64_t{week} * 7 * 86400 +
                                        int64_t{day} * 86400 +
                                        int64_t{cycles.day_start_hour} * 3600 +
                                        bin * slot_seconds + offset(rng)};
          c.lat = box.lat_lo + (box.lat_hi - box.lat_lo) * (0.001 + 0.998 * unit(rng));
          c.lon = box.lon_lo + (box.lon_hi - box.lon_lo) * (0.001 + 0.998 * unit(rng));
          c.location = "s" + std::to_string(subarea);
          records.push_back(std::move(c));
        }
      }
    }
  }
  out.dataset = Dataset::Assemble(std::move(graph), records);
  return out;
}

}  // namespace mcsrecruit
