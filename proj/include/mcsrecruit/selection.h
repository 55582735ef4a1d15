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

// Seed selection: coverage estimation, the MC-driven greedy selector, the
// rank-utility selectors and the comparison baselines.

#ifndef MCSRECRUIT_SELECTION_H_
#define MCSRECRUIT_SELECTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mcsrecruit/mobility.h"
#include "mcsrecruit/propagation.h"
#include "mcsrecruit/social_graph.h"
#include "mcsrecruit/types.h"

namespace mcsrecruit {

struct CoverageEstimate {
  double fraction = 0.0;     // mean of phi over all unmasked cells
  std::vector<double> phi;   // per cell, indexed like CellValue::cell
};

// phi(cell) = 1 - prod_u (1 - alpha_u(cell) * P(u)) over every user with
// P(u) > 0, where P is the per-user activation probability.
CoverageEstimate EstimateCoverage(std::span<const double> activation,
                                  const MobilityProfile& profile);

struct SelectorContext {
  const PropagationModel* model = nullptr;  // budget is overridden by q
  const MobilityProfile* profile = nullptr;
  int mc_runs = 1000;   // Monte-Carlo runs per coverage estimate
  int probe_runs = 10;  // runs behind the budget-phase flag
  int num_threads = 0;  // <= 0: OpenMP default
};

struct Selection {
  SeedSet seeds;
  // Estimated coverage of the seed set entering the first MC-driven
  // iteration, then after each MC-driven addition. Empty for selectors that
  // never estimate coverage.
  std::vector<double> estimated_coverage;
  // Number of seeds chosen before MC-driven selection took over; -1 if it
  // never did.
  int phase_switch = -1;
};

// MC-estimated coverage of `seeds` under budget q. Uses DeriveSeed(seed, r)
// as the key of run r, so equal seeds give common random numbers.
double EstimatedCoverage(std::span<const NodeId> seeds, int64_t q,
                         const SelectorContext& ctx, uint64_t seed);

// Coverage gain from adding u to `current`, both sides estimated with the
// same seed.
double MarginalUtility(NodeId u, std::span<const NodeId> current, int64_t q,
                       const SelectorContext& ctx, uint64_t seed);

// Greedy on MC-estimated coverage: adds the candidate with the largest gain
// (ties: lowest id) until p seeds or no candidate gains. Throws
// std::invalid_argument on an empty candidate set.
Selection BasicSelector(std::span<const NodeId> candidates, int p, int64_t q,
                        const SelectorContext& ctx, uint64_t seed);

// beta * DegreeRank + (1 - beta) * TrajectoryDiffRank for every member of
// `pool` (the candidates not yet selected) against the selected set.
// Degree rank grows with degree; the diversity rank grows as the mean cosine
// similarity to `selected` shrinks. Ranks run 1..|pool| and ties share the
// lower rank.
std::vector<double> RankUtilities(std::span<const NodeId> pool,
                                  std::span<const NodeId> selected, double beta,
                                  const SocialGraph& graph,
                                  const MobilityProfile& profile);

// p rounds of argmax rank utility, no simulation.
Selection NaiveFast(std::span<const NodeId> candidates, int p, double beta,
                    const SocialGraph& graph, const MobilityProfile& profile);

// Rank-utility picks while the budget is not binding (decided after each pick
// by NetworkSpreadFlag), then MC-driven greedy picks as in BasicSelector.
Selection FastSelector(std::span<const NodeId> candidates, int p, int64_t q,
                       double beta, const SelectorContext& ctx, uint64_t seed);

// Top p by degree, ties by lowest id.
SeedSet MaxDegreeBaseline(std::span<const NodeId> candidates, int p,
                          const SocialGraph& graph);

// Greedy coverage over the selected users alone (activation 1, no
// diffusion); stops early when nothing gains.
SeedSet MaxCovBaseline(std::span<const NodeId> candidates, int p,
                       const MobilityProfile& profile);

// Top p by visited subareas x degree, ties by lowest id.
SeedSet HeuristicGreedyBaseline(std::span<const NodeId> candidates, int p,
                                const SocialGraph& graph,
                                const MobilityProfile& profile);

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_SELECTION_H_
