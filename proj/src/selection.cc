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

#include "mcsrecruit/selection.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <omp.h>

#include "mcsrecruit/random.h"

namespace mcsrecruit {
namespace {

constexpr uint64_t kCoverageStream = 1;
constexpr uint64_t kProbeStream = 2;

// Relative slack under which two rank scores count as tied.
constexpr double kScoreTieTolerance = 1e-9;

std::vector<NodeId> NormalizeCandidates(std::span<const NodeId> candidates,
                                        int num_nodes) {
  std::vector<NodeId> pool(candidates.begin(), candidates.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.empty()) throw std::invalid_argument("empty candidate set");
  if (pool.front() < 0 || pool.back() >= num_nodes) {
    throw std::invalid_argument("candidate outside the graph");
  }
  return pool;
}

void CheckSeedCount(int p) {
  if (p < 0) throw std::invalid_argument("seed count p must be >= 0");
}

// Mean over all cells of 1 - prod_v (1 - alpha_v * P(v)).
template <typename ProbabilityOf>
double CoverageOf(const MobilityProfile& profile, int num_users,
                  ProbabilityOf probability, std::vector<double>& uncovered) {
  const int64_t total = profile.universe().total_cells;
  if (total == 0) return 0.0;
  uncovered.assign(total, 1.0);
  for (NodeId v = 0; v < num_users; ++v) {
    const double p = probability(v);
    if (p <= 0.0) continue;
    for (const CellValue& a : profile.coverage(v)) {
      uncovered[a.cell] *= 1.0 - a.value * p;
    }
  }
  double sum = 0.0;
  for (double u : uncovered) sum += 1.0 - u;
  return sum / static_cast<double>(total);
}

// Coverage estimate for every `pool` member added to `seeds`, evaluated with
// common random numbers. Result is independent of the thread count.
std::vector<double> EvaluateAdditions(const PropagationModel& model,
                                      const MobilityProfile& profile,
                                      std::span<const NodeId> seeds,
                                      std::span<const NodeId> pool, int runs,
                                      uint64_t mc_seed, int num_threads) {
  const int n = model.graph().num_nodes();
  std::vector<double> values(pool.size(), 0.0);
  const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
  const int64_t count = static_cast<int64_t>(pool.size());
#pragma omp parallel num_threads(threads)
  {
    SpreadWorkspace ws(n);
    std::vector<int32_t> counts(n);
    std::vector<double> scratch;
    std::vector<NodeId> trial(seeds.begin(), seeds.end());
    trial.push_back(0);
#pragma omp for schedule(dynamic, 1)
    for (int64_t i = 0; i < count; ++i) {
      trial.back() = pool[i];
      std::fill(counts.begin(), counts.end(), 0);
      model.AccumulateActivation(trial, runs, mc_seed, ws, counts);
      values[i] = CoverageOf(
          profile, n, [&](NodeId v) { return static_cast<double>(counts[v]) / runs; }, scratch);
    }
  }
  return values;
}

// MC-driven greedy continuation shared by BasicSelector and FastSelector.
void ExtendByCoverageGreedy(std::vector<NodeId> pool, int p, int64_t q,
                            const SelectorContext& ctx, uint64_t seed,
                            Selection& selection) {
  const PropagationModel model = ctx.model->WithBudget(q);
  const uint64_t mc_seed = DeriveSeed(seed, kCoverageStream);
  double current = EstimatedCoverage(selection.seeds, q, ctx, seed);
  selection.estimated_coverage.push_back(current);
  while (static_cast<int>(selection.seeds.size()) < p && !pool.empty()) {
    const std::vector<double> values =
        EvaluateAdditions(model, *ctx.profile, selection.seeds, pool,
                          ctx.mc_runs, mc_seed, ctx.num_threads);
    size_t best = 0;
    for (size_t i = 1; i < values.size(); ++i) {
      if (values[i] > values[best]) best = i;
    }
    if (!(values[best] > current)) break;
    selection.seeds.push_back(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    current = values[best];
    selection.estimated_coverage.push_back(current);
  }
}

void CheckContext(const SelectorContext& ctx) {
  if (ctx.model == nullptr || ctx.profile == nullptr) {
    throw std::invalid_argument("selector context needs a model and a profile");
  }
  if (ctx.mc_runs < 1 || ctx.probe_runs < 1) {
    throw std::invalid_argument("mc_runs and probe_runs must be >= 1");
  }
  if (ctx.profile->num_users() != ctx.model->graph().num_nodes()) {
    throw std::invalid_argument("profile and graph disagree on user count");
  }
}

// Ranks with ties sharing the lower rank: rank(x) = 1 + #{y : worse(y, x)}.
std::vector<double> ScoreRanks(std::span<const int> degrees,
                               std::span<const double> avg_similarity,
                               double beta) {
  const size_t n = degrees.size();
  std::vector<int> sorted_degrees(degrees.begin(), degrees.end());
  std::sort(sorted_degrees.begin(), sorted_degrees.end());
  std::vector<double> sorted_sims(avg_similarity.begin(), avg_similarity.end());
  std::sort(sorted_sims.begin(), sorted_sims.end());
  std::vector<double> scores(n);
  for (size_t i = 0; i < n; ++i) {
    const auto lower_degree =
        std::lower_bound(sorted_degrees.begin(), sorted_degrees.end(),
                         degrees[i]) - sorted_degrees.begin();
    const auto more_similar =
        sorted_sims.end() - std::upper_bound(sorted_sims.begin(),
                                             sorted_sims.end(),
                                             avg_similarity[i]);
    const double degree_rank = 1.0 + static_cast<double>(lower_degree);
    const double diversity_rank = 1.0 + static_cast<double>(more_similar);
    scores[i] = beta * degree_rank + (1.0 - beta) * diversity_rank;
  }
  return scores;
}

size_t ArgmaxScore(std::span<const double> scores) {
  size_t best = 0;
  for (size_t i = 1; i < scores.size(); ++i) {
    const double slack =
        kScoreTieTolerance * std::max(1.0, std::abs(scores[best]));
    if (scores[i] > scores[best] + slack) best = i;
  }
  return best;
}

// Incremental NaiveFast state: remaining pool plus running similarity sums
// against the selected set.
class RankState {
 public:
  RankState(std::vector<NodeId> pool, double beta, const SocialGraph& graph,
            const MobilityProfile& profile)
      : pool_(std::move(pool)),
        similarity_sum_(pool_.size(), 0.0),
        beta_(beta),
        graph_(graph),
        profile_(profile) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
      throw std::invalid_argument("beta must lie in [0, 1]");
    }
  }

  bool empty() const { return pool_.empty(); }
  const std::vector<NodeId>& pool() const { return pool_; }

  NodeId PickBest() {
    std::vector<int> degrees(pool_.size());
    std::vector<double> avg(pool_.size(), 0.0);
    for (size_t i = 0; i < pool_.size(); ++i) {
      degrees[i] = graph_.degree(pool_[i]);
      if (selected_ > 0) avg[i] = similarity_sum_[i] / selected_;
    }
    const size_t best = ArgmaxScore(ScoreRanks(degrees, avg, beta_));
    const NodeId chosen = pool_[best];
    pool_.erase(pool_.begin() + static_cast<std::ptrdiff_t>(best));
    similarity_sum_.erase(similarity_sum_.begin() +
                          static_cast<std::ptrdiff_t>(best));
    for (size_t i = 0; i < pool_.size(); ++i) {
      similarity_sum_[i] += profile_.Similarity(pool_[i], chosen);
    }
    ++selected_;
    return chosen;
  }

 private:
  std::vector<NodeId> pool_;
  std::vector<double> similarity_sum_;
  int selected_ = 0;
  double beta_;
  const SocialGraph& graph_;
  const MobilityProfile& profile_;
};

SeedSet TopByScore(std::vector<NodeId> pool, int p,
                   const std::vector<int64_t>& score_of_pool) {
  std::vector<size_t> order(pool.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return score_of_pool[a] > score_of_pool[b];
  });
  SeedSet seeds;
  for (size_t i = 0; i < order.size() && static_cast<int>(seeds.size()) < p; ++i) {
    seeds.push_back(pool[order[i]]);
  }
  return seeds;
}

}  // namespace

CoverageEstimate EstimateCoverage(std::span<const double> activation,
                                  const MobilityProfile& profile) {
  if (static_cast<int>(activation.size()) != profile.num_users()) {
    throw std::invalid_argument("activation vector must cover every user");
  }
  CoverageEstimate estimate;
  std::vector<double> uncovered;
  estimate.fraction = CoverageOf(
      profile, profile.num_users(),
      [&](NodeId v) { return activation[v]; }, uncovered);
  estimate.phi.resize(uncovered.size());
  for (size_t c = 0; c < uncovered.size(); ++c) estimate.phi[c] = 1.0 - uncovered[c];
  return estimate;
}

double EstimatedCoverage(std::span<const NodeId> seeds, int64_t q,
                         const SelectorContext& ctx, uint64_t seed) {
  CheckContext(ctx);
  if (seeds.empty()) return 0.0;
  const PropagationModel model = ctx.model->WithBudget(q);
  const ActivationEstimate activation = model.EstimateActivation(
      seeds, ctx.mc_runs, DeriveSeed(seed, kCoverageStream), ctx.num_threads);
  return EstimateCoverage(activation.frequency, *ctx.profile).fraction;
}

double MarginalUtility(NodeId u, std::span<const NodeId> current, int64_t q,
                       const SelectorContext& ctx, uint64_t seed) {
  if (std::find(current.begin(), current.end(), u) != current.end()) {
    throw std::invalid_argument("user is already a seed");
  }
  std::vector<NodeId> extended(current.begin(), current.end());
  extended.push_back(u);
  return EstimatedCoverage(extended, q, ctx, seed) -
         EstimatedCoverage(current, q, ctx, seed);
}

Selection BasicSelector(std::span<const NodeId> candidates, int p, int64_t q,
                        const SelectorContext& ctx, uint64_t seed) {
  CheckContext(ctx);
  CheckSeedCount(p);
  std::vector<NodeId> pool =
      NormalizeCandidates(candidates, ctx.model->graph().num_nodes());
  Selection selection;
  if (p == 0) return selection;
  selection.phase_switch = 0;
  ExtendByCoverageGreedy(std::move(pool), p, q, ctx, seed, selection);
  return selection;
}

std::vector<double> RankUtilities(std::span<const NodeId> pool,
                                  std::span<const NodeId> selected, double beta,
                                  const SocialGraph& graph,
                                  const MobilityProfile& profile) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta must lie in [0, 1]");
  }
  std::vector<int> degrees(pool.size());
  std::vector<double> avg(pool.size(), 0.0);
  for (size_t i = 0; i < pool.size(); ++i) {
    degrees[i] = graph.degree(pool[i]);
    double sum = 0.0;
    for (NodeId a : selected) sum += profile.Similarity(pool[i], a);
    if (!selected.empty()) avg[i] = sum / static_cast<double>(selected.size());
  }
  return ScoreRanks(degrees, avg, beta);
}

Selection NaiveFast(std::span<const NodeId> candidates, int p, double beta,
                    const SocialGraph& graph, const MobilityProfile& profile) {
  CheckSeedCount(p);
  RankState state(NormalizeCandidates(candidates, graph.num_nodes()), beta,
                  graph, profile);
  Selection selection;
  while (static_cast<int>(selection.seeds.size()) < p && !state.empty()) {
    selection.seeds.push_back(state.PickBest());
  }
  return selection;
}

Selection FastSelector(std::span<const NodeId> candidates, int p, int64_t q,
                       double beta, const SelectorContext& ctx, uint64_t seed) {
  CheckContext(ctx);
  CheckSeedCount(p);
  const SocialGraph& graph = ctx.model->graph();
  RankState state(NormalizeCandidates(candidates, graph.num_nodes()), beta,
                  graph, *ctx.profile);
  const PropagationModel model = ctx.model->WithBudget(q);
  Selection selection;
  bool budget_sensitive = false;
  while (static_cast<int>(selection.seeds.size()) < p && !budget_sensitive &&
         !state.empty()) {
    selection.seeds.push_back(state.PickBest());
    budget_sensitive = model.NetworkSpreadFlag(
        selection.seeds, ctx.probe_runs,
        DeriveSeed(seed, kProbeStream, selection.seeds.size()));
  }
  if (budget_sensitive) {
    selection.phase_switch = static_cast<int>(selection.seeds.size());
    ExtendByCoverageGreedy(state.pool(), p, q, ctx, seed, selection);
  }
  return selection;
}

SeedSet MaxDegreeBaseline(std::span<const NodeId> candidates, int p,
                          const SocialGraph& graph) {
  CheckSeedCount(p);
  std::vector<NodeId> pool = NormalizeCandidates(candidates, graph.num_nodes());
  std::vector<int64_t> score(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) score[i] = graph.degree(pool[i]);
  return TopByScore(std::move(pool), p, score);
}

SeedSet HeuristicGreedyBaseline(std::span<const NodeId> candidates, int p,
                                const SocialGraph& graph,
                                const MobilityProfile& profile) {
  CheckSeedCount(p);
  std::vector<NodeId> pool = NormalizeCandidates(candidates, graph.num_nodes());
  std::vector<int64_t> score(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) {
    score[i] = int64_t{profile.visited_subareas(pool[i])} * graph.degree(pool[i]);
  }
  return TopByScore(std::move(pool), p, score);
}

SeedSet MaxCovBaseline(std::span<const NodeId> candidates, int p,
                       const MobilityProfile& profile) {
  CheckSeedCount(p);
  std::vector<NodeId> pool =
      NormalizeCandidates(candidates, profile.num_users());
  std::vector<double> uncovered(profile.universe().total_cells, 1.0);
  SeedSet seeds;
  while (static_cast<int>(seeds.size()) < p && !pool.empty()) {
    size_t best = 0;
    double best_gain = -1.0;
    for (size_t i = 0; i < pool.size(); ++i) {
      double gain = 0.0;
      for (const CellValue& a : profile.coverage(pool[i])) {
        gain += uncovered[a.cell] * a.value;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (!(best_gain > 0.0)) break;
    for (const CellValue& a : profile.coverage(pool[best])) {
      uncovered[a.cell] *= 1.0 - a.value;
    }
    seeds.push_back(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return seeds;
}

}  // namespace mcsrecruit
