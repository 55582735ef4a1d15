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

// Extended IC / LT diffusion with MCS-specific influence factors and a cap on
// the number of recruited workers.
//
// Acceptance of a task by user v is boosted by a product of influence-increase
// factors F(v) >= 1 (topical interest and incentive attraction ship by
// default). Under extended IC an active neighbor recruits v with probability
// min(p0 * F(v), 1); under extended LT v joins once the fraction of its
// friends that are active reaches theta0 / F(v).
//
// Both models run in synchronous rounds. Users that qualify in the same round
// are admitted in ascending NodeId order, and the run stops the moment the
// worker budget is reached.

#ifndef MCSRECRUIT_PROPAGATION_H_
#define MCSRECRUIT_PROPAGATION_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "mcsrecruit/social_graph.h"
#include "mcsrecruit/types.h"

namespace mcsrecruit {

inline constexpr int64_t kUnlimitedBudget = std::numeric_limits<int64_t>::max();

enum class DiffusionModel { kIndependentCascade, kLinearThreshold };
enum class SimilarityFn { kCosine, kJaccard };
enum class AttractionFn { kTanh, kLinear };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct Task {
  std::vector<uint8_t> topic;  // binary, one entry per topic
  double incentive = 0.0;
};

struct UserAttributes {
  std::vector<uint8_t> interest;  // binary, same topic universe as Task
  double minimum = 0.0;           // lowest acceptable reward
};

struct PropagationConfig {
  DiffusionModel model = DiffusionModel::kIndependentCascade;
  Interval p0_range{0.1, 0.5};
  Interval theta0_range{0.5, 0.9};
  double i_max1 = 3.0;
  double i_max2 = 1.5;
  SimilarityFn similarity = SimilarityFn::kCosine;
  AttractionFn attraction = AttractionFn::kTanh;
  int64_t budget = kUnlimitedBudget;  // q, maximum number of workers
  bool seeds_count_toward_budget = true;
  // Draw p0 / theta0 per user instead of once per run.
  bool per_user_draws = false;

  // Throws std::invalid_argument.
  void Validate() const;
};

// (i_max - 1) * sqrt(1 - (1 - x)^2) + 1. Throws std::domain_error unless
// x in [0, 1] and i_max >= 1.
double InfluenceIncrease(double x, double i_max);

// Similarity of two binary vectors; 0 when undefined (an all-zero vector).
double TopicSimilarity(std::span<const uint8_t> a, std::span<const uint8_t> b,
                       SimilarityFn fn);

double TopicalInterest(const Task& task, const UserAttributes& user,
                       double i_max1, SimilarityFn fn);

// Attraction F is tanh(incentive - minimum) (or the difference clamped to
// [0, 1] for the linear variant), and 0 when the incentive is below the
// user's minimum.
double IncentiveAttraction(const Task& task, const UserAttributes& user,
                           double i_max2, AttractionFn fn);

double AcceptanceProbabilityIc(double p0, std::span<const double> factors);
double AcceptanceThresholdLt(double theta0, std::span<const double> factors);

// Per-user product of the shipped factors (topical interest x incentive).
std::vector<double> FactorProducts(const Task& task,
                                   std::span<const UserAttributes> users,
                                   const PropagationConfig& config);

enum class StopReason { kExhausted, kBudget };

struct SpreadResult {
  std::vector<NodeId> activated;  // activation order, seeds first
  StopReason stop_reason = StopReason::kExhausted;
};

struct ActivationEstimate {
  std::vector<double> frequency;  // per node, in [0, 1]
  int runs = 0;
  double budget_stop_fraction = 0.0;
};

// Reusable scratch space for one simulating thread.
class SpreadWorkspace {
 public:
  explicit SpreadWorkspace(int num_nodes);
  std::span<const NodeId> activated() const { return activated_; }

 private:
  friend class PropagationModel;
  uint32_t NextStamp();

  uint32_t stamp_ = 0;
  std::vector<uint32_t> active_;
  std::vector<uint32_t> qualified_;
  std::vector<uint32_t> count_stamp_;
  std::vector<int32_t> active_neighbors_;
  std::vector<NodeId> activated_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_;
};

// Diffusion over a fixed graph and fixed per-user factor products. Holds a
// reference to the graph, which must outlive the model. Thread-safe for
// concurrent const use.
//
// Randomness of a run is keyed by a 64-bit run key: the IC coin of edge
// (u -> v) and the p0 / theta0 draws are pure functions of the key, so
// simulations of different seed sets under the same key are coupled.
class PropagationModel {
 public:
  PropagationModel(const SocialGraph& graph,
                   std::vector<double> factor_products,
                   PropagationConfig config);

  // Same model with budget q.
  PropagationModel WithBudget(int64_t q) const;

  const SocialGraph& graph() const { return *graph_; }
  const PropagationConfig& config() const { return config_; }
  double factor_product(NodeId v) const { return (*factors_)[v]; }

  // Throws std::invalid_argument for seeds outside the graph or more seeds
  // than the budget admits.
  SpreadResult RunSpread(std::span<const NodeId> seeds, uint64_t run_key) const;

  // RunSpread into caller-owned scratch; ws.activated() holds the result.
  StopReason Simulate(std::span<const NodeId> seeds, uint64_t run_key,
                      SpreadWorkspace& ws) const;

  // Frequencies over `runs` runs keyed DeriveSeed(seed, r), r = 0..runs-1.
  // Identical for any thread count (num_threads <= 0: OpenMP default).
  ActivationEstimate EstimateActivation(std::span<const NodeId> seeds, int runs,
                                        uint64_t seed,
                                        int num_threads = 0) const;

  // Serial core of EstimateActivation: adds per-node activation counts into
  // `counts` and returns how many runs stopped on the budget.
  int AccumulateActivation(std::span<const NodeId> seeds, int runs,
                           uint64_t seed, SpreadWorkspace& ws,
                           std::span<int32_t> counts) const;

  // True when a strict majority of `probe_runs` runs stop on the budget.
  bool NetworkSpreadFlag(std::span<const NodeId> seeds, int probe_runs,
                         uint64_t seed) const;

 private:
  int64_t ActivationLimit(size_t num_seeds) const;
  double AcceptanceProbability(NodeId v, uint64_t run_key, double shared) const;
  double Threshold(NodeId v, uint64_t run_key, double shared) const;

  const SocialGraph* graph_;
  std::shared_ptr<const std::vector<double>> factors_;
  PropagationConfig config_;
};

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_PROPAGATION_H_
