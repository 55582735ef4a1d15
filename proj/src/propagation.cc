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

#include "mcsrecruit/propagation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "mcsrecruit/random.h"

namespace mcsrecruit {
namespace {

constexpr uint64_t kBaseDrawTag = ~uint64_t{0};

bool InUnitRange(const Interval& r) {
  return r.lo > 0.0 && r.hi <= 1.0 && r.lo <= r.hi;
}

double Product(std::span<const double> factors) {
  double product = 1.0;
  for (double f : factors) {
    if (!(f >= 1.0)) throw std::domain_error("influence factors must be >= 1");
    product *= f;
  }
  return product;
}

}  // namespace

void PropagationConfig::Validate() const {
  if (!InUnitRange(p0_range)) {
    throw std::invalid_argument("p0_range must be an interval within (0, 1]");
  }
  if (!InUnitRange(theta0_range)) {
    throw std::invalid_argument("theta0_range must be an interval within (0, 1]");
  }
  if (!(i_max1 >= 1.0) || !(i_max2 >= 1.0)) {
    throw std::invalid_argument("i_max values must be >= 1");
  }
  if (budget < (seeds_count_toward_budget ? 1 : 0)) {
    throw std::invalid_argument("worker budget q must be >= 1");
  }
}

double InfluenceIncrease(double x, double i_max) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("influence input must lie in [0, 1]");
  }
  if (!(i_max >= 1.0)) throw std::domain_error("i_max must be >= 1");
  const double rest = 1.0 - x;
  return (i_max - 1.0) * std::sqrt(1.0 - rest * rest) + 1.0;
}

double TopicSimilarity(std::span<const uint8_t> a, std::span<const uint8_t> b,
                       SimilarityFn fn) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("topic and interest vectors differ in length");
  }
  int both = 0, na = 0, nb = 0, either = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const bool x = a[i] != 0;
    const bool y = b[i] != 0;
    both += x && y;
    either += x || y;
    na += x;
    nb += y;
  }
  if (fn == SimilarityFn::kJaccard) {
    return either == 0 ? 0.0 : static_cast<double>(both) / either;
  }
  if (na == 0 || nb == 0) return 0.0;
  return std::min(1.0, both / std::sqrt(static_cast<double>(na) * nb));
}

double TopicalInterest(const Task& task, const UserAttributes& user,
                       double i_max1, SimilarityFn fn) {
  return InfluenceIncrease(TopicSimilarity(task.topic, user.interest, fn),
                           i_max1);
}

double IncentiveAttraction(const Task& task, const UserAttributes& user,
                           double i_max2, AttractionFn fn) {
  double attraction = 0.0;
  if (user.minimum <= task.incentive) {
    const double surplus = task.incentive - user.minimum;
    attraction = fn == AttractionFn::kTanh ? std::tanh(surplus)
                                           : std::min(surplus, 1.0);
  }
  return InfluenceIncrease(attraction, i_max2);
}

double AcceptanceProbabilityIc(double p0, std::span<const double> factors) {
  return std::min(p0 * Product(factors), 1.0);
}

double AcceptanceThresholdLt(double theta0, std::span<const double> factors) {
  return theta0 / Product(factors);
}

std::vector<double> FactorProducts(const Task& task,
                                   std::span<const UserAttributes> users,
                                   const PropagationConfig& config) {
  std::vector<double> products;
  products.reserve(users.size());
  for (const UserAttributes& user : users) {
    const double factors[] = {
        TopicalInterest(task, user, config.i_max1, config.similarity),
        IncentiveAttraction(task, user, config.i_max2, config.attraction)};
    products.push_back(Product(factors));
  }
  return products;
}

SpreadWorkspace::SpreadWorkspace(int num_nodes)
    : active_(num_nodes, 0),
      qualified_(num_nodes, 0),
      count_stamp_(num_nodes, 0),
      active_neighbors_(num_nodes, 0) {}

uint32_t SpreadWorkspace::NextStamp() {
  if (++stamp_ == 0) {
    std::fill(active_.begin(), active_.end(), 0);
    std::fill(qualified_.begin(), qualified_.end(), 0);
    std::fill(count_stamp_.begin(), count_stamp_.end(), 0);
    stamp_ = 1;
  }
  return stamp_;
}

PropagationModel::PropagationModel(const SocialGraph& graph,
                                   std::vector<double> factor_products,
                                   PropagationConfig config)
    : graph_(&graph),
      factors_(std::make_shared<const std::vector<double>>(
          std::move(factor_products))),
      config_(config) {
  config_.Validate();
  if (static_cast<int>(factors_->size()) != graph.num_nodes()) {
    throw std::invalid_argument("need one factor product per node");
  }
  for (double f : *factors_) {
    if (!(f >= 1.0)) throw std::invalid_argument("factor products must be >= 1");
  }
}

PropagationModel PropagationModel::WithBudget(int64_t q) const {
  PropagationModel copy = *this;
  copy.config_.budget = q;
  copy.config_.Validate();
  return copy;
}

int64_t PropagationModel::ActivationLimit(size_t num_seeds) const {
  if (config_.seeds_count_toward_budget) return config_.budget;
  if (config_.budget == kUnlimitedBudget) return kUnlimitedBudget;
  return config_.budget + static_cast<int64_t>(num_seeds);
}

double PropagationModel::AcceptanceProbability(NodeId v, uint64_t run_key,
                                               double shared) const {
  double p0 = shared;
  if (config_.per_user_draws) {
    const Interval& r = config_.p0_range;
    p0 = r.lo + (r.hi - r.lo) * KeyedUniform(run_key, kBaseDrawTag, v + 1);
  }
  return std::min(p0 * (*factors_)[v], 1.0);
}

double PropagationModel::Threshold(NodeId v, uint64_t run_key,
                                   double shared) const {
  double theta0 = shared;
  if (config_.per_user_draws) {
    const Interval& r = config_.theta0_range;
    theta0 = r.lo + (r.hi - r.lo) * KeyedUniform(run_key, kBaseDrawTag, v + 1);
  }
  return theta0 / (*factors_)[v];
}

StopReason PropagationModel::Simulate(std::span<const NodeId> seeds,
                                      uint64_t run_key,
                                      SpreadWorkspace& ws) const {
  const SocialGraph& g = *graph_;
  const uint32_t stamp = ws.NextStamp();
  ws.activated_.clear();
  ws.frontier_.clear();
  for (NodeId s : seeds) {
    if (s < 0 || s >= g.num_nodes()) {
      throw std::invalid_argument("seed " + std::to_string(s) + " not in graph");
    }
    if (ws.active_[s] == stamp) continue;
    ws.active_[s] = stamp;
    ws.activated_.push_back(s);
  }
  const int64_t limit = ActivationLimit(ws.activated_.size());
  const auto num_active = [&ws] {
    return static_cast<int64_t>(ws.activated_.size());
  };
  if (num_active() > limit) {
    throw std::invalid_argument("more seeds than the worker budget q");
  }
  // Filling the whole graph exhausts it; nobody was turned away.
  const auto at_limit = [&] {
    return num_active() < g.num_nodes() ? StopReason::kBudget
                                        : StopReason::kExhausted;
  };
  if (num_active() == limit) return at_limit();
  ws.frontier_.assign(ws.activated_.begin(), ws.activated_.end());

  const bool ic = config_.model == DiffusionModel::kIndependentCascade;
  const Interval& range = ic ? config_.p0_range : config_.theta0_range;
  const double shared =
      range.lo + (range.hi - range.lo) * KeyedUniform(run_key, kBaseDrawTag, 0);

  while (!ws.frontier_.empty()) {
    ws.next_.clear();
    for (NodeId u : ws.frontier_) {
      for (NodeId v : g.neighbors(u)) {
        if (ws.active_[v] == stamp || ws.qualified_[v] == stamp) continue;
        bool qualifies;
        if (ic) {
          qualifies = KeyedUniform(run_key, static_cast<uint64_t>(u),
                                   static_cast<uint64_t>(v)) <
                      AcceptanceProbability(v, run_key, shared);
        } else {
          if (ws.count_stamp_[v] != stamp) {
            ws.count_stamp_[v] = stamp;
            ws.active_neighbors_[v] = 0;
          }
          const int active_friends = ++ws.active_neighbors_[v];
          qualifies = static_cast<double>(active_friends) / g.degree(v) >=
                      Threshold(v, run_key, shared);
        }
        if (qualifies) {
          ws.qualified_[v] = stamp;
          ws.next_.push_back(v);
        }
      }
    }
    std::sort(ws.next_.begin(), ws.next_.end());
    for (NodeId v : ws.next_) {
      ws.active_[v] = stamp;
      ws.activated_.push_back(v);
      if (num_active() == limit) return at_limit();
    }
    ws.frontier_.swap(ws.next_);
  }
  return StopReason::kExhausted;
}

SpreadResult PropagationModel::RunSpread(std::span<const NodeId> seeds,
                                         uint64_t run_key) const {
  SpreadWorkspace ws(graph_->num_nodes());
  SpreadResult result;
  result.stop_reason = Simulate(seeds, run_key, ws);
  result.activated.assign(ws.activated().begin(), ws.activated().end());
  return result;
}

int PropagationModel::AccumulateActivation(std::span<const NodeId> seeds,
                                           int runs, uint64_t seed,
                                           SpreadWorkspace& ws,
                                           std::span<int32_t> counts) const {
  int budget_stops = 0;
  for (int r = 0; r < runs; ++r) {
    if (Simulate(seeds, DeriveSeed(seed, r), ws) == StopReason::kBudget) {
      ++budget_stops;
    }
    for (NodeId v : ws.activated()) ++counts[v];
  }
  return budget_stops;
}

ActivationEstimate PropagationModel::EstimateActivation(
    std::span<const NodeId> seeds, int runs, uint64_t seed,
    int num_threads) const {
  if (runs < 1) throw std::invalid_argument("need at least one run");
  const int n = graph_->num_nodes();
  std::vector<int64_t> totals(n, 0);
  int64_t budget_stops = 0;
  const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
  // Validate once up front so no exception escapes the parallel region.
  { SpreadWorkspace probe(n); Simulate(seeds, DeriveSeed(seed, 0), probe); }

#pragma omp parallel num_threads(threads)
  {
    SpreadWorkspace ws(n);
    std::vector<int64_t> local(n, 0);
    int64_t local_stops = 0;
#pragma omp for schedule(static)
    for (int r = 0; r < runs; ++r) {
      if (Simulate(seeds, DeriveSeed(seed, r), ws) == StopReason::kBudget) {
        ++local_stops;
      }
      for (NodeId v : ws.activated()) ++local[v];
    }
#pragma omp critical
    {
      for (int v = 0; v < n; ++v) totals[v] += local[v];
      budget_stops += local_stops;
    }
  }

  ActivationEstimate estimate;
  estimate.runs = runs;
  estimate.frequency.resize(n);
  for (int v = 0; v < n; ++v) {
    estimate.frequency[v] = static_cast<double>(totals[v]) / runs;
  }
  estimate.budget_stop_fraction = static_cast<double>(budget_stops) / runs;
  return estimate;
}

bool PropagationModel::NetworkSpreadFlag(std::span<const NodeId> seeds,
                                         int probe_runs, uint64_t seed) const {
  if (probe_runs < 1) throw std::invalid_argument("need at least one probe run");
  SpreadWorkspace ws(graph_->num_nodes());
  int budget_stops = 0;
  for (int r = 0; r < probe_runs; ++r) {
    if (Simulate(seeds, DeriveSeed(seed, r), ws) == StopReason::kBudget) {
      ++budget_stops;
    }
  }
  return 2 * budget_stops > probe_runs;
}

}  // namespace mcsrecruit
