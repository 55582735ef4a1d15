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

// Experiment runner: ingest, profile, select, propagate and evaluate on the
// held-out week, one CSV row per (algorithm, p, q, repetition).

#ifndef MCSRECRUIT_HARNESS_H_
#define MCSRECRUIT_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcsrecruit/config.h"
#include "mcsrecruit/dataset.h"
#include "mcsrecruit/grid.h"
#include "mcsrecruit/mobility.h"
#include "mcsrecruit/propagation.h"
#include "mcsrecruit/selection.h"
#include "mcsrecruit/synth.h"
#include "mcsrecruit/types.h"

namespace mcsrecruit {

enum class Algorithm {
  kBasic,
  kFast,
  kNaiveFast,
  kMaxDegree,
  kMaxCov,
  kHeuristicGreedy,
};

std::string_view AlgorithmName(Algorithm algorithm);
// Accepts the names produced by AlgorithmName.
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::string_view ModelName(DiffusionModel model);

struct AttributeSpec {
  enum class MinimumKind { kUniform, kDiscrete };

  int topics = 5;
  // Per-topic probability of a 1 bit; a single value applies to all topics.
  std::vector<double> interest_prob{0.4};
  MinimumKind minimum_kind = MinimumKind::kUniform;
  // kUniform: {lo, hi}. kDiscrete: equally likely values.
  std::vector<double> minimum_values{0.0, 3.0};

  void Validate() const;
};

std::vector<UserAttributes> GenerateAttributes(int num_users,
                                               const AttributeSpec& spec,
                                               uint64_t seed);

struct BudgetSplitSpec {
  double total = 600.0;
  double seed_reward = 2.0;
  double nonseed_reward = 1.0;
  std::vector<double> z{0.5, 1.0, 2.0, 3.0, 4.0, 5.0};
  Algorithm algorithm = Algorithm::kFast;
};

struct BudgetSplit {
  double seed_budget = 0.0;
  double nonseed_budget = 0.0;
  int p = 0;
  int64_t q_nonseed = 0;
};

// Throws std::invalid_argument when z leaves room for no seed.
BudgetSplit SplitBudget(double total, double seed_reward, double nonseed_reward,
                        double z);

struct ExperimentConfig {
  std::string edges_path;
  std::string checkins_path;
  std::optional<SynthParams> synth;  // used when no paths are given

  GridSpec grid;
  // Set to use square cells of this many degrees instead of grid.cell_size_km.
  std::optional<double> cell_degrees;
  CycleSpec cycles;
  PropagationConfig propagation;
  Task task{{1, 1, 0, 0, 0}, 2.0};
  AttributeSpec attributes;
  int min_checkins = 1;

  std::vector<int> p_values{25, 50, 75, 100};
  std::vector<int64_t> q_values{2000, 5000};
  std::vector<Algorithm> algorithms{Algorithm::kFast, Algorithm::kNaiveFast,
                                    Algorithm::kMaxDegree, Algorithm::kMaxCov,
                                    Algorithm::kHeuristicGreedy};
  int repetitions = 1;
  uint64_t seed = 1;
  double beta = 0.6;
  int mc_runs = 1000;
  int probe_runs = 10;
  int eval_runs = 1000;  // runs behind est_coverage and expected evaluation
  int threads = 0;
  bool expected_evaluation = false;
  bool record_timing = true;
  bool verbose = false;  // progress lines on stderr
  BudgetSplitSpec budget_split;
  std::string output_path;

  // Reads every documented key; unknown keys are an error.
  static ExperimentConfig FromKeyValues(const KeyValueConfig& kv);
  void Validate() const;
  Grid MakeGrid() const;
};

// Loads the configured files (or synthesizes) and applies the region filter.
Dataset LoadExperimentDataset(const ExperimentConfig& config);

double MeasureActualCoverage(std::span<const NodeId> workers,
                             const Dataset& test, const Grid& grid,
                             const CycleSpec& cycles, TimePoint test_epoch);

// Everything one repetition needs. Not movable: the model points into split.
struct Instance {
  // A cached profile must match the dataset's users and cell universe.
  Instance(const Dataset& dataset, const ExperimentConfig& config, int rep,
           std::optional<MobilityProfile> cached_profile = std::nullopt);
  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;

  const SocialGraph& graph() const { return split.train.graph; }
  SelectorContext Context(const ExperimentConfig& config) const;

  Grid grid;
  CycleSpec cycles;
  uint64_t rep_seed = 0;
  TrainTestSplit split;
  MobilityProfile profile;
  std::vector<UserAttributes> attributes;
  std::unique_ptr<PropagationModel> model;
  std::vector<NodeId> candidates;
};

Selection RunSelector(const Instance& instance, const ExperimentConfig& config,
                      Algorithm algorithm, int p, int64_t q, uint64_t seed);

struct CoverageRow {
  std::string algorithm;
  std::string model;
  int p = 0;
  int64_t q = 0;
  std::optional<double> z;
  int rep = 0;
  double est_coverage = 0.0;
  double measured_coverage = 0.0;
  double workers = 0.0;
  std::optional<double> select_ms;
  SeedSet seeds;
};

struct CoverageReport {
  std::vector<CoverageRow> rows;
  std::vector<std::string> errors;
};

void WriteCsvHeader(std::ostream& out);
void WriteCsvRow(const CoverageRow& row, std::ostream& out);
std::string CsvQuote(std::string_view field);

// Rows go to `csv` (when non-null) as soon as they finish.
CoverageReport RunExperiment(const ExperimentConfig& config,
                             const Dataset& dataset, std::ostream* csv);
CoverageReport RunBudgetSplit(const ExperimentConfig& config,
                              const Dataset& dataset, std::ostream* csv);

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_HARNESS_H_
