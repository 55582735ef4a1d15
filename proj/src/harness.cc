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

#include "mcsrecruit/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mcsrecruit/random.h"

namespace mcsrecruit {
namespace {

constexpr uint64_t kSplitStream = 1;
constexpr uint64_t kAttributeStream = 2;
constexpr uint64_t kSelectStream = 3;
constexpr uint64_t kEvalStream = 4;
constexpr uint64_t kSynthStream = 5;

constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kBasic,     Algorithm::kFast,   Algorithm::kNaiveFast,
    Algorithm::kMaxDegree, Algorithm::kMaxCov, Algorithm::kHeuristicGreedy};

uint64_t RowKey(uint64_t rep_seed, uint64_t stream, int p, int64_t q) {
  return DeriveSeed(DeriveSeed(rep_seed, stream, static_cast<uint64_t>(p)),
                    static_cast<uint64_t>(q));
}

int64_t ParseBudget(const std::string& text) {
  if (text == "inf" || text == "unlimited") return kUnlimitedBudget;
  size_t used = 0;
  int64_t q = 0;
  try {
    q = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("config key 'q': malformed value '" + text + "'");
  }
  return q;
}

Interval ParseInterval(const KeyValueConfig& kv, const std::string& key,
                       Interval fallback) {
  const auto v = kv.GetDoubles(key, {fallback.lo, fallback.hi});
  if (v.size() == 1) return {v[0], v[0]};
  if (v.size() != 2) {
    throw std::invalid_argument("config key '" + key + "' needs lo, hi");
  }
  return {v[0], v[1]};
}

template <typename T>
std::vector<T> Narrow(const std::vector<int64_t>& values) {
  return std::vector<T>(values.begin(), values.end());
}

std::string FormatDouble(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, x);
  return buf;
}

std::string FormatBudget(int64_t q) {
  return q == kUnlimitedBudget ? "inf" : std::to_string(q);
}

void Log(const ExperimentConfig& config, const std::string& line) {
  if (config.verbose) std::clog << line << '\n';
}

struct Evaluation {
  double est_coverage = 0.0;
  double measured_coverage = 0.0;
  double workers = 0.0;
};

Evaluation Evaluate(const Instance& instance, const ExperimentConfig& config,
                    std::span<const NodeId> seeds, int64_t q, uint64_t key) {
  Evaluation e;
  if (seeds.empty()) return e;
  SelectorContext ctx = instance.Context(config);
  ctx.mc_runs = config.eval_runs;
  e.est_coverage = EstimatedCoverage(seeds, q, ctx, key);

  const PropagationModel model = instance.model->WithBudget(q);
  const TimePoint epoch = instance.split.test_epoch();
  const int realizations = config.expected_evaluation ? config.eval_runs : 1;
  for (int r = 0; r < realizations; ++r) {
    const SpreadResult spread = model.RunSpread(seeds, DeriveSeed(key, r));
    e.measured_coverage += MeasureActualCoverage(
        spread.activated, instance.split.test, instance.grid, instance.cycles,
        epoch);
    e.workers += static_cast<double>(spread.activated.size());
  }
  e.measured_coverage /= realizations;
  e.workers /= realizations;
  return e;
}

// Runs one row; returns false and records the error if any stage throws.
bool RunRow(const Instance& instance, const ExperimentConfig& config,
            Algorithm algorithm, int p, int64_t q, int rep,
            std::optional<double> z, CoverageReport& report, std::ostream* csv) {
  CoverageRow row;
  row.algorithm = AlgorithmName(algorithm);
  row.model = ModelName(config.propagation.model);
  row.p = p;
  row.q = q;
  row.z = z;
  row.rep = rep;
  try {
    const uint64_t select_seed = RowKey(instance.rep_seed, kSelectStream, p, q);
    const auto start = std::chrono::steady_clock::now();
    Selection selection =
        RunSelector(instance, config, algorithm, p, q, select_seed);
    const auto stop = std::chrono::steady_clock::now();
    if (config.record_timing) {
      row.select_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
    }
    const Evaluation e =
        Evaluate(instance, config, selection.seeds, q,
                 RowKey(instance.rep_seed, kEvalStream, p, q));
    row.est_coverage = e.est_coverage;
    row.measured_coverage = e.measured_coverage;
    row.workers = e.workers;
    row.seeds = std::move(selection.seeds);
  } catch (const std::exception& ex) {
    const std::string message = "rep=" + std::to_string(rep) + " algorithm=" +
                                row.algorithm + " p=" + std::to_string(p) +
                                " q=" + FormatBudget(q) + ": " + ex.what();
    report.errors.push_back(message);
    std::clog << "error: " << message << '\n';
    return false;
  }
  Log(config, "rep=" + std::to_string(rep) + " " + row.algorithm +
                  " p=" + std::to_string(p) + " q=" + FormatBudget(q) +
                  " est=" + FormatDouble("%.4f", row.est_coverage) +
                  " measured=" + FormatDouble("%.4f", row.measured_coverage));
  if (csv) {
    WriteCsvRow(row, *csv);
    csv->flush();
  }
  report.rows.push_back(std::move(row));
  return true;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBasic:
      return "basic";
    case Algorithm::kFast:
      return "fast";
    case Algorithm::kNaiveFast:
      return "naive_fast";
    case Algorithm::kMaxDegree:
      return "max_degree";
    case Algorithm::kMaxCov:
      return "max_cov";
    case Algorithm::kHeuristicGreedy:
      return "hg";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

std::string_view ModelName(DiffusionModel model) {
  return model == DiffusionModel::kIndependentCascade ? "ic" : "lt";
}

void AttributeSpec::Validate() const {
  if (topics < 1) throw std::invalid_argument("attributes.topics must be >= 1");
  if (interest_prob.size() != 1 &&
      interest_prob.size() != static_cast<size_t>(topics)) {
    throw std::invalid_argument(
        "attributes.interest_prob needs one value or one per topic");
  }
  for (double p : interest_prob) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("interest probabilities must be in [0, 1]");
    }
  }
  if (minimum_values.empty()) {
    throw std::invalid_argument("attributes.minimum_values is empty");
  }
  if (minimum_kind == MinimumKind::kUniform &&
      (minimum_values.size() != 2 || !(minimum_values[0] <= minimum_values[1]))) {
    throw std::invalid_argument("uniform minimum needs lo <= hi");
  }
  for (double m : minimum_values) {
    if (!std::isfinite(m)) throw std::invalid_argument("minimum must be finite");
  }
}

std::vector<UserAttributes> GenerateAttributes(int num_users,
                                               const AttributeSpec& spec,
                                               uint64_t seed) {
  spec.Validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<UserAttributes> users(num_users);
  for (UserAttributes& u : users) {
    u.interest.resize(spec.topics);
    for (int t = 0; t < spec.topics; ++t) {
      const double p =
          spec.interest_prob.size() == 1 ? spec.interest_prob[0] : spec.interest_prob[t];
      u.interest[t] = unit(rng) < p ? 1 : 0;
    }
    if (spec.minimum_kind == AttributeSpec::MinimumKind::kUniform) {
      const double lo = spec.minimum_values[0];
      const double hi = spec.minimum_values[1];
      u.minimum = lo + (hi - lo) * unit(rng);
    } else {
      std::uniform_int_distribution<size_t> pick(0, spec.minimum_values.size() - 1);
      u.minimum = spec.minimum_values[pick(rng)];
    }
  }
  return users;
}

BudgetSplit SplitBudget(double total, double seed_reward, double nonseed_reward,
                        double z) {
  if (!(total > 0.0) || !(seed_reward > 0.0) || !(nonseed_reward > 0.0)) {
    throw std::invalid_argument("budget and rewards must be positive");
  }
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("budget ratio z must be finite and >= 0");
  }
  BudgetSplit split;
  split.seed_budget = total / (1.0 + z);
  split.nonseed_budget = total - split.seed_budget;
  split.p = static_cast<int>(std::floor(split.seed_budget / seed_reward + 1e-9));
  split.q_nonseed = static_cast<int64_t>(
      std::floor(split.nonseed_budget / nonseed_reward + 1e-9));
  if (split.p < 1) {
    throw std::invalid_argument("budget ratio z=" + FormatDouble("%g", z) +
                                " leaves no room for a seed");
  }
  return split;
}

ExperimentConfig ExperimentConfig::FromKeyValues(const KeyValueConfig& kv) {
  ExperimentConfig c;
  c.edges_path = kv.GetString("data.edges", "");
  c.checkins_path = kv.GetString("data.checkins", "");
  if (kv.Has("synth.communities")) {
    SynthParams s;
    const auto sizes = kv.GetInts("synth.communities", {});
    const auto p_in = kv.GetDoubles("synth.p_in", {0.05});
    if (p_in.size() != 1 && p_in.size() != sizes.size()) {
      throw std::invalid_argument("synth.p_in needs one value or one per community");
    }
    for (size_t i = 0; i < sizes.size(); ++i) {
      SynthCommunity community;
      community.size = static_cast<int>(sizes[i]);
      community.p_in = p_in.size() == 1 ? p_in[0] : p_in[i];
      s.communities.push_back(community);
    }
    s.p_out = kv.GetDouble("synth.p_out", s.p_out);
    s.home_subareas_per_community = static_cast<int>(
        kv.GetInt("synth.home_subareas", s.home_subareas_per_community));
    s.routine_slots =
        static_cast<int>(kv.GetInt("synth.routine_slots", s.routine_slots));
    s.checkin_rate = kv.GetDouble("synth.checkin_rate", s.checkin_rate);
    s.home_fraction = kv.GetDouble("synth.home_fraction", s.home_fraction);
    s.weeks = static_cast<int>(kv.GetInt("synth.weeks", s.weeks));
    c.synth = s;
  }

  c.grid.lat_min = kv.GetDouble("grid.lat_min", c.grid.lat_min);
  c.grid.lat_max = kv.GetDouble("grid.lat_max", c.grid.lat_max);
  c.grid.lon_min = kv.GetDouble("grid.lon_min", c.grid.lon_min);
  c.grid.lon_max = kv.GetDouble("grid.lon_max", c.grid.lon_max);
  c.grid.cell_size_km = kv.GetDouble("grid.cell_km", c.grid.cell_size_km);
  if (kv.Has("grid.cell_deg")) c.cell_degrees = kv.GetDouble("grid.cell_deg", 0);
  c.grid.mask = Narrow<int>(kv.GetInts("grid.mask", {}));

  c.cycles.day_start_hour = static_cast<int>(
      kv.GetInt("cycles.day_start_hour", c.cycles.day_start_hour));
  c.cycles.day_end_hour =
      static_cast<int>(kv.GetInt("cycles.day_end_hour", c.cycles.day_end_hour));
  c.cycles.cycle_hours =
      static_cast<int>(kv.GetInt("cycles.cycle_hours", c.cycles.cycle_hours));
  c.cycles.num_days =
      static_cast<int>(kv.GetInt("cycles.num_days", c.cycles.num_days));

  PropagationConfig& m = c.propagation;
  const std::string model = kv.GetString("model", "ic");
  if (model == "ic") {
    m.model = DiffusionModel::kIndependentCascade;
  } else if (model == "lt") {
    m.model = DiffusionModel::kLinearThreshold;
  } else {
    throw std::invalid_argument("model must be ic or lt, got '" + model + "'");
  }
  m.p0_range = ParseInterval(kv, "p0", m.p0_range);
  m.theta0_range = ParseInterval(kv, "theta0", m.theta0_range);
  m.i_max1 = kv.GetDouble("i_max1", m.i_max1);
  m.i_max2 = kv.GetDouble("i_max2", m.i_max2);
  const std::string similarity = kv.GetString("similarity", "cosine");
  if (similarity == "cosine") {
    m.similarity = SimilarityFn::kCosine;
  } else if (similarity == "jaccard") {
    m.similarity = SimilarityFn::kJaccard;
  } else {
    throw std::invalid_argument("similarity must be cosine or jaccard");
  }
  const std::string attraction = kv.GetString("attraction", "tanh");
  if (attraction == "tanh") {
    m.attraction = AttractionFn::kTanh;
  } else if (attraction == "linear") {
    m.attraction = AttractionFn::kLinear;
  } else {
    throw std::invalid_argument("attraction must be tanh or linear");
  }
  m.seeds_count_toward_budget =
      kv.GetBool("seeds_count_toward_budget", m.seeds_count_toward_budget);
  m.per_user_draws = kv.GetBool("per_user_draws", m.per_user_draws);

  const auto topic = kv.GetInts("task.topic", {1, 1, 0, 0, 0});
  c.task.topic.clear();
  for (int64_t bit : topic) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("task.topic must be 0/1");
    c.task.topic.push_back(static_cast<uint8_t>(bit));
  }
  c.task.incentive = kv.GetDouble("task.incentive", c.task.incentive);

  AttributeSpec& a = c.attributes;
  a.topics = static_cast<int>(
      kv.GetInt("attributes.topics", static_cast<int64_t>(c.task.topic.size())));
  a.interest_prob = kv.GetDoubles("attributes.interest_prob", a.interest_prob);
  const std::string kind = kv.GetString("attributes.minimum", "uniform");
  if (kind == "uniform") {
    a.minimum_kind = AttributeSpec::MinimumKind::kUniform;
  } else if (kind == "discrete") {
    a.minimum_kind = AttributeSpec::MinimumKind::kDiscrete;
  } else {
    throw std::invalid_argument("attributes.minimum must be uniform or discrete");
  }
  a.minimum_values = kv.GetDoubles("attributes.minimum_values", a.minimum_values);
  c.min_checkins =
      static_cast<int>(kv.GetInt("min_checkins", c.min_checkins));

  std::vector<int64_t> default_p(c.p_values.begin(), c.p_values.end());
  c.p_values = Narrow<int>(kv.GetInts("p", default_p));
  if (kv.Has("q")) {
    c.q_values.clear();
    for (const std::string& q : kv.GetStrings("q", {})) {
      c.q_values.push_back(ParseBudget(q));
    }
  }
  if (kv.Has("algorithms")) {
    c.algorithms.clear();
    for (const std::string& name : kv.GetStrings("algorithms", {})) {
      const auto algorithm = ParseAlgorithm(name);
      if (!algorithm) throw std::invalid_argument("unknown algorithm '" + name + "'");
      c.algorithms.push_back(*algorithm);
    }
  }
  c.repetitions = static_cast<int>(kv.GetInt("repetitions", c.repetitions));
  c.seed = static_cast<uint64_t>(kv.GetInt("seed", static_cast<int64_t>(c.seed)));
  c.beta = kv.GetDouble("beta", c.beta);
  c.mc_runs = static_cast<int>(kv.GetInt("mc_runs", c.mc_runs));
  c.probe_runs = static_cast<int>(kv.GetInt("probe_runs", c.probe_runs));
  c.eval_runs = static_cast<int>(kv.GetInt("eval_runs", c.eval_runs));
  c.threads = static_cast<int>(kv.GetInt("threads", c.threads));
  const std::string evaluation = kv.GetString("evaluation", "realization");
  if (evaluation == "realization") {
    c.expected_evaluation = false;
  } else if (evaluation == "expected") {
    c.expected_evaluation = true;
  } else {
    throw std::invalid_argument("evaluation must be realization or expected");
  }
  c.record_timing = kv.GetBool("timing", c.record_timing);
  c.output_path = kv.GetString("output", "");

  BudgetSplitSpec& b = c.budget_split;
  b.total = kv.GetDouble("budget.total", b.total);
  b.seed_reward = kv.GetDouble("budget.seed_reward", b.seed_reward);
  b.nonseed_reward = kv.GetDouble("budget.nonseed_reward", b.nonseed_reward);
  b.z = kv.GetDoubles("budget.z", b.z);
  const std::string algorithm = kv.GetString("budget.algorithm", "fast");
  const auto parsed = ParseAlgorithm(algorithm);
  if (!parsed) throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
  b.algorithm = *parsed;

  const auto unread = kv.UnreadKeys();
  if (!unread.empty()) {
    std::string names;
    for (const auto& key : unread) names += (names.empty() ? "" : ", ") + key;
    throw std::invalid_argument("unknown config keys: " + names);
  }
  return c;
}

void ExperimentConfig::Validate() const {
  namespace fs = std::filesystem;
  if (edges_path.empty() != checkins_path.empty()) {
    throw std::invalid_argument("data.edges and data.checkins go together");
  }
  if (edges_path.empty() && !synth) {
    throw std::invalid_argument("configure data.* files or synth.* parameters");
  }
  for (const std::string& path : {edges_path, checkins_path}) {
    if (!path.empty() && !fs::exists(path)) {
      throw std::invalid_argument("file not found: " + path);
    }
  }
  if (synth) synth->Validate();
  MakeGrid();
  cycles.Validate();
  propagation.Validate();
  attributes.Validate();
  if (static_cast<int>(task.topic.size()) != attributes.topics) {
    throw std::invalid_argument("task.topic length must equal attributes.topics");
  }
  if (!(task.incentive >= 0.0)) throw std::invalid_argument("task.incentive < 0");
  if (min_checkins < 1) throw std::invalid_argument("min_checkins must be >= 1");
  if (p_values.empty() || q_values.empty() || algorithms.empty()) {
    throw std::invalid_argument("p, q and algorithms must be non-empty");
  }
  for (int p : p_values) {
    if (p < 1) throw std::invalid_argument("p values must be >= 1");
    for (int64_t q : q_values) {
      if (q < 1) throw std::invalid_argument("q values must be >= 1");
      if (propagation.seeds_count_toward_budget && p > q) {
        throw std::invalid_argument("p must not exceed q when seeds count "
                                    "toward the budget");
      }
    }
  }
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta not in [0, 1]");
  if (mc_runs < 1 || probe_runs < 1 || eval_runs < 1) {
    throw std::invalid_argument("mc_runs, probe_runs and eval_runs must be >= 1");
  }
  if (budget_split.z.empty()) throw std::invalid_argument("budget.z is empty");
}

Grid ExperimentConfig::MakeGrid() const {
  if (cell_degrees) {
    return Grid::WithCellDegrees(grid.lat_min, grid.lat_max, grid.lon_min,
                                 grid.lon_max, *cell_degrees, *cell_degrees,
                                 grid.mask);
  }
  return Grid(grid);
}

Dataset LoadExperimentDataset(const ExperimentConfig& config) {
  const Grid grid = config.MakeGrid();
  Dataset raw;
  if (!config.edges_path.empty()) {
    std::ifstream edges(config.edges_path);
    if (!edges) throw std::invalid_argument("cannot open " + config.edges_path);
    std::ifstream checkins(config.checkins_path);
    if (!checkins) throw std::invalid_argument("cannot open " + config.checkins_path);
    SocialGraph graph = LoadEdges(edges);
    CheckInLoad load = LoadCheckIns(checkins);
    int64_t unmatched = 0;
    raw = Dataset::Assemble(std::move(graph), load.records, &unmatched);
    if (config.verbose && (load.dropped > 0 || unmatched > 0)) {
      std::clog << "dropped " << load.dropped << " malformed check-in rows, "
                << unmatched << " check-ins of users outside the graph\n";
    }
  } else {
    raw = Synthesize(*config.synth, grid, config.cycles,
                     DeriveSeed(config.seed, kSynthStream))
              .dataset;
  }
  Dataset filtered = FilterActiveRegion(raw, grid, config.min_checkins);
  Log(config, "dataset: " + std::to_string(filtered.graph.num_nodes()) +
                  " users, " + std::to_string(filtered.graph.num_edges()) +
                  " edges, " + std::to_string(filtered.num_checkins()) +
                  " check-ins after region filter");
  return filtered;
}

double MeasureActualCoverage(std::span<const NodeId> workers,
                             const Dataset& test, const Grid& grid,
                             const CycleSpec& cycles, TimePoint test_epoch) {
  const CellUniverse universe = MakeCellUniverse(grid, cycles);
  if (universe.total_cells == 0) return 0.0;
  std::vector<uint8_t> covered(universe.total_cells, 0);
  int64_t count = 0;
  for (NodeId w : workers) {
    for (const CheckIn& c : test.checkins[w]) {
      const auto subarea = grid.LocateSubarea(c.lat, c.lon);
      if (!subarea || grid.masked(*subarea)) continue;
      const auto cycle = LocateCycle(c.time, cycles, test_epoch);
      if (!cycle) continue;
      const int64_t cell =
          static_cast<int64_t>(grid.ActiveRank(*subarea)) * universe.cycles + *cycle;
      if (!covered[cell]) {
        covered[cell] = 1;
        ++count;
      }
    }
  }
  return static_cast<double>(count) / static_cast<double>(universe.total_cells);
}

Instance::Instance(const Dataset& dataset, const ExperimentConfig& config,
                   int rep, std::optional<MobilityProfile> cached_profile)
    : grid(config.MakeGrid()),
      cycles(config.cycles),
      rep_seed(DeriveSeed(config.seed, static_cast<uint64_t>(rep))),
      split(SplitTrainTest(dataset, cycles, DeriveSeed(rep_seed, kSplitStream))),
      profile(cached_profile ? std::move(*cached_profile)
                             : EstimateLambda(split.train, grid, cycles,
                                              split.calendar, split.train_weeks)),
      attributes(GenerateAttributes(dataset.graph.num_nodes(), config.attributes,
                                    DeriveSeed(rep_seed, kAttributeStream))) {
  const CellUniverse universe = MakeCellUniverse(grid, cycles);
  if (profile.num_users() != dataset.graph.num_nodes() ||
      profile.universe().subareas != universe.subareas ||
      profile.universe().cycles != universe.cycles) {
    throw std::invalid_argument("profile does not match the dataset and grid");
  }
  model = std::make_unique<PropagationModel>(
      split.train.graph,
      FactorProducts(config.task, attributes, config.propagation),
      config.propagation);
  candidates.resize(dataset.graph.num_nodes());
  std::iota(candidates.begin(), candidates.end(), 0);
}

SelectorContext Instance::Context(const ExperimentConfig& config) const {
  SelectorContext ctx;
  ctx.model = model.get();
  ctx.profile = &profile;
  ctx.mc_runs = config.mc_runs;
  ctx.probe_runs = config.probe_runs;
  ctx.num_threads = config.threads;
  return ctx;
}

Selection RunSelector(const Instance& instance, const ExperimentConfig& config,
                      Algorithm algorithm, int p, int64_t q, uint64_t seed) {
  const SelectorContext ctx = instance.Context(config);
  Selection selection;
  switch (algorithm) {
    case Algorithm::kBasic:
      return BasicSelector(instance.candidates, p, q, ctx, seed);
    case Algorithm::kFast:
      return FastSelector(instance.candidates, p, q, config.beta, ctx, seed);
    case Algorithm::kNaiveFast:
      return NaiveFast(instance.candidates, p, config.beta, instance.graph(),
                       instance.profile);
    case Algorithm::kMaxDegree:
      selection.seeds = MaxDegreeBaseline(instance.candidates, p, instance.graph());
      break;
    case Algorithm::kMaxCov:
      selection.seeds = MaxCovBaseline(instance.candidates, p, instance.profile);
      break;
    case Algorithm::kHeuristicGreedy:
      selection.seeds = HeuristicGreedyBaseline(instance.candidates, p,
                                                instance.graph(), instance.profile);
      break;
  }
  return selection;
}

std::string CsvQuote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

void WriteCsvHeader(std::ostream& out) {
  out << "algorithm,model,p,q,z,rep,est_coverage,measured_coverage,workers,"
         "select_ms\n";
}

void WriteCsvRow(const CoverageRow& row, std::ostream& out) {
  const bool whole = row.workers == std::floor(row.workers);
  out << CsvQuote(row.algorithm) << ',' << CsvQuote(row.model) << ',' << row.p
      << ',' << FormatBudget(row.q) << ','
      << (row.z ? FormatDouble("%g", *row.z) : "") << ',' << row.rep << ','
      << FormatDouble("%.6f", row.est_coverage) << ','
      << FormatDouble("%.6f", row.measured_coverage) << ','
      << FormatDouble(whole ? "%.0f" : "%.3f", row.workers) << ','
      << (row.select_ms ? FormatDouble("%.3f", *row.select_ms) : "") << '\n';
}

CoverageReport RunExperiment(const ExperimentConfig& config,
                             const Dataset& dataset, std::ostream* csv) {
  config.Validate();
  CoverageReport report;
  if (csv) WriteCsvHeader(*csv);
  for (int rep = 0; rep < config.repetitions; ++rep) {
    std::unique_ptr<Instance> instance;
    try {
      instance = std::make_unique<Instance>(dataset, config, rep);
    } catch (const std::exception& ex) {
      const std::string message =
          "rep=" + std::to_string(rep) + " preparation: " + ex.what();
      report.errors.push_back(message);
      std::clog << "error: " << message << '\n';
      continue;
    }
    for (int p : config.p_values) {
      for (int64_t q : config.q_values) {
        for (Algorithm algorithm : config.algorithms) {
          RunRow(*instance, config, algorithm, p, q, rep, std::nullopt, report,
                 csv);
        }
      }
    }
  }
  return report;
}

CoverageReport RunBudgetSplit(const ExperimentConfig& config,
                              const Dataset& dataset, std::ostream* csv) {
  config.Validate();
  // Seed and non-seed budgets are disjoint: q counts recruited non-seeds only.
  ExperimentConfig split_config = config;
  split_config.propagation.seeds_count_toward_budget = false;
  const BudgetSplitSpec& b = config.budget_split;

  CoverageReport report;
  if (csv) WriteCsvHeader(*csv);
  for (int rep = 0; rep < config.repetitions; ++rep) {
    std::unique_ptr<Instance> instance;
    try {
      instance = std::make_unique<Instance>(dataset, split_config, rep);
    } catch (const std::exception& ex) {
      const std::string message =
          "rep=" + std::to_string(rep) + " preparation: " + ex.what();
      report.errors.push_back(message);
      std::clog << "error: " << message << '\n';
      continue;
    }
    for (double z : b.z) {
      BudgetSplit split;
      try {
        split = SplitBudget(b.total, b.seed_reward, b.nonseed_reward, z);
      } catch (const std::exception& ex) {
        const std::string message = "rep=" + std::to_string(rep) +
                                    " z=" + FormatDouble("%g", z) + ": " +
                                    ex.what();
        report.errors.push_back(message);
        std::clog << "error: " << message << '\n';
        continue;
      }
      RunRow(*instance, split_config, b.algorithm, split.p, split.q_nonseed,
             rep, z, report, csv);
    }
  }
  return report;
}

}  // namespace mcsrecruit
