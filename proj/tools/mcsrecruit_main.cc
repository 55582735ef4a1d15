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

// Command-line front end: profile, select, bench, budget-split, synth.

#include <omp.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcsrecruit/config.h"
#include "mcsrecruit/dataset.h"
#include "mcsrecruit/harness.h"
#include "mcsrecruit/mobility.h"
#include "mcsrecruit/random.h"
#include "mcsrecruit/synth.h"

namespace {

using mcsrecruit::ExperimentConfig;

struct GlobalFlags {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<int64_t> seed;
  std::optional<int> threads;
  bool quiet = false;
};

ExperimentConfig LoadConfig(const GlobalFlags& flags) {
  mcsrecruit::KeyValueConfig kv;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw std::invalid_argument("cannot open " + flags.config_path);
    kv = mcsrecruit::KeyValueConfig::Parse(in);
  }
  for (const std::string& assignment : flags.overrides) kv.Assign(assignment);
  if (flags.seed) kv.Set("seed", std::to_string(*flags.seed));
  if (flags.threads) kv.Set("threads", std::to_string(*flags.threads));
  ExperimentConfig config = ExperimentConfig::FromKeyValues(kv);
  config.verbose = !flags.quiet;
  if (config.threads > 0) omp_set_num_threads(config.threads);
  return config;
}

// Opens `path` for writing, or returns stdout when it is empty or "-".
std::ostream& OpenOutput(const std::string& path,
                         std::unique_ptr<std::ofstream>& file) {
  if (path.empty() || path == "-") return std::cout;
  file = std::make_unique<std::ofstream>(path);
  if (!*file) throw std::invalid_argument("cannot write " + path);
  return *file;
}

int ReportErrors(const mcsrecruit::CoverageReport& report) {
  if (report.errors.empty()) return 0;
  std::cerr << report.errors.size() << " row(s) failed\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seed selection for temporal-spatial crowd-sensing coverage"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("-c,--config", flags.config_path, "key = value config file");
  app.add_option("-s,--set", flags.overrides,
                 "override a config key, e.g. --set model=lt (repeatable)");
  app.add_option("--seed", flags.seed, "master random seed");
  app.add_option("-t,--threads", flags.threads, "worker threads (0: all)");
  app.add_flag("-q,--quiet", flags.quiet, "suppress progress lines");

  auto* profile_cmd =
      app.add_subcommand("profile", "estimate and cache mobility profiles");
  std::string profile_out;
  int profile_rep = 0;
  profile_cmd->add_option("-o,--out", profile_out, "profile CSV")->required();
  profile_cmd->add_option("--rep", profile_rep, "repetition whose split to use");

  auto* select_cmd = app.add_subcommand("select", "run one selector, print seeds");
  std::string algorithm_name = "fast";
  int select_p = 25;
  std::string select_q = "2000";
  int select_rep = 0;
  std::string profile_in;
  select_cmd->add_option("-a,--algorithm", algorithm_name,
                         "basic, fast, naive_fast, max_degree, max_cov or hg");
  select_cmd->add_option("-p", select_p, "number of seeds");
  select_cmd->add_option("-k,--budget", select_q, "worker budget q (or inf)");
  select_cmd->add_option("--rep", select_rep, "repetition");
  select_cmd->add_option("--profile", profile_in, "cached profile CSV");

  auto* bench_cmd = app.add_subcommand("bench", "full sweep to CSV");
  std::string bench_out;
  bench_cmd->add_option("-o,--out", bench_out, "CSV path (default: stdout)");

  auto* split_cmd =
      app.add_subcommand("budget-split", "coverage vs seed/non-seed budget ratio");
  std::string split_out;
  split_cmd->add_option("-o,--out", split_out, "CSV path (default: stdout)");

  auto* synth_cmd = app.add_subcommand("synth", "write a synthetic dataset");
  std::string edges_out;
  std::string checkins_out;
  synth_cmd->add_option("--edges", edges_out, "edge list output")->required();
  synth_cmd->add_option("--checkins", checkins_out, "check-in output")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig config = LoadConfig(flags);

    if (*synth_cmd) {
      if (!config.synth) throw std::invalid_argument("no synth.* keys configured");
      config.synth->Validate();
      const auto data = mcsrecruit::Synthesize(
          *config.synth, config.MakeGrid(), config.cycles,
          mcsrecruit::DeriveSeed(config.seed, 5));
      std::ofstream edges(edges_out);
      std::ofstream checkins(checkins_out);
      if (!edges || !checkins) throw std::invalid_argument("cannot write output");
      mcsrecruit::WriteEdges(data.dataset.graph, edges);
      mcsrecruit::WriteCheckIns(data.dataset.AllCheckIns(), checkins);
      return 0;
    }

    config.Validate();
    const mcsrecruit::Dataset dataset = mcsrecruit::LoadExperimentDataset(config);

    if (*profile_cmd) {
      const mcsrecruit::Instance instance(dataset, config, profile_rep);
      std::ofstream out(profile_out);
      if (!out) throw std::invalid_argument("cannot write " + profile_out);
      instance.profile.WriteCsv(out);
      if (instance.profile.empty_slot_warnings() > 0) {
        std::cerr << "warning: " << instance.profile.empty_slot_warnings()
                  << " user(s) without training check-ins in any slot\n";
      }
      return 0;
    }

    if (*select_cmd) {
      const auto algorithm = mcsrecruit::ParseAlgorithm(algorithm_name);
      if (!algorithm) {
        throw std::invalid_argument("unknown algorithm '" + algorithm_name + "'");
      }
      mcsrecruit::KeyValueConfig q_kv;
      q_kv.Set("q", select_q);
      const int64_t q = ExperimentConfig::FromKeyValues(q_kv).q_values.at(0);
      std::optional<mcsrecruit::MobilityProfile> cached;
      if (!profile_in.empty()) {
        std::ifstream in(profile_in);
        if (!in) throw std::invalid_argument("cannot open " + profile_in);
        cached = mcsrecruit::MobilityProfile::ReadCsv(in);
      }
      const mcsrecruit::Instance instance(dataset, config, select_rep,
                                          std::move(cached));
      const auto selection = mcsrecruit::RunSelector(
          instance, config, *algorithm, select_p, q,
          mcsrecruit::DeriveSeed(instance.rep_seed, 3));
      for (mcsrecruit::NodeId v : selection.seeds) {
        std::cout << instance.graph().user_id(v) << '\n';
      }
      return 0;
    }

    if (*bench_cmd) {
      std::unique_ptr<std::ofstream> file;
      std::ostream& out =
          OpenOutput(bench_out.empty() ? config.output_path : bench_out, file);
      return ReportErrors(mcsrecruit::RunExperiment(config, dataset, &out));
    }

    if (*split_cmd) {
      std::unique_ptr<std::ofstream> file;
      std::ostream& out =
          OpenOutput(split_out.empty() ? config.output_path : split_out, file);
      return ReportErrors(mcsrecruit::RunBudgetSplit(config, dataset, &out));
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
