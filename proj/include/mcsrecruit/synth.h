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

// Community-structured test datasets: a planted-partition friendship graph
// whose users check in along weekly routines concentrated on their
// community's home subareas.

#ifndef MCSRECRUIT_SYNTH_H_
#define MCSRECRUIT_SYNTH_H_

#include <cstdint>
#include <vector>

#include "mcsrecruit/dataset.h"
#include "mcsrecruit/grid.h"

namespace mcsrecruit {

struct SynthCommunity {
  int size = 100;
  double p_in = 0.05;  // intra-community edge probability
  // Gross subarea indices; empty means "assign automatically".
  std::vector<int> home_subareas;
};

struct SynthParams {
  std::vector<SynthCommunity> communities;
  double p_out = 0.0;  // inter-community edge probability
  int home_subareas_per_community = 4;
  // Each user repeats a routine of this many (subarea, cycle) slots.
  int routine_slots = 6;
  // Mean check-ins per routine slot per week.
  double checkin_rate = 1.0;
  // Probability that a routine slot lies in a home subarea.
  double home_fraction = 0.9;
  int weeks = 4;
  // Must be a Monday 00:00 UTC.
  TimePoint start = std::chrono::sys_days{std::chrono::year{2010} /
                                          std::chrono::January / 4};

  // Throws std::invalid_argument.
  void Validate() const;
};

struct SyntheticDataset {
  Dataset dataset;
  std::vector<int> community;                     // per node
  std::vector<std::vector<int>> home_subareas;    // per community
};

// User ids run 0..N-1, community by community. Deterministic given seed.
SyntheticDataset Synthesize(const SynthParams& params, const Grid& grid,
                            const CycleSpec& cycles, uint64_t seed);

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_SYNTH_H_
