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

// Per-user check-in rates and the coverage probabilities derived from them.
//
// A user's check-ins in cell (subarea i, cycle j) are modeled as a Poisson
// process with rate lambda[i][j], estimated as the mean number of check-ins
// per training week in that weekday/time slot. The probability of at least
// one check-in, 1 - exp(-lambda), is the user's coverage probability alpha
// for the cell.

#ifndef MCSRECRUIT_MOBILITY_H_
#define MCSRECRUIT_MOBILITY_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mcsrecruit/dataset.h"
#include "mcsrecruit/grid.h"
#include "mcsrecruit/types.h"

namespace mcsrecruit {

// One nonzero entry of a flattened m x n matrix. `cell` is
// active_subarea_rank * n + cycle (subarea-major, cycle-minor).
struct CellValue {
  int32_t cell = 0;
  double value = 0.0;
  friend bool operator==(const CellValue&, const CellValue&) = default;
};

// Dense row-concatenated mobility vector of length m * n.
using MobilityVector = std::vector<double>;

double CheckinCountPmf(double lambda, int h);
double CoverageProb(double lambda);

// Cosine similarity; 0 when either vector has zero norm.
double TrajectorySimilarity(std::span<const double> a, std::span<const double> b);
// Same on sparse vectors sorted by cell.
double TrajectorySimilarity(std::span<const CellValue> a,
                            std::span<const CellValue> b);

// Mean similarity of `u` to the members of `set`; 0 for an empty set.
double AvgSimilarityToSet(std::span<const double> u,
                          std::span<const MobilityVector> set);

class MobilityProfile {
 public:
  MobilityProfile() = default;
  MobilityProfile(int num_users, CellUniverse universe);

  int num_users() const { return static_cast<int>(rates_.size()); }
  const CellUniverse& universe() const { return universe_; }

  // `rates` must be sorted by cell, with non-negative values. Zero entries
  // are discarded.
  void SetRates(NodeId user, std::vector<CellValue> rates);
  void set_visited_subareas(NodeId user, int count) { visited_[user] = count; }

  std::span<const CellValue> rates(NodeId user) const { return rates_[user]; }
  // alpha = 1 - exp(-lambda) for every nonzero rate.
  std::span<const CellValue> coverage(NodeId user) const { return alpha_[user]; }
  double norm(NodeId user) const { return norms_[user]; }
  // Distinct subareas with any training check-in.
  int visited_subareas(NodeId user) const { return visited_[user]; }

  double Rate(NodeId user, int subarea_rank, int cycle) const;
  MobilityVector DenseVector(NodeId user) const;
  double Similarity(NodeId a, NodeId b) const;

  // Slots whose rate had to be set to zero because the training span held
  // no occurrence of them.
  int64_t empty_slot_warnings() const { return empty_slot_warnings_; }
  void set_empty_slot_warnings(int64_t n) { empty_slot_warnings_ = n; }

  // CSV cache: a "# mcsrecruit-profile v1 m=<m> n=<n> users=<k>" line, a
  // "user,subarea,cycle,lambda" header, then one row per nonzero rate with
  // user = NodeId and subarea = active rank. A row with cycle -1 carries the
  // visited-subarea count in the lambda column.
  void WriteCsv(std::ostream& out) const;
  // Throws ParseError.
  static MobilityProfile ReadCsv(std::istream& in);

 private:
  CellUniverse universe_;
  std::vector<std::vector<CellValue>> rates_;
  std::vector<std::vector<CellValue>> alpha_;
  std::vector<double> norms_;
  std::vector<int> visited_;
  int64_t empty_slot_warnings_ = 0;
};

// Rates from the check-ins of `train` that fall in `weeks` of `calendar`.
// Each slot occurs once per listed week, so lambda = count / weeks.size().
MobilityProfile EstimateLambda(const Dataset& train, const Grid& grid,
                               const CycleSpec& cycles,
                               const WeekCalendar& calendar,
                               std::span<const int> weeks);

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_MOBILITY_H_
