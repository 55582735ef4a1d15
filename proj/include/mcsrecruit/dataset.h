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

// Check-in datasets: SNAP-format ingestion, region/activity filtering and the
// weekly train/test protocol.

#ifndef MCSRECRUIT_DATASET_H_
#define MCSRECRUIT_DATASET_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcsrecruit/grid.h"
#include "mcsrecruit/social_graph.h"
#include "mcsrecruit/types.h"

namespace mcsrecruit {

struct CheckIn {
  UserId user = 0;
  TimePoint time{};
  double lat = 0.0;
  double lon = 0.0;
  std::string location;
};

// Social graph plus check-ins grouped by node. Every check-in belongs to a
// node of the graph.
struct Dataset {
  SocialGraph graph;
  std::vector<std::vector<CheckIn>> checkins;  // indexed by NodeId

  // Groups `records` by node; records of users missing from the graph are
  // discarded and counted in *dropped when non-null.
  static Dataset Assemble(SocialGraph graph, std::span<const CheckIn> records,
                          int64_t* dropped = nullptr);

  int64_t num_checkins() const;
  std::vector<CheckIn> AllCheckIns() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int64_t line() const { return line_; }

 private:
  int64_t line_;
};

// SNAP edge list: whitespace-separated integer pairs, '#' comments. Throws
// ParseError naming the offending line.
SocialGraph LoadEdges(std::istream& in);

// Writes one line per undirected edge; isolated nodes are written as a
// self-loop line so that LoadEdges restores them.
void WriteEdges(const SocialGraph& graph, std::ostream& out);

struct CheckInLoad {
  std::vector<CheckIn> records;
  int64_t dropped = 0;
};

// Tab-separated user, ISO-8601 UTC time, lat, lon, location-id. Rows with an
// unparsable time or out-of-range coordinates are dropped and counted.
// Throws std::runtime_error on stream failure.
CheckInLoad LoadCheckIns(std::istream& in);
void WriteCheckIns(std::span<const CheckIn> records, std::ostream& out);

// "YYYY-MM-DDTHH:MM:SSZ".
std::optional<TimePoint> ParseTimestamp(std::string_view text);
std::string FormatTimestamp(TimePoint t);

// Keeps check-ins that fall in unmasked grid cells, then keeps users with at
// least `min_checkins` such check-ins; the graph is induced on kept users.
Dataset FilterActiveRegion(const Dataset& ds, const Grid& grid,
                           int min_checkins);

// Calendar weeks (Monday 00:00 UTC) counted from `anchor`.
struct WeekCalendar {
  TimePoint anchor{};

  // Calendar whose week 0 contains `t`.
  static WeekCalendar Containing(TimePoint t);
  int WeekOf(TimePoint t) const;
  TimePoint WeekStart(int week) const;
};

struct TrainTestSplit {
  Dataset train;
  Dataset test;
  WeekCalendar calendar;
  int test_week = 0;
  std::vector<int> train_weeks;

  // Day 0, hour 0 of the held-out week.
  TimePoint test_epoch() const { return calendar.WeekStart(test_week); }
};

// Picks one calendar week uniformly at random as the test week; all other
// weeks of the span train. Only check-ins inside the daily sensing window are
// kept. Both halves share the graph. Throws std::invalid_argument when the
// data spans fewer than two weeks.
TrainTestSplit SplitTrainTest(const Dataset& ds, const CycleSpec& cycles,
                              uint64_t seed);

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_DATASET_H_
