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

#include "mcsrecruit/dataset.h"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "mcsrecruit/social_graph.h"

namespace mcsrecruit {
namespace {

using std::chrono::days;
using std::chrono::hours;

const TimePoint kMonday = std::chrono::sys_days{std::chrono::year{2010} /
                                                std::chrono::October / 4};

SocialGraph Edges(const std::string& text) {
  std::istringstream in(text);
  return LoadEdges(in);
}

CheckIn At(UserId user, TimePoint t, double lat = 0.5, double lon = 0.5) {
  return CheckIn{user, t, lat, lon, "loc"};
}

TEST(LoadEdgesTest, PathGraph) {
  const SocialGraph g = Edges("0 1\n1 2");
  ASSERT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.degree(*g.NodeOf(0)), 1);
  EXPECT_EQ(g.degree(*g.NodeOf(1)), 2);
  EXPECT_EQ(g.degree(*g.NodeOf(2)), 1);
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(LoadEdgesTest, DeduplicatesAndDropsSelfLoops) {
  const SocialGraph g = Edges("0 1\n1 0\n0 0");
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_TRUE(g.HasEdge(*g.NodeOf(0), *g.NodeOf(1)));
  EXPECT_FALSE(g.HasEdge(*g.NodeOf(0), *g.NodeOf(0)));
}

TEST(LoadEdgesTest, CommentsBlankLinesAndTabs) {
  const SocialGraph g = Edges("# SNAP header\n\n10\t20\n  20 30  \n");
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(LoadEdgesTest, MalformedLineNamesLineNumber) {
  try {
    Edges("0 1\n# ok\n2 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(Edges("7\n"), ParseError);
}

TEST(LoadEdgesTest, RoundTripIsStable) {
  std::mt19937_64 rng(3);
  std::ostringstream text;
  for (int i = 0; i < 200; ++i) {
    text << rng() % 60 << ' ' << rng() % 60 << '\n';
  }
  text << "99 99\n";  // isolated node
  const SocialGraph first = Edges(text.str());
  std::ostringstream once;
  WriteEdges(first, once);
  const SocialGraph second = Edges(once.str());
  std::ostringstream twice;
  WriteEdges(second, twice);
  EXPECT_EQ(once.str(), twice.str());
  EXPECT_EQ(first.num_nodes(), second.num_nodes());
  EXPECT_EQ(first.EdgeList(), second.EdgeList());
}

TEST(SocialGraphTest, SymmetricSortedAdjacency) {
  const SocialGraph g = Edges("5 3\n3 9\n9 5\n5 1\n");
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto nbrs = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
    EXPECT_EQ(static_cast<int>(nbrs.size()), g.degree(v));
    for (NodeId w : nbrs) EXPECT_TRUE(g.HasEdge(w, v));
  }
  // Node ids follow ascending user ids.
  EXPECT_EQ(g.user_id(0), 1);
  EXPECT_EQ(g.user_id(3), 9);
}

TEST(SocialGraphTest, InducedSubgraphMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<UserId, UserId>> edges;
    for (int i = 0; i < 25; ++i) {
      edges.emplace_back(rng() % 12, rng() % 12);
    }
    const SocialGraph g = SocialGraph::FromEdges({}, edges);
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (rng() % 2) keep.push_back(v);
    }
    const SocialGraph sub = g.InducedSubgraph(keep);
    ASSERT_EQ(sub.num_nodes(), static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
      EXPECT_EQ(sub.user_id(i), g.user_id(keep[i]));
      for (size_t j = 0; j < keep.size(); ++j) {
        EXPECT_EQ(sub.HasEdge(i, j), g.HasEdge(keep[i], keep[j]));
      }
    }
  }
}

TEST(LoadCheckInsTest, FormatEcho) {
  std::istringstream in("5\t2010-10-17T01:48:53Z\t39.74\t-104.98\tloc9\n");
  const CheckInLoad load = LoadCheckIns(in);
  ASSERT_EQ(load.records.size(), 1u);
  EXPECT_EQ(load.dropped, 0);
  const CheckIn& c = load.records[0];
  EXPECT_EQ(c.user, 5);
  EXPECT_DOUBLE_EQ(c.lat, 39.74);
  EXPECT_DOUBLE_EQ(c.lon, -104.98);
  EXPECT_EQ(c.location, "loc9");
  EXPECT_EQ(FormatTimestamp(c.time), "2010-10-17T01:48:53Z");
}

TEST(LoadCheckInsTest, OutOfRangeLatitudeIsDropped) {
  std::istringstream in("5\t2010-10-17T01:48:53Z\t91.0\t-104.98\tloc9\n");
  const CheckInLoad load = LoadCheckIns(in);
  EXPECT_TRUE(load.records.empty());
  EXPECT_EQ(load.dropped, 1);
}

TEST(LoadCheckInsTest, EmptyStream) {
  std::istringstream in("");
  const CheckInLoad load = LoadCheckIns(in);
  EXPECT_TRUE(load.records.empty());
  EXPECT_EQ(load.dropped, 0);
}

TEST(LoadCheckInsTest, CountsEveryKindOfBadRow) {
  std::istringstream in(
      "1\t2010-10-17T01:48:53Z\t0.0\t0.0\tok\n"
      "2\tyesterday\t0.0\t0.0\tbad time\n"
      "3\t2010-02-30T01:00:00Z\t0.0\t0.0\tbad date\n"
      "4\t2010-10-17T01:48:53Z\t\t\tnull coords\n"
      "x\t2010-10-17T01:48:53Z\t0.0\t0.0\tbad user\n"
      "6\t2010-10-17T01:48:53Z\t0.0\t181\tbad lon\n"
      "7\t2010-10-17T01:48:53Z\t1.5\t2.5\n");
  const CheckInLoad load = LoadCheckIns(in);
  EXPECT_EQ(load.records.size(), 2u);
  EXPECT_EQ(load.dropped, 5);
  EXPECT_EQ(load.records[1].user, 7);
}

TEST(LoadCheckInsTest, WriteThenLoadRoundTrips) {
  std::vector<CheckIn> records = {At(1, kMonday + hours(9), 39.5, -105.25),
                                  At(2, kMonday + days(3), -12.125, 44.0)};
  std::ostringstream out;
  WriteCheckIns(records, out);
  std::istringstream in(out.str());
  const CheckInLoad load = LoadCheckIns(in);
  ASSERT_EQ(load.records.size(), 2u);
  for (size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(load.records[i].user, records[i].user);
    EXPECT_EQ(load.records[i].time, records[i].time);
    EXPECT_DOUBLE_EQ(load.records[i].lat, records[i].lat);
    EXPECT_DOUBLE_EQ(load.records[i].lon, records[i].lon);
  }
}

TEST(TimestampTest, AcceptsSpaceSeparatorAndMissingZone) {
  EXPECT_EQ(ParseTimestamp("2010-10-04 08:00:00"), kMonday + hours(8));
  EXPECT_FALSE(ParseTimestamp("2010-10-04T25:00:00Z").has_value());
}

TEST(DatasetTest, AssembleCountsUnknownUsers) {
  int64_t dropped = 0;
  const std::vector<CheckIn> records = {At(1, kMonday), At(8, kMonday),
                                        At(2, kMonday)};
  const Dataset ds = Dataset::Assemble(Edges("1 2\n"), records, &dropped);
  EXPECT_EQ(dropped, 1);
  EXPECT_EQ(ds.num_checkins(), 2);
}

TEST(FilterActiveRegionTest, RemovesUserWithoutInRegionCheckIns) {
  const Grid grid = Grid::WithCellDegrees(0, 1, 0, 1, 1, 1);
  const std::vector<CheckIn> records = {At(1, kMonday), At(2, kMonday),
                                        At(3, kMonday, 5.0, 5.0)};
  const Dataset ds =
      Dataset::Assemble(Edges("1 2\n2 3\n1 3\n"), records, nullptr);
  const Dataset out = FilterActiveRegion(ds, grid, 1);
  EXPECT_EQ(out.graph.num_nodes(), 2);
  EXPECT_EQ(out.graph.num_edges(), 1);
  EXPECT_FALSE(out.graph.NodeOf(3).has_value());
}

TEST(FilterActiveRegionTest, IdentityWhenEveryoneIsActive) {
  const Grid grid = Grid::WithCellDegrees(0, 1, 0, 1, 1, 1);
  const std::vector<CheckIn> records = {At(1, kMonday), At(2, kMonday),
                                        At(2, kMonday, 3.0, 3.0)};
  const Dataset ds = Dataset::Assemble(Edges("1 2\n"), records, nullptr);
  const Dataset out = FilterActiveRegion(ds, grid, 1);
  EXPECT_EQ(out.graph.EdgeList(), ds.graph.EdgeList());
  EXPECT_EQ(out.num_checkins(), 2);  // the out-of-region row is gone
}

TEST(FilterActiveRegionTest, MinimumCheckInCount) {
  const Grid grid = Grid::WithCellDegrees(0, 1, 0, 1, 1, 1);
  std::vector<CheckIn> records;
  for (int i = 0; i < 5; ++i) records.push_back(At(1, kMonday + hours(i)));
  for (int i = 0; i < 2; ++i) records.push_back(At(2, kMonday + hours(i)));
  records.push_back(At(3, kMonday, -4.0, 0.5));
  const Dataset ds = Dataset::Assemble(Edges("1 2\n2 3\n"), records, nullptr);
  const Dataset out = FilterActiveRegion(ds, grid, 3);
  ASSERT_EQ(out.graph.num_nodes(), 1);
  EXPECT_EQ(out.graph.user_id(0), 1);
  EXPECT_EQ(out.checkins[0].size(), 5u);
}

TEST(FilterActiveRegionTest, MaskedCellsDoNotCount) {
  const Grid grid = Grid::WithCellDegrees(0, 1, 0, 2, 1, 1, {1});
  const std::vector<CheckIn> records = {At(1, kMonday, 0.5, 1.5),
                                        At(2, kMonday, 0.5, 0.5)};
  const Dataset ds = Dataset::Assemble(Edges("1 2\n"), records, nullptr);
  const Dataset out = FilterActiveRegion(ds, grid, 1);
  ASSERT_EQ(out.graph.num_nodes(), 1);
  EXPECT_EQ(out.graph.user_id(0), 2);
}

TEST(WeekCalendarTest, WeeksStartOnMonday) {
  const WeekCalendar cal = WeekCalendar::Containing(kMonday + days(3) + hours(5));
  EXPECT_EQ(cal.anchor, kMonday);
  EXPECT_EQ(cal.WeekOf(kMonday + days(6) + hours(23)), 0);
  EXPECT_EQ(cal.WeekOf(kMonday + days(7)), 1);
  EXPECT_EQ(cal.WeekOf(kMonday - hours(1)), -1);
  EXPECT_EQ(cal.WeekStart(2), kMonday + days(14));
}

Dataset WeeksDataset(int weeks) {
  std::vector<CheckIn> records;
  for (int w = 0; w < weeks; ++w) {
    for (int d = 0; d < 7; ++d) {
      records.push_back(At(1, kMonday + days(7 * w + d) + hours(9)));
      records.push_back(At(2, kMonday + days(7 * w + d) + hours(20)));
    }
  }
  return Dataset::Assemble(Edges("1 2\n"), records, nullptr);
}

TEST(SplitTrainTestTest, TwoWeeksPartitionInWindowCheckIns) {
  const Dataset ds = WeeksDataset(2);
  const TrainTestSplit split = SplitTrainTest(ds, CycleSpec{}, 5);
  EXPECT_EQ(split.train_weeks.size(), 1u);
  const NodeId user1 = *ds.graph.NodeOf(1);
  const NodeId user2 = *ds.graph.NodeOf(2);
  EXPECT_EQ(split.test.checkins[user1].size(), 7u);
  EXPECT_EQ(split.train.checkins[user1].size(), 7u);
  // 20:00 lies outside the sensing window.
  EXPECT_TRUE(split.test.checkins[user2].empty());
  EXPECT_TRUE(split.train.checkins[user2].empty());
  for (const CheckIn& c : split.test.checkins[user1]) {
    EXPECT_EQ(split.calendar.WeekOf(c.time), split.test_week);
  }
  EXPECT_EQ(split.test_epoch(), kMonday + days(7 * split.test_week));
  EXPECT_EQ(split.train.graph.EdgeList(), ds.graph.EdgeList());
}

TEST(SplitTrainTestTest, SameSeedSameSplit) {
  const Dataset ds = WeeksDataset(6);
  EXPECT_EQ(SplitTrainTest(ds, CycleSpec{}, 9).test_week,
            SplitTrainTest(ds, CycleSpec{}, 9).test_week);
}

TEST(SplitTrainTestTest, TestWeekIsUniform) {
  const Dataset ds = WeeksDataset(10);
  std::vector<int> hits(10, 0);
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    ++hits[SplitTrainTest(ds, CycleSpec{}, seed).test_week];
  }
  double chi2 = 0.0;
  for (int h : hits) {
    EXPECT_NEAR(h / 1000.0, 0.1, 0.03);
    chi2 += (h - 100.0) * (h - 100.0) / 100.0;
  }
  EXPECT_LT(chi2, 27.88);  // chi-square, 9 dof, p = 0.001
}

TEST(SplitTrainTestTest, SingleWeekIsRejected) {
  EXPECT_THROW(SplitTrainTest(WeeksDataset(1), CycleSpec{}, 1),
               std::invalid_argument);
}

TEST(SplitTrainTestTest, UnionIsInWindowInputAndHalvesAreDisjoint) {
  std::mt19937_64 rng(21);
  std::vector<CheckIn> records;
  for (int i = 0; i < 400; ++i) {
    records.push_back(At(1 + rng() % 4,
                         kMonday + std::chrono::seconds(rng() % (5 * 7 * 86400))));
  }
  const Dataset ds = Dataset::Assemble(Edges("1 2\n3 4\n"), records, nullptr);
  const CycleSpec cycles;
  const TrainTestSplit split = SplitTrainTest(ds, cycles, 4);
  for (NodeId v = 0; v < ds.graph.num_nodes(); ++v) {
    std::multiset<int64_t> expected;
    for (const CheckIn& c : ds.checkins[v]) {
      const int w = split.calendar.WeekOf(c.time);
      if (LocateCycle(c.time, cycles, split.calendar.WeekStart(w))) {
        expected.insert(c.time.time_since_epoch().count());
      }
    }
    std::multiset<int64_t> got;
    for (const CheckIn& c : split.train.checkins[v]) {
      EXPECT_NE(split.calendar.WeekOf(c.time), split.test_week);
      got.insert(c.time.time_since_epoch().count());
    }
    for (const CheckIn& c : split.test.checkins[v]) {
      EXPECT_EQ(split.calendar.WeekOf(c.time), split.test_week);
      got.insert(c.time.time_since_epoch().count());
    }
    EXPECT_EQ(got, expected);
  }
}

}  // namespace
}  // namespace mcsrecruit
