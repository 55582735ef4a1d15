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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <utility>

namespace mcsrecruit {
namespace {

constexpr int64_t kSecondsPerWeek = 7 * 86400;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool ParseNumber(std::string_view s, T& out) {
  s = Trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Dataset Dataset::Assemble(SocialGraph graph, std::span<const CheckIn> records,
                          int64_t* dropped) {
  Dataset ds;
  ds.checkins.resize(graph.num_nodes());
  int64_t missing = 0;
  for (const CheckIn& c : records) {
    const auto node = graph.NodeOf(c.user);
    if (!node) {
      ++missing;
      continue;
    }
    ds.checkins[*node].push_back(c);
  }
  ds.graph = std::move(graph);
  if (dropped != nullptr) *dropped = missing;
  return ds;
}

int64_t Dataset::num_checkins() const {
  int64_t total = 0;
  for (const auto& list : checkins) total += static_cast<int64_t>(list.size());
  return total;
}

std::vector<CheckIn> Dataset::AllCheckIns() const {
  std::vector<CheckIn> all;
  all.reserve(num_checkins());
  for (const auto& list : checkins) all.insert(all.end(), list.begin(), list.end());
  return all;
}

SocialGraph LoadEdges(std::istream& in) {
  std::vector<std::pair<UserId, UserId>> edges;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto sep = text.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw ParseError(line_no, "expected two node ids");
    }
    UserId a = 0;
    UserId b = 0;
    if (!ParseNumber(text.substr(0, sep), a) ||
        !ParseNumber(text.substr(sep + 1), b)) {
      throw ParseError(line_no, "malformed edge '" + std::string(text) + "'");
    }
    edges.emplace_back(a, b);
  }
  if (in.bad()) throw std::runtime_error("edge stream read failure");
  return SocialGraph::FromEdges({}, edges);
}

void WriteEdges(const SocialGraph& graph, std::ostream& out) {
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    const UserId u = graph.user_id(v);
    if (graph.degree(v) == 0) {
      out << u << '\t' << u << '\n';
      continue;
    }
    for (NodeId w : graph.neighbors(v)) {
      if (w > v) out << u << '\t' << graph.user_id(w) << '\n';
    }
  }
}

std::optional<TimePoint> ParseTimestamp(std::string_view text) {
  text = Trim(text);
  if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);
  if (text.size() != 19 || text[4] != '-' || text[7] != '-' ||
      (text[10] != 'T' && text[10] != ' ') || text[13] != ':' ||
      text[16] != ':') {
    return std::nullopt;
  }
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (!ParseNumber(text.substr(0, 4), y) || !ParseNumber(text.substr(5, 2), mo) ||
      !ParseNumber(text.substr(8, 2), d) || !ParseNumber(text.substr(11, 2), h) ||
      !ParseNumber(text.substr(14, 2), mi) ||
      !ParseNumber(text.substr(17, 2), s)) {
    return std::nullopt;
  }
  using namespace std::chrono;
  const year_month_day date{year{y}, month{static_cast<unsigned>(mo)},
                            day{static_cast<unsigned>(d)}};
  if (!date.ok() || h > 23 || mi > 59 || s > 60 || h < 0 || mi < 0 || s < 0) {
    return std::nullopt;
  }
  return sys_days{date} + hours{h} + minutes{mi} + seconds{s};
}

std::string FormatTimestamp(TimePoint t) {
  using namespace std::chrono;
  const auto day_point = floor<days>(t);
  const year_month_day date{day_point};
  const hh_mm_ss hms{t - day_point};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

CheckInLoad LoadCheckIns(std::istream& in) {
  CheckInLoad result;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view text = Trim(line);
    if (text.empty()) continue;
    const auto fields = SplitTabs(text);
    CheckIn c;
    const auto time = fields.size() >= 4 ? ParseTimestamp(fields[1])
                                         : std::optional<TimePoint>{};
    if (fields.size() < 4 || !ParseNumber(fields[0], c.user) || !time ||
        !ParseNumber(fields[2], c.lat) || !ParseNumber(fields[3], c.lon) ||
        !(c.lat >= -90.0 && c.lat <= 90.0) ||
        !(c.lon >= -180.0 && c.lon <= 180.0)) {
      ++result.dropped;
      continue;
    }
    c.time = *time;
    if (fields.size() >= 5) c.location = std::string(Trim(fields[4]));
    result.records.push_back(std::move(c));
  }
  if (in.bad()) throw std::runtime_error("check-in stream read failure");
  return result;
}

void WriteCheckIns(std::span<const CheckIn> records, std::ostream& out) {
  char coord[64];
  for (const CheckIn& c : records) {
    std::snprintf(coord, sizeof(coord), "%.6f\t%.6f", c.lat, c.lon);
    out << c.user << '\t' << FormatTimestamp(c.time) << '\t' << coord << '\t'
        << c.location << '\n';
  }
}

Dataset FilterActiveRegion(const Dataset& ds, const Grid& grid,
                           int min_checkins) {
  if (min_checkins < 1) throw std::invalid_argument("min_checkins must be >= 1");
  std::vector<NodeId> keep;
  std::vector<std::vector<CheckIn>> kept_checkins;
  for (NodeId v = 0; v < ds.graph.num_nodes(); ++v) {
    std::vector<CheckIn> in_region;
    for (const CheckIn& c : ds.checkins[v]) {
      if (grid.LocateSubarea(c.lat, c.lon)) in_region.push_back(c);
    }
    if (static_cast<int64_t>(in_region.size()) >= min_checkins) {
      keep.push_back(v);
      kept_checkins.push_back(std::move(in_region));
    }
  }
  Dataset out;
  out.graph = ds.graph.InducedSubgraph(keep);
  // `keep` is ascending, so positions line up with the new node numbering.
  out.checkins = std::move(kept_checkins);
  return out;
}

WeekCalendar WeekCalendar::Containing(TimePoint t) {
  using namespace std::chrono;
  const sys_days day = floor<days>(t);
  const unsigned iso = weekday{day}.iso_encoding();  // Monday = 1
  return {sys_days{day - days{iso - 1}}};
}

int WeekCalendar::WeekOf(TimePoint t) const {
  return static_cast<int>(FloorDiv((t - anchor).count(), kSecondsPerWeek));
}

TimePoint WeekCalendar::WeekStart(int week) const {
  return anchor + std::chrono::seconds{int64_t{week} * kSecondsPerWeek};
}

TrainTestSplit SplitTrainTest(const Dataset& ds, const CycleSpec& cycles,
                              uint64_t seed) {
  cycles.Validate();
  std::optional<TimePoint> first;
  std::optional<TimePoint> last;
  for (const auto& list : ds.checkins) {
    for (const CheckIn& c : list) {
      if (!first || c.time < *first) first = c.time;
      if (!last || c.time > *last) last = c.time;
    }
  }
  if (!first) throw std::invalid_argument("dataset has no check-ins");
  TrainTestSplit split;
  split.calendar = WeekCalendar::Containing(*first);
  const int num_weeks = split.calendar.WeekOf(*last) + 1;
  if (num_weeks < 2) {
    throw std::invalid_argument("dataset spans fewer than two calendar weeks");
  }
  std::mt19937_64 rng(seed);
  split.test_week = std::uniform_int_distribution<int>(0, num_weeks - 1)(rng);
  for (int w = 0; w < num_weeks; ++w) {
    if (w != split.test_week) split.train_weeks.push_back(w);
  }

  const int n = ds.graph.num_nodes();
  split.train.graph = ds.graph;
  split.test.graph = ds.graph;
  split.train.checkins.resize(n);
  split.test.checkins.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    for (const CheckIn& c : ds.checkins[v]) {
      const int week = split.calendar.WeekOf(c.time);
      if (!LocateCycle(c.time, cycles, split.calendar.WeekStart(week))) continue;
      (week == split.test_week ? split.test : split.train).checkins[v].push_back(c);
    }
  }
  return split;
}

}  // namespace mcsrecruit
