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

#include "mcsrecruit/mobility.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mcsrecruit {

double CheckinCountPmf(double lambda, int h) {
  if (h < 0 || lambda < 0) throw std::domain_error("pmf needs lambda, h >= 0");
  if (h == 0) return std::exp(-lambda);
  if (lambda == 0.0) return 0.0;
  return std::exp(h * std::log(lambda) - lambda - std::lgamma(h + 1.0));
}

double CoverageProb(double lambda) { return 1.0 - CheckinCountPmf(lambda, 0); }

double TrajectorySimilarity(std::span<const double> a,
                            std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("mobility vectors differ in length");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

namespace {

double SparseDot(std::span<const CellValue> a, std::span<const CellValue> b) {
  double dot = 0.0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].cell < b[j].cell) {
      ++i;
    } else if (b[j].cell < a[i].cell) {
      ++j;
    } else {
      dot += a[i++].value * b[j++].value;
    }
  }
  return dot;
}

double SparseNorm(std::span<const CellValue> a) {
  double sq = 0.0;
  for (const CellValue& e : a) sq += e.value * e.value;
  return std::sqrt(sq);
}

}  // namespace

double TrajectorySimilarity(std::span<const CellValue> a,
                            std::span<const CellValue> b) {
  const double na = SparseNorm(a);
  const double nb = SparseNorm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(SparseDot(a, b) / (na * nb), 0.0, 1.0);
}

double AvgSimilarityToSet(std::span<const double> u,
                          std::span<const MobilityVector> set) {
  if (set.empty()) return 0.0;
  double sum = 0.0;
  for (const MobilityVector& x : set) sum += TrajectorySimilarity(u, x);
  return sum / static_cast<double>(set.size());
}

MobilityProfile::MobilityProfile(int num_users, CellUniverse universe)
    : universe_(universe),
      rates_(num_users),
      alpha_(num_users),
      norms_(num_users, 0.0),
      visited_(num_users, 0) {}

void MobilityProfile::SetRates(NodeId user, std::vector<CellValue> rates) {
  std::erase_if(rates, [](const CellValue& e) { return e.value == 0.0; });
  for (size_t k = 0; k < rates.size(); ++k) {
    if (rates[k].value < 0 || rates[k].cell < 0 ||
        rates[k].cell >= universe_.total_cells ||
        (k > 0 && rates[k - 1].cell >= rates[k].cell)) {
      throw std::invalid_argument("rates must be non-negative, in range, sorted");
    }
  }
  std::vector<CellValue> alpha;
  alpha.reserve(rates.size());
  for (const CellValue& e : rates) alpha.push_back({e.cell, CoverageProb(e.value)});
  norms_[user] = SparseNorm(rates);
  rates_[user] = std::move(rates);
  alpha_[user] = std::move(alpha);
}

double MobilityProfile::Rate(NodeId user, int subarea_rank, int cycle) const {
  const int32_t cell = subarea_rank * universe_.cycles + cycle;
  const auto& r = rates_[user];
  const auto it = std::lower_bound(
      r.begin(), r.end(), cell,
      [](const CellValue& e, int32_t c) { return e.cell < c; });
  return (it != r.end() && it->cell == cell) ? it->value : 0.0;
}

MobilityVector MobilityProfile::DenseVector(NodeId user) const {
  MobilityVector v(universe_.total_cells, 0.0);
  for (const CellValue& e : rates_[user]) v[e.cell] = e.value;
  return v;
}

double MobilityProfile::Similarity(NodeId a, NodeId b) const {
  if (norms_[a] == 0.0 || norms_[b] == 0.0) return 0.0;
  return std::clamp(SparseDot(rates_[a], rates_[b]) / (norms_[a] * norms_[b]),
                    0.0, 1.0);
}

void MobilityProfile::WriteCsv(std::ostream& out) const {
  out << "# mcsrecruit-profile v1 m=" << universe_.subareas
      << " n=" << universe_.cycles << " users=" << num_users() << '\n';
  out << "user,subarea,cycle,lambda\n";
  std::ostringstream row;
  row.precision(17);
  for (NodeId u = 0; u < num_users(); ++u) {
    row << u << ",0,-1," << visited_[u] << '\n';
    for (const CellValue& e : rates_[u]) {
      row << u << ',' << e.cell / universe_.cycles << ','
          << e.cell % universe_.cycles << ',' << e.value << '\n';
    }
  }
  out << row.str();
}

MobilityProfile MobilityProfile::ReadCsv(std::istream& in) {
  std::string line;
  int64_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(line_no, "empty profile");
  int m = 0, n = 0, users = 0;
  if (std::sscanf(line.c_str(), "# mcsrecruit-profile v1 m=%d n=%d users=%d", &m,
                  &n, &users) != 3 ||
      m < 0 || n < 0 || users < 0) {
    throw ParseError(line_no, "missing or unsupported profile version line");
  }
  ++line_no;
  if (!std::getline(in, line) || line.rfind("user,subarea,cycle,lambda", 0) != 0) {
    throw ParseError(line_no, "missing column header");
  }
  MobilityProfile profile(users, {m, n, int64_t{m} * n});
  std::vector<std::vector<CellValue>> rates(users);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    long long u = 0;
    int subarea = 0, cycle = 0;
    double value = 0;
    if (std::sscanf(line.c_str(), "%lld,%d,%d,%lf", &u, &subarea, &cycle,
                    &value) != 4 ||
        u < 0 || u >= users || subarea < 0 || subarea >= m || cycle < -1 ||
        cycle >= n || value < 0) {
      throw ParseError(line_no, "malformed profile row");
    }
    if (cycle == -1) {
      profile.visited_[u] = static_cast<int>(value);
    } else {
      rates[u].push_back({subarea * n + cycle, value});
    }
  }
  for (NodeId u = 0; u < users; ++u) {
    std::sort(rates[u].begin(), rates[u].end(),
              [](const CellValue& a, const CellValue& b) { return a.cell < b.cell; });
    profile.SetRates(u, std::move(rates[u]));
  }
  return profile;
}

MobilityProfile EstimateLambda(const Dataset& train, const Grid& grid,
                               const CycleSpec& cycles,
                               const WeekCalendar& calendar,
                               std::span<const int> weeks) {
  cycles.Validate();
  const CellUniverse universe = MakeCellUniverse(grid, cycles);
  const int num_users = train.graph.num_nodes();
  MobilityProfile profile(num_users, universe);
  std::vector<int> sorted_weeks(weeks.begin(), weeks.end());
  std::sort(sorted_weeks.begin(), sorted_weeks.end());
  sorted_weeks.erase(std::unique(sorted_weeks.begin(), sorted_weeks.end()),
                     sorted_weeks.end());
  const double occurrences = static_cast<double>(sorted_weeks.size());
  if (sorted_weeks.empty()) profile.set_empty_slot_warnings(universe.cycles);

#pragma omp parallel for schedule(dynamic, 64)
  for (NodeId u = 0; u < num_users; ++u) {
    std::vector<int32_t> cells;
    std::vector<int> subareas;
    for (const CheckIn& c : train.checkins[u]) {
      const int week = calendar.WeekOf(c.time);
      if (!std::binary_search(sorted_weeks.begin(), sorted_weeks.end(), week)) {
        continue;
      }
      const auto subarea = grid.LocateSubarea(c.lat, c.lon);
      if (!subarea) continue;
      subareas.push_back(*subarea);
      const auto cycle = LocateCycle(c.time, cycles, calendar.WeekStart(week));
      if (!cycle) continue;
      cells.push_back(grid.ActiveRank(*subarea) * universe.cycles + *cycle);
    }
    std::sort(subareas.begin(), subareas.end());
    profile.set_visited_subareas(
        u, static_cast<int>(std::unique(subareas.begin(), subareas.end()) -
                            subareas.begin()));
    if (occurrences == 0) continue;
    std::sort(cells.begin(), cells.end());
    std::vector<CellValue> rates;
    for (size_t i = 0; i < cells.size();) {
      size_t j = i;
      while (j < cells.size() && cells[j] == cells[i]) ++j;
      rates.push_back({cells[i], static_cast<double>(j - i) / occurrences});
      i = j;
    }
    profile.SetRates(u, std::move(rates));
  }
  return profile;
}

}  // namespace mcsrecruit
