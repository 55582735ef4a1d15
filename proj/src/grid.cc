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

#include "mcsrecruit/grid.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcsrecruit {
namespace {

// Cell count along an axis; tolerates round-off when the span is an exact
// multiple of the cell size.
int CellsAlong(double span, double cell) {
  return std::max(1, static_cast<int>(std::ceil(span / cell - 1e-9)));
}

}  // namespace

void CycleSpec::Validate() const {
  if (day_start_hour < 0 || day_end_hour > 24 ||
      day_start_hour >= day_end_hour) {
    throw std::invalid_argument("cycle window must satisfy 0 <= start < end <= 24");
  }
  if (cycle_hours <= 0 || (day_end_hour - day_start_hour) % cycle_hours != 0) {
    throw std::invalid_argument(
        "daily window length must be divisible by cycle_hours");
  }
  if (num_days < 1) throw std::invalid_argument("num_days must be >= 1");
}

Grid::Grid(GridSpec spec)
    : Grid(spec, spec.cell_size_km / kKmPerDegree,
           spec.cell_size_km /
               (kKmPerDegree *
                std::cos((spec.lat_min + spec.lat_max) / 2.0 *
                         std::numbers::pi / 180.0))) {}

Grid Grid::WithCellDegrees(double lat_min, double lat_max, double lon_min,
                           double lon_max, double cell_lat_deg,
                           double cell_lon_deg, std::vector<int> mask) {
  GridSpec spec{lat_min, lat_max, lon_min, lon_max,
                cell_lat_deg * kKmPerDegree, std::move(mask)};
  return Grid(std::move(spec), cell_lat_deg, cell_lon_deg);
}

Grid::Grid(GridSpec spec, double cell_lat_deg, double cell_lon_deg)
    : spec_(std::move(spec)),
      cell_lat_deg_(cell_lat_deg),
      cell_lon_deg_(cell_lon_deg) {
  if (!(spec_.lat_min < spec_.lat_max) || !(spec_.lon_min < spec_.lon_max)) {
    throw std::invalid_argument("grid bounding box is empty");
  }
  if (!(spec_.cell_size_km > 0) || !(cell_lat_deg_ > 0) ||
      !(cell_lon_deg_ > 0) || !std::isfinite(cell_lon_deg_)) {
    throw std::invalid_argument("grid cell size must be positive");
  }
  rows_ = CellsAlong(spec_.lat_max - spec_.lat_min, cell_lat_deg_);
  cols_ = CellsAlong(spec_.lon_max - spec_.lon_min, cell_lon_deg_);
  const int gross = rows_ * cols_;
  std::vector<bool> is_masked(gross, false);
  for (int s : spec_.mask) {
    if (s < 0 || s >= gross) {
      throw std::invalid_argument("masked subarea " + std::to_string(s) +
                                  " outside grid of " + std::to_string(gross));
    }
    is_masked[s] = true;
  }
  gross_to_active_.assign(gross, -1);
  for (int s = 0; s < gross; ++s) {
    if (is_masked[s]) continue;
    gross_to_active_[s] = static_cast<int>(active_to_gross_.size());
    active_to_gross_.push_back(s);
  }
}

std::optional<int> Grid::LocateSubarea(double lat, double lon) const {
  if (!(lat >= spec_.lat_min && lat < spec_.lat_max && lon >= spec_.lon_min &&
        lon < spec_.lon_max)) {
    return std::nullopt;
  }
  const int row = std::min(
      rows_ - 1, static_cast<int>((lat - spec_.lat_min) / cell_lat_deg_));
  const int col = std::min(
      cols_ - 1, static_cast<int>((lon - spec_.lon_min) / cell_lon_deg_));
  const int subarea = row * cols_ + col;
  if (masked(subarea)) return std::nullopt;
  return subarea;
}

CellBounds Grid::Bounds(int subarea) const {
  const int row = subarea / cols_;
  const int col = subarea % cols_;
  const double lat_lo = spec_.lat_min + row * cell_lat_deg_;
  const double lon_lo = spec_.lon_min + col * cell_lon_deg_;
  return {lat_lo, std::min(spec_.lat_max, lat_lo + cell_lat_deg_), lon_lo,
          std::min(spec_.lon_max, lon_lo + cell_lon_deg_)};
}

std::optional<int> LocateCycle(TimePoint t, const CycleSpec& cycles,
                               TimePoint epoch) {
  constexpr int64_t kDay = 86400;
  const int64_t dt = (t - epoch).count();
  if (dt < 0) return std::nullopt;
  const int64_t day = dt / kDay;
  if (day >= cycles.num_days) return std::nullopt;
  const int64_t second_of_day = dt - day * kDay;
  const int64_t start = int64_t{cycles.day_start_hour} * 3600;
  const int64_t end = int64_t{cycles.day_end_hour} * 3600;
  if (second_of_day < start || second_of_day >= end) return std::nullopt;
  const int64_t slot = (second_of_day - start) / (int64_t{cycles.cycle_hours} * 3600);
  return static_cast<int>(day * cycles.cycles_per_day() + slot);
}

CellUniverse MakeCellUniverse(const Grid& grid, const CycleSpec& cycles) {
  const int m = grid.num_active();
  const int n = cycles.num_cycles();
  return {m, n, int64_t{m} * n};
}

}  // namespace mcsrecruit
