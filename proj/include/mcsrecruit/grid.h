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

// Spatiotemporal discretization: m subareas x n sensing cycles.

#ifndef MCSRECRUIT_GRID_H_
#define MCSRECRUIT_GRID_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "mcsrecruit/types.h"

namespace mcsrecruit {

// Mean Earth radius times pi / 180.
inline constexpr double kKmPerDegree = 111.19492664455873;

struct GridSpec {
  double lat_min = 0.0;
  double lat_max = 0.0;
  double lon_min = 0.0;
  double lon_max = 0.0;
  double cell_size_km = 10.0;
  // Excluded gross subarea indices (row * cols + col), e.g. sea cells.
  std::vector<int> mask;
};

struct CycleSpec {
  int day_start_hour = 8;
  int day_end_hour = 18;
  int cycle_hours = 2;
  int num_days = 7;

  int cycles_per_day() const {
    return (day_end_hour - day_start_hour) / cycle_hours;
  }
  int num_cycles() const { return num_days * cycles_per_day(); }

  // Throws std::invalid_argument.
  void Validate() const;
};

struct CellIndex {
  int subarea = 0;
  int cycle = 0;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

struct CellUniverse {
  int subareas = 0;  // unmasked subareas (m)
  int cycles = 0;    // n
  int64_t total_cells = 0;
};

struct CellBounds {
  double lat_lo, lat_hi, lon_lo, lon_hi;
};

// Rectangular lat/lon grid. Cell edges are equirectangular at the box's
// mid-latitude; cells are half-open [lo, hi) in both axes. Subareas are
// numbered row-major from the south-west corner. Immutable.
class Grid {
 public:
  // Throws std::invalid_argument on an invalid spec.
  explicit Grid(GridSpec spec);

  // Grid whose cells are given directly in degrees.
  static Grid WithCellDegrees(double lat_min, double lat_max, double lon_min,
                              double lon_max, double cell_lat_deg,
                              double cell_lon_deg, std::vector<int> mask = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int gross_subareas() const { return rows_ * cols_; }
  int num_active() const { return static_cast<int>(active_to_gross_.size()); }
  bool masked(int subarea) const { return gross_to_active_[subarea] < 0; }
  const GridSpec& spec() const { return spec_; }

  // Gross subarea index of the cell containing the point, or nullopt when the
  // point is outside the box or in a masked cell.
  std::optional<int> LocateSubarea(double lat, double lon) const;

  // Dense rank of an unmasked subarea in [0, num_active()), -1 if masked.
  int ActiveRank(int subarea) const { return gross_to_active_[subarea]; }
  int SubareaOfRank(int rank) const { return active_to_gross_[rank]; }

  CellBounds Bounds(int subarea) const;

 private:
  Grid(GridSpec spec, double cell_lat_deg, double cell_lon_deg);

  GridSpec spec_;
  double cell_lat_deg_ = 0.0;
  double cell_lon_deg_ = 0.0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> gross_to_active_;
  std::vector<int> active_to_gross_;
};

// Cycle containing `t`, where `epoch` is day 0 hour 0 of the window. Returns
// nullopt outside [day_start_hour, day_end_hour) or outside num_days.
std::optional<int> LocateCycle(TimePoint t, const CycleSpec& cycles,
                               TimePoint epoch);

CellUniverse MakeCellUniverse(const Grid& grid, const CycleSpec& cycles);

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_GRID_H_
