// Copyright 2026 The IRIS Simulator Authors
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

#ifndef IRIS_LAYOUT_HPP
#define IRIS_LAYOUT_HPP

#include <iosfwd>

#include "iris/types.hpp"

namespace iris {

/*
 * Center-surround receptive-field geometry. The sensor is tiled into
 * rectangular center regions (edge regions truncated); each receptive
 * field additionally samples a sparse lattice of pixels interleaved in
 * its neighboring regions as its surround.
 *
 * For a receptive field R and a neighbor region N, the surround pixels
 * contributed by N are those whose global coordinates satisfy
 *   x % surround_stride == phase_x  and  y % surround_stride == phase_y
 * with (phase_x, phase_y) derived from splitmix64 of (R.rf_id, N.rf_id),
 * so the lattice is deterministic and reproducible from the config alone.
 * Surround pixels stay owned by their home center and are shared fan-out:
 * one pixel can serve as surround for up to 8 receptive fields.
 */

struct LayoutConfig {
  int sensor_width = 64;
  int sensor_height = 64;
  int center_w = 8;
  int center_h = 8;
  int surround_stride = 2;
  int neighborhood = 1;  // 8-connected ring depth

  void validate() const;
};

using PixelIndex = std::uint32_t;  // row-major linear index

struct ReceptiveField {
  std::uint32_t rf_id = 0;
  // Half-open center rectangle [cx0,cx1) x [cy0,cy1).
  int cx0 = 0, cy0 = 0, cx1 = 0, cy1 = 0;
  std::vector<PixelIndex> surround;  // sorted row-major

  int center_count() const { return (cx1 - cx0) * (cy1 - cy0); }
  int surround_count() const { return static_cast<int>(surround.size()); }
};

enum class RfRole : std::uint8_t { Center = 0, Surround = 1 };

struct RfLayout {
  LayoutConfig cfg;
  int grid_w = 0;  // center regions per row
  int grid_h = 0;
  std::vector<ReceptiveField> rfs;
  // Reverse index: pixel -> owning center rf, and rfs using it as surround.
  std::vector<std::int32_t> owner;
  std::vector<std::vector<std::uint32_t>> surround_users;

  std::size_t rf_count() const { return rfs.size(); }
  bool is_interior(std::uint32_t rf_id) const;
};

RfLayout build_layout(const LayoutConfig& cfg);

/// Stored pixel set of one receptive field, sorted row-major.
std::vector<PixelIndex> pixels_of(const RfLayout& layout, std::uint32_t rf_id, RfRole role);

/// Returns one message per violated layout invariant; empty means valid.
std::vector<std::string> validate_layout(const RfLayout& layout);

// Text dump, one `rf_id, cx0, cy0, cx1, cy1, n_center, n_surround` line
// per rf followed by its surround coordinates as `x y` pairs on one line.
void dump_layout(const RfLayout& layout, std::ostream& out);

/// Phase hash shared by build_layout; exposed so tests can enumerate the
/// expected surround lattice independently.
std::uint64_t splitmix64(std::uint64_t v);

}  // namespace iris

#endif  // IRIS_LAYOUT_HPP
