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

#include "iris/layout.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace iris {

void LayoutConfig::validate() const {
  if (sensor_width < 1 || sensor_height < 1) {
    throw ConfigError("sensor.width/sensor.height must be >= 1");
  }
  if (sensor_width > 65535 || sensor_height > 65535) {
    throw ConfigError("sensor dimensions must fit 16-bit event coordinates");
  }
  if (center_w < 1 || center_w > sensor_width) {
    throw ConfigError("layout.center_w must be in [1, sensor.width]");
  }
  if (center_h < 1 || center_h > sensor_height) {
    throw ConfigError("layout.center_h must be in [1, sensor.height]");
  }
  if (surround_stride < 2) {
    throw ConfigError("layout.surround_stride must be >= 2");
  }
  if (neighborhood < 1) {
    throw ConfigError("layout.neighborhood must be >= 1");
  }
}

std::uint64_t splitmix64(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

bool RfLayout::is_interior(std::uint32_t rf_id) const {
  const int rx = static_cast<int>(rf_id) % grid_w;
  const int ry = static_cast<int>(rf_id) / grid_w;
  const int d = cfg.neighborhood;
  return rx >= d && ry >= d && rx < grid_w - d && ry < grid_h - d;
}

RfLayout build_layout(const LayoutConfig& cfg) {
  cfg.validate();

  RfLayout layout;
  layout.cfg = cfg;
  layout.grid_w = (cfg.sensor_width + cfg.center_w - 1) / cfg.center_w;
  layout.grid_h = (cfg.sensor_height + cfg.center_h - 1) / cfg.center_h;

  const int w = cfg.sensor_width;
  const int h = cfg.sensor_height;
  const std::size_t pixels = static_cast<std::size_t>(w) * h;
  layout.owner.assign(pixels, -1);
  layout.surround_users.assign(pixels, {});

  layout.rfs.resize(static_cast<std::size_t>(layout.grid_w) * layout.grid_h);
  for (int ry = 0; ry < layout.grid_h; ++ry) {
    for (int rx = 0; rx < layout.grid_w; ++rx) {
      ReceptiveField& rf = layout.rfs[static_cast<std::size_t>(ry) * layout.grid_w + rx];
      rf.rf_id = static_cast<std::uint32_t>(ry * layout.grid_w + rx);
      rf.cx0 = rx * cfg.center_w;
      rf.cy0 = ry * cfg.center_h;
      rf.cx1 = std::min(rf.cx0 + cfg.center_w, w);
      rf.cy1 = std::min(rf.cy0 + cfg.center_h, h);
      for (int y = rf.cy0; y < rf.cy1; ++y) {
        for (int x = rf.cx0; x < rf.cx1; ++x) {
          layout.owner[static_cast<std::size_t>(y) * w + x] =
              static_cast<std::int32_t>(rf.rf_id);
        }
      }
    }
  }

  const int stride = cfg.surround_stride;
  const int depth = cfg.neighborhood;
  for (ReceptiveField& rf : layout.rfs) {
    const int rx = static_cast<int>(rf.rf_id) % layout.grid_w;
    const int ry = static_cast<int>(rf.rf_id) / layout.grid_w;
    for (int ny = ry - depth; ny <= ry + depth; ++ny) {
      for (int nx = rx - depth; nx <= rx + depth; ++nx) {
        if (nx < 0 || ny < 0 || nx >= layout.grid_w || ny >= layout.grid_h) continue;
        if (nx == rx && ny == ry) continue;
        const std::uint32_t neighbor_id = static_cast<std::uint32_t>(ny * layout.grid_w + nx);
        const ReceptiveField& n = layout.rfs[neighbor_id];
        const std::uint64_t mix =
            splitmix64((static_cast<std::uint64_t>(rf.rf_id) << 32) ^ neighbor_id);
        const int phase_x = static_cast<int>(mix % static_cast<std::uint64_t>(stride));
        const int phase_y = static_cast<int>((mix >> 32) % static_cast<std::uint64_t>(stride));
        for (int y = n.cy0; y < n.cy1; ++y) {
          if (y % stride != phase_y) continue;
          for (int x = n.cx0; x < n.cx1; ++x) {
            if (x % stride != phase_x) continue;
            const PixelIndex p = static_cast<PixelIndex>(y) * w + x;
            rf.surround.push_back(p);
            layout.surround_users[p].push_back(rf.rf_id);
          }
        }
      }
    }
    std::sort(rf.surround.begin(), rf.surround.end());
  }
  return layout;
}

std::vector<PixelIndex> pixels_of(const RfLayout& layout, std::uint32_t rf_id, RfRole role) {
  if (rf_id >= layout.rfs.size()) {
    throw DataError("pixels_of: unknown rf_id " + std::to_string(rf_id));
  }
  const ReceptiveField& rf = layout.rfs[rf_id];
  if (role == RfRole::Surround) {
    return rf.surround;
  }
  std::vector<PixelIndex> center;
  center.reserve(static_cast<std::size_t>(rf.center_count()));
  for (int y = rf.cy0; y < rf.cy1; ++y) {
    for (int x = rf.cx0; x < rf.cx1; ++x) {
      center.push_back(static_cast<PixelIndex>(y) * layout.cfg.sensor_width + x);
    }
  }
  return center;
}

std::vector<std::string> validate_layout(const RfLayout& layout) {
  std::vector<std::string> violations;
  const int w = layout.cfg.sensor_width;
  const int h = layout.cfg.sensor_height;
  const std::size_t pixels = static_cast<std::size_t>(w) * h;

  // Centers must partition the grid.
  std::vector<int> cover(pixels, 0);
  for (const ReceptiveField& rf : layout.rfs) {
    for (int y = rf.cy0; y < rf.cy1; ++y) {
      for (int x = rf.cx0; x < rf.cx1; ++x) {
        ++cover[static_cast<std::size_t>(y) * w + x];
      }
    }
  }
  for (std::size_t i = 0; i < pixels; ++i) {
    if (cover[i] != 1) {
      violations.push_back("pixel " + std::to_string(i) + " covered by " +
                           std::to_string(cover[i]) + " centers (expected exactly 1)");
    }
  }

  const int depth = layout.cfg.neighborhood;
  for (const ReceptiveField& rf : layout.rfs) {
    const int rx = static_cast<int>(rf.rf_id) % layout.grid_w;
    const int ry = static_cast<int>(rf.rf_id) / layout.grid_w;
    std::set<PixelIndex> seen;
    for (PixelIndex p : rf.surround) {
      if (!seen.insert(p).second) {
        violations.push_back("rf " + std::to_string(rf.rf_id) + " lists surround pixel " +
                             std::to_string(p) + " more than once");
      }
      const int x = static_cast<int>(p) % w;
      const int y = static_cast<int>(p) / w;
      if (x >= rf.cx0 && x < rf.cx1 && y >= rf.cy0 && y < rf.cy1) {
        violations.push_back("rf " + std::to_string(rf.rf_id) + " surround pixel " +
                             std::to_string(p) + " lies inside its own center");
        continue;
      }
      // The pixel must belong to a neighboring center region.
      const std::int32_t home = layout.owner[p];
      if (home < 0) {
        violations.push_back("surround pixel " + std::to_string(p) + " has no owning center");
        continue;
      }
      const int hx = home % layout.grid_w;
      const int hy = home / layout.grid_w;
      if (std::max(std::abs(hx - rx), std::abs(hy - ry)) > depth) {
        violations.push_back("rf " + std::to_string(rf.rf_id) + " surround pixel " +
                             std::to_string(p) + " lies outside its neighbor ring");
      }
    }
    if (layout.is_interior(rf.rf_id) && rf.surround.empty()) {
      violations.push_back("interior rf " + std::to_string(rf.rf_id) + " has empty surround");
    }
  }
  return violations;
}

void dump_layout(const RfLayout& layout, std::ostream& out) {
  const int w = layout.cfg.sensor_width;
  for (const ReceptiveField& rf : layout.rfs) {
    out << rf.rf_id << ", " << rf.cx0 << ", " << rf.cy0 << ", " << rf.cx1 << ", " << rf.cy1
        << ", " << rf.center_count() << ", " << rf.surround_count() << "\n";
    bool first = true;
    for (PixelIndex p : rf.surround) {
      if (!first) out << ' ';
      out << static_cast<int>(p) % w << ' ' << static_cast<int>(p) / w;
      first = false;
    }
    out << "\n";
  }
}

}  // namespace iris
