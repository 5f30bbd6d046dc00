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

#ifndef IRIS_TESTS_SUPPORT_HPP
#define IRIS_TESTS_SUPPORT_HPP

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>

#include "iris/frontend.hpp"
#include "iris/types.hpp"

namespace iris::testing {

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("iris_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline LuminanceFrame frame_of(int w, int h, double value) {
  LuminanceFrame f;
  f.width = w;
  f.height = h;
  f.samples.assign(static_cast<std::size_t>(w) * h, value);
  return f;
}

inline LuminanceFrame random_frame(int w, int h, std::mt19937_64& rng) {
  LuminanceFrame f;
  f.width = w;
  f.height = h;
  f.samples.resize(static_cast<std::size_t>(w) * h);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (double& s : f.samples) s = dist(rng);
  return f;
}

inline BipolarEventMap map_of(int w, int h, Channel fill, std::int64_t tick = 1) {
  BipolarEventMap m;
  m.width = w;
  m.height = h;
  m.frame_index = tick;
  m.channels.assign(static_cast<std::size_t>(w) * h, fill);
  return m;
}

/// Valid event stream: frames ascending, (frame, y, x) sorted, no duplicates.
inline std::vector<Event> random_events(std::size_t target, int width, int height,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Event> events;
  std::uint32_t frame = 1;
  while (events.size() < target) {
    for (int y = 0; y < height && events.size() < target; ++y) {
      for (int x = 0; x < width && events.size() < target; ++x) {
        const std::uint64_t r = rng();
        if ((r & 3) == 0) {
          events.push_back(Event{frame, static_cast<std::uint16_t>(x),
                                 static_cast<std::uint16_t>(y), (r & 4) != 0});
        }
      }
    }
    ++frame;
  }
  return events;
}

// Property-suite runners shared with the acceptance binary. Each returns
// the number of violations over `iterations` randomized frame pairs.

inline std::int64_t count_antisymmetry_violations(int iterations, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::int64_t violations = 0;
  FrontendConfig cfg;
  for (int it = 0; it < iterations; ++it) {
    cfg.theta_aps = std::uniform_real_distribution<double>(0.01, 0.5)(rng);
    const LuminanceFrame a = random_frame(9, 7, rng);
    const LuminanceFrame b = random_frame(9, 7, rng);
    const BipolarEventMap fwd = aps_step(a, b, cfg, 1);
    const BipolarEventMap rev = aps_step(b, a, cfg, 1);
    for (std::size_t i = 0; i < fwd.channels.size(); ++i) {
      const Channel f = fwd.channels[i];
      const Channel r = rev.channels[i];
      const bool ok = (f == Channel::None && r == Channel::None) ||
                      (f == Channel::On && r == Channel::Off) ||
                      (f == Channel::Off && r == Channel::On);
      violations += !ok;
    }
  }
  return violations;
}

inline std::int64_t count_dvs_quiescence_violations(int iterations, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::int64_t violations = 0;
  FrontendConfig cfg;
  cfg.mode = FrontendMode::Dvs;
  for (int it = 0; it < iterations; ++it) {
    cfg.theta_dvs = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
    const LuminanceFrame frame = random_frame(8, 8, rng);
    DvsState state = dvs_reset(frame, cfg);
    for (int t = 1; t <= 3; ++t) {
      const BipolarEventMap map = dvs_step(state, frame, cfg, t);
      violations += static_cast<std::int64_t>(map.event_count());
    }
  }
  return violations;
}

inline std::int64_t count_threshold_monotonicity_violations(int iterations,
                                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::int64_t violations = 0;
  std::uniform_real_distribution<double> theta_dist(0.01, 0.45);
  for (int it = 0; it < iterations; ++it) {
    const LuminanceFrame a = random_frame(8, 6, rng);
    const LuminanceFrame b = random_frame(8, 6, rng);
    double lo = theta_dist(rng);
    double hi = theta_dist(rng);
    if (lo > hi) std::swap(lo, hi);

    FrontendConfig cfg;
    cfg.theta_aps = lo;
    const BipolarEventMap loose = aps_step(a, b, cfg, 1);
    cfg.theta_aps = hi;
    const BipolarEventMap tight = aps_step(a, b, cfg, 1);
    for (std::size_t i = 0; i < loose.channels.size(); ++i) {
      if (tight.channels[i] != Channel::None && loose.channels[i] == Channel::None) {
        ++violations;
      }
    }

    cfg.theta_dvs = lo + 0.05;
    DvsState state_lo = dvs_reset(a, cfg);
    const BipolarEventMap dvs_loose = dvs_step(state_lo, b, cfg, 1);
    cfg.theta_dvs = hi + 0.05;
    DvsState state_hi = dvs_reset(a, cfg);
    const BipolarEventMap dvs_tight = dvs_step(state_hi, b, cfg, 1);
    for (std::size_t i = 0; i < dvs_loose.channels.size(); ++i) {
      if (dvs_tight.channels[i] != Channel::None && dvs_loose.channels[i] == Channel::None) {
        ++violations;
      }
    }
  }
  return violations;
}

inline std::int64_t count_mutual_exclusion_violations(int iterations, std::uint64_t seed) {
  // One channel value per pixel is structural; the property checks every
  // emitted map still holds a defined channel everywhere.
  std::mt19937_64 rng(seed);
  std::int64_t violations = 0;
  FrontendConfig cfg;
  for (int it = 0; it < iterations; ++it) {
    const LuminanceFrame a = random_frame(7, 5, rng);
    const LuminanceFrame b = random_frame(7, 5, rng);
    const BipolarEventMap aps = aps_step(a, b, cfg, 1);
    DvsState state = dvs_reset(a, cfg);
    const BipolarEventMap dvs = dvs_step(state, b, cfg, 1);
    for (const BipolarEventMap* map : {&aps, &dvs}) {
      for (Channel c : map->channels) {
        violations += (c != Channel::None && c != Channel::On && c != Channel::Off);
      }
    }
  }
  return violations;
}

}  // namespace iris::testing

#endif  // IRIS_TESTS_SUPPORT_HPP
