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

#include "iris/frontend.hpp"

#include <cmath>

namespace iris {

void FrontendConfig::validate() const {
  if (!(theta_aps > 0.0) || !(theta_aps < 1.0)) {
    throw ConfigError("frontend.theta_aps must be in (0, 1)");
  }
  if (!(theta_dvs > 0.0)) {
    throw ConfigError("frontend.theta_dvs must be > 0");
  }
  if (!(log_floor > 0.0)) {
    throw ConfigError("frontend.log_floor must be > 0");
  }
  if (frame_period < 1) {
    throw ConfigError("frontend.frame_period must be >= 1");
  }
}

namespace {

void check_dims(const LuminanceFrame& a, const LuminanceFrame& b, const char* op) {
  if (!a.same_dims(b)) {
    throw DataError(std::string(op) + ": frame dimension mismatch (" + std::to_string(a.width) +
                    "x" + std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                    std::to_string(b.height) + ")");
  }
}

inline Channel aps_channel(double prev, double cur, double theta) {
  const double delta = cur - prev;
  if (delta > theta) return Channel::On;
  if (delta < -theta) return Channel::Off;
  return Channel::None;
}

// Reference update only on firing, so the pixel integrates contrast
// across ticks until the threshold is crossed.
inline Channel dvs_channel(double& ref, double log_lum, double theta) {
  if (log_lum - ref > theta) {
    ref = log_lum;
    return Channel::On;
  }
  if (ref - log_lum > theta) {
    ref = log_lum;
    return Channel::Off;
  }
  return Channel::None;
}

}  // namespace

BipolarEventMap aps_step(const LuminanceFrame& prev, const LuminanceFrame& cur,
                         const FrontendConfig& cfg, std::int64_t frame_index) {
  check_dims(prev, cur, "aps_step");
  BipolarEventMap map;
  map.width = cur.width;
  map.height = cur.height;
  map.frame_index = frame_index;
  map.channels.resize(cur.pixel_count());

  const double theta = cfg.theta_aps;
  const int h = cur.height;
  const int w = cur.width;
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      map.channels[row + x] = aps_channel(prev.samples[row + x], cur.samples[row + x], theta);
    }
  }
  return map;
}

DvsState dvs_reset(const LuminanceFrame& first, const FrontendConfig& cfg) {
  DvsState state;
  state.width = first.width;
  state.height = first.height;
  state.ref_log.resize(first.pixel_count());
  const std::size_t n = first.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    state.ref_log[i] = std::log(first.samples[i] + cfg.log_floor);
  }
  return state;
}

BipolarEventMap dvs_step(DvsState& state, const LuminanceFrame& cur, const FrontendConfig& cfg,
                         std::int64_t frame_index) {
  if (!state.initialized()) {
    throw DataError("dvs_step: state not initialized; call dvs_reset first");
  }
  if (state.width != cur.width || state.height != cur.height) {
    throw DataError("dvs_step: frame dimensions do not match state");
  }
  BipolarEventMap map;
  map.width = cur.width;
  map.height = cur.height;
  map.frame_index = frame_index;
  map.channels.resize(cur.pixel_count());

  const double theta = cfg.theta_dvs;
  const double floor = cfg.log_floor;
  const int h = cur.height;
  const int w = cur.width;
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      const double log_lum = std::log(cur.samples[row + x] + floor);
      map.channels[row + x] = dvs_channel(state.ref_log[row + x], log_lum, theta);
    }
  }
  return map;
}

Frontend::Frontend(FrontendConfig cfg) : cfg_(cfg) { cfg_.validate(); }

void Frontend::reset(const LuminanceFrame& first) {
  if (cfg_.mode == FrontendMode::Dvs) {
    dvs_ = dvs_reset(first, cfg_);
  } else {
    prev_ = first;
  }
  tick_ = 0;
  seeded_ = true;
}

BipolarEventMap Frontend::step(const LuminanceFrame& cur) {
  if (!seeded_) {
    throw DataError("frontend: step before reset");
  }
  ++tick_;
  if (cfg_.mode == FrontendMode::Dvs) {
    return dvs_step(dvs_, cur, cfg_, tick_);
  }
  BipolarEventMap map = aps_step(prev_, cur, cfg_, tick_);
  prev_ = cur;
  return map;
}

}  // namespace iris
