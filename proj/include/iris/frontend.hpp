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

#ifndef IRIS_FRONTEND_HPP
#define IRIS_FRONTEND_HPP

#include "iris/types.hpp"

namespace iris {

/*
 * The frontend turns consecutive luminance frames into ON/OFF bipolar
 * event maps. Two pixel models are provided:
 *
 *   APS: linear frame differencing. A pixel fires ON when the luminance
 *        rose by more than theta_aps since the previous frame, OFF when
 *        it fell by more than theta_aps, NONE otherwise.
 *
 *   DVS: log-intensity change detection against a per-pixel reference.
 *        The reference snaps to the current log level whenever the pixel
 *        fires, so sustained ramps produce event trains. Emulation is
 *        frame-synchronous: at most one event per pixel per tick.
 *
 * Comparisons are strict: a delta exactly equal to the threshold emits
 * NONE. The first frame of a sequence only seeds state and emits nothing.
 */

enum class FrontendMode : std::uint8_t { Aps = 0, Dvs = 1 };

struct FrontendConfig {
  FrontendMode mode = FrontendMode::Aps;
  double theta_aps = 0.1;   // linear luminance delta threshold, in (0,1)
  double theta_dvs = 0.2;   // log-intensity threshold, > 0
  double log_floor = 1e-3;  // added to luminance before taking logs, > 0
  int frame_period = 1;     // informational tick period

  void validate() const;  // throws ConfigError naming the offending key
};

/// Per-pixel log-luminance reference memory for the DVS model.
struct DvsState {
  int width = 0;
  int height = 0;
  std::vector<double> ref_log;

  bool initialized() const { return !ref_log.empty(); }
};

BipolarEventMap aps_step(const LuminanceFrame& prev, const LuminanceFrame& cur,
                         const FrontendConfig& cfg, std::int64_t frame_index);

DvsState dvs_reset(const LuminanceFrame& first, const FrontendConfig& cfg);

/// Advances the DVS model by one frame; fires at most once per pixel and
/// snaps the fired pixels' references to the current log level.
BipolarEventMap dvs_step(DvsState& state, const LuminanceFrame& cur,
                         const FrontendConfig& cfg, std::int64_t frame_index);

// Stateful driver for either mode: reset() seeds from the first frame
// (tick 0, no events), each step() yields the map for the next tick.
class Frontend {
 public:
  explicit Frontend(FrontendConfig cfg);

  void reset(const LuminanceFrame& first);
  BipolarEventMap step(const LuminanceFrame& cur);

  std::int64_t tick() const { return tick_; }

 private:
  FrontendConfig cfg_;
  LuminanceFrame prev_;
  DvsState dvs_;
  std::int64_t tick_ = 0;
  bool seeded_ = false;
};

}  // namespace iris

#endif  // IRIS_FRONTEND_HPP
