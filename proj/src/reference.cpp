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

#include "iris/reference.hpp"

#include <cmath>

namespace iris::serial {

BipolarEventMap aps_step(const LuminanceFrame& prev, const LuminanceFrame& cur,
                         const FrontendConfig& cfg, std::int64_t frame_index) {
  if (!prev.same_dims(cur)) {
    throw DataError("serial::aps_step: frame dimension mismatch");
  }
  BipolarEventMap map;
  map.width = cur.width;
  map.height = cur.height;
  map.frame_index = frame_index;
  map.channels.resize(cur.pixel_count());
  for (std::size_t i = 0; i < cur.pixel_count(); ++i) {
    const double delta = cur.samples[i] - prev.samples[i];
    map.channels[i] = delta > cfg.theta_aps    ? Channel::On
                      : delta < -cfg.theta_aps ? Channel::Off
                                               : Channel::None;
  }
  return map;
}

BipolarEventMap dvs_step(DvsState& state, const LuminanceFrame& cur, const FrontendConfig& cfg,
                         std::int64_t frame_index) {
  if (!state.initialized()) {
    throw DataError("serial::dvs_step: state not initialized");
  }
  if (state.width != cur.width || state.height != cur.height) {
    throw DataError("serial::dvs_step: frame dimensions do not match state");
  }
  BipolarEventMap map;
  map.width = cur.width;
  map.height = cur.height;
  map.frame_index = frame_index;
  map.channels.resize(cur.pixel_count());
  for (std::size_t i = 0; i < cur.pixel_count(); ++i) {
    const double log_lum = std::log(cur.samples[i] + cfg.log_floor);
    double& ref = state.ref_log[i];
    if (log_lum - ref > cfg.theta_dvs) {
      map.channels[i] = Channel::On;
      ref = log_lum;
    } else if (ref - log_lum > cfg.theta_dvs) {
      map.channels[i] = Channel::Off;
      ref = log_lum;
    } else {
      map.channels[i] = Channel::None;
    }
  }
  return map;
}

std::vector<OmsResult> oms_step(const BipolarEventMap& events, const RfLayout& layout,
                                const OmsConfig& cfg) {
  if (events.width != layout.cfg.sensor_width || events.height != layout.cfg.sensor_height) {
    throw DataError("serial::oms_step: event map dimensions do not match layout");
  }
  std::vector<OmsResult> results(layout.rfs.size());
  for (std::size_t i = 0; i < layout.rfs.size(); ++i) {
    const ReceptiveField& rf = layout.rfs[i];
    int c_on = 0;
    for (int y = rf.cy0; y < rf.cy1; ++y) {
      for (int x = rf.cx0; x < rf.cx1; ++x) {
        c_on += (events.at(x, y) != Channel::None);
      }
    }
    int s_on = 0;
    for (PixelIndex p : rf.surround) {
      s_on += (events.channels[p] != Channel::None);
    }
    const double g_s = oms_surround_weight(cfg, rf.center_count(), rf.surround_count());
    OmsResult& r = results[i];
    r.c_on = c_on;
    r.s_on = s_on;
    r.v_norm = oms_analog_voltage(c_on, s_on, cfg.g_center, g_s, cfg.idle_value);
    r.spike = oms_decide(r.v_norm, c_on, cfg);
  }
  return results;
}

std::vector<LdResult> ld_step(const BipolarEventMap& events, const RfLayout& layout,
                              const LdConfig& cfg) {
  if (events.width != layout.cfg.sensor_width || events.height != layout.cfg.sensor_height) {
    throw DataError("serial::ld_step: event map dimensions do not match layout");
  }
  std::vector<LdResult> results(layout.rfs.size());
  for (std::size_t i = 0; i < layout.rfs.size(); ++i) {
    const ReceptiveField& rf = layout.rfs[i];
    int n_on = 0;
    int n_off = 0;
    for (int y = rf.cy0; y < rf.cy1; ++y) {
      for (int x = rf.cx0; x < rf.cx1; ++x) {
        const Channel c = events.at(x, y);
        n_on += (c == Channel::On);
        n_off += (c == Channel::Off);
      }
    }
    LdResult& r = results[i];
    r.n_on = n_on;
    r.n_off = n_off;
    r.v_norm = ld_voltage(n_on, n_off, cfg);
    const LdDecision d = ld_decide(r.v_norm, n_on, n_off, cfg);
    r.spike = d.spike;
    r.polarity = d.polarity;
  }
  return results;
}

}  // namespace iris::serial
