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

#include "iris/oms.hpp"

#include "dyadic.hpp"

namespace iris {

void OmsConfig::validate() const {
  if (!(g_center > 0.0) || !std::isfinite(g_center)) {
    throw ConfigError("oms.g_center must be finite and > 0");
  }
  if (!(g_surround > 0.0) || !std::isfinite(g_surround)) {
    throw ConfigError("oms.g_surround must be finite and > 0");
  }
  if (!(trip_fraction > 0.0) || !(trip_fraction < 1.0)) {
    throw ConfigError("oms.trip_fraction must be in (0, 1)");
  }
  if (min_center_activity < 1) {
    throw ConfigError("oms.min_center_activity must be >= 1");
  }
  if (!(idle_value >= 0.0) || !(idle_value <= 1.0)) {
    throw ConfigError("oms.idle_value must be in [0, 1]");
  }
}

namespace {

void check_events_match(const BipolarEventMap& events, const RfLayout& layout) {
  if (events.width != layout.cfg.sensor_width || events.height != layout.cfg.sensor_height) {
    throw DataError("oms: event map dimensions do not match layout");
  }
}

inline bool active(Channel c) { return c != Channel::None; }

std::pair<int, int> count_rf(const BipolarEventMap& events, const RfLayout& layout,
                             const ReceptiveField& rf) {
  int c_on = 0;
  for (int y = rf.cy0; y < rf.cy1; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * events.width;
    for (int x = rf.cx0; x < rf.cx1; ++x) {
      c_on += active(events.channels[row + x]);
    }
  }
  int s_on = 0;
  for (PixelIndex p : rf.surround) {
    s_on += active(events.channels[p]);
  }
  (void)layout;
  return {c_on, s_on};
}

}  // namespace

std::pair<int, int> oms_counts(const BipolarEventMap& events, const RfLayout& layout,
                               std::uint32_t rf_id) {
  check_events_match(events, layout);
  if (rf_id >= layout.rfs.size()) {
    throw DataError("oms_counts: unknown rf_id " + std::to_string(rf_id));
  }
  return count_rf(events, layout, layout.rfs[rf_id]);
}

double oms_analog_voltage(int c_on, int s_on, double g_center, double g_surround,
                          double idle_value) {
  if (c_on == 0 && s_on == 0) return idle_value;
  const double up = g_center * c_on;
  const double down = g_surround * s_on;
  return up / (up + down);
}

double oms_analog_voltage(int c_on, int s_on, const OmsConfig& cfg) {
  return oms_analog_voltage(c_on, s_on, cfg.g_center, cfg.g_surround, cfg.idle_value);
}

bool oms_decide(double v_norm, int c_on, const OmsConfig& cfg) {
  return c_on >= cfg.min_center_activity && v_norm >= cfg.trip_fraction;
}

bool oms_decide_digital(int c_on, int s_on, double g_center, double g_surround,
                        double trip_fraction, int min_center_activity) {
  if (c_on < min_center_activity) return false;
  // g_center*c_on*(1 - tau) >= tau*g_surround*s_on over exact rationals.
  const detail::Dyadic up = detail::mul_int(detail::dyadic_from_double(g_center), c_on);
  const detail::Dyadic down = detail::mul_int(detail::dyadic_from_double(g_surround), s_on);
  const detail::Dyadic tau = detail::dyadic_from_double(trip_fraction);
  const detail::Dyadic lhs = detail::mul(up, detail::one_minus(tau));
  const detail::Dyadic rhs = detail::mul(tau, down);
  return detail::compare(lhs, rhs) >= 0;
}

double oms_surround_weight(const OmsConfig& cfg, int center_size, int surround_size) {
  if (!cfg.balanced_weights) return cfg.g_surround;
  if (surround_size == 0) return cfg.g_center;
  return cfg.g_center * static_cast<double>(center_size) / surround_size;
}

std::vector<OmsResult> oms_step(const BipolarEventMap& events, const RfLayout& layout,
                                const OmsConfig& cfg) {
  check_events_match(events, layout);
  std::vector<OmsResult> results(layout.rfs.size());
  const std::int64_t n = static_cast<std::int64_t>(layout.rfs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const ReceptiveField& rf = layout.rfs[i];
    const auto [c_on, s_on] = count_rf(events, layout, rf);
    const double g_s = oms_surround_weight(cfg, rf.center_count(), rf.surround_count());
    OmsResult& r = results[i];
    r.c_on = c_on;
    r.s_on = s_on;
    r.v_norm = oms_analog_voltage(c_on, s_on, cfg.g_center, g_s, cfg.idle_value);
    r.spike = oms_decide(r.v_norm, c_on, cfg);
  }
  return results;
}

}  // namespace iris
