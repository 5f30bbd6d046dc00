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

#include "iris/ld.hpp"

#include <cmath>

#include "dyadic.hpp"

namespace iris {

void LdConfig::validate() const {
  if (!(g_on > 0.0) || !std::isfinite(g_on)) {
    throw ConfigError("ld.g_on must be finite and > 0");
  }
  if (!(g_off > 0.0) || !std::isfinite(g_off)) {
    throw ConfigError("ld.g_off must be finite and > 0");
  }
  if (!(band_halfwidth > 0.0) || !(band_halfwidth < 0.5)) {
    throw ConfigError("ld.band_halfwidth must be in (0, 0.5)");
  }
  if (min_activity < 1) {
    throw ConfigError("ld.min_activity must be >= 1");
  }
  if (!(idle_value >= 0.0) || !(idle_value <= 1.0)) {
    throw ConfigError("ld.idle_value must be in [0, 1]");
  }
}

namespace {

void check_events_match(const BipolarEventMap& events, const RfLayout& layout) {
  if (events.width != layout.cfg.sensor_width || events.height != layout.cfg.sensor_height) {
    throw DataError("ld: event map dimensions do not match layout");
  }
}

std::pair<int, int> count_center(const BipolarEventMap& events, const ReceptiveField& rf) {
  int n_on = 0;
  int n_off = 0;
  for (int y = rf.cy0; y < rf.cy1; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * events.width;
    for (int x = rf.cx0; x < rf.cx1; ++x) {
      const Channel c = events.channels[row + x];
      n_on += (c == Channel::On);
      n_off += (c == Channel::Off);
    }
  }
  return {n_on, n_off};
}

}  // namespace

std::pair<int, int> ld_counts(const BipolarEventMap& events, const RfLayout& layout,
                              std::uint32_t rf_id) {
  check_events_match(events, layout);
  if (rf_id >= layout.rfs.size()) {
    throw DataError("ld_counts: unknown rf_id " + std::to_string(rf_id));
  }
  return count_center(events, layout.rfs[rf_id]);
}

double ld_voltage(int n_on, int n_off, const LdConfig& cfg) {
  if (n_on == 0 && n_off == 0) return cfg.idle_value;
  const double up = cfg.g_on * n_on;
  const double down = cfg.g_off * n_off;
  return up / (up + down);
}

LdDecision ld_decide(double v_norm, int n_on, int n_off, const LdConfig& cfg) {
  LdDecision d;
  if (n_on + n_off < cfg.min_activity) return d;
  if (!(std::fabs(v_norm - 0.5) > cfg.band_halfwidth)) return d;
  d.spike = true;
  d.polarity = v_norm < 0.5 ? LoomPolarity::DarkLoom : LoomPolarity::BrightLoom;
  return d;
}

LdDecision ld_decide_digital(int n_on, int n_off, const LdConfig& cfg) {
  LdDecision d;
  if (n_on + n_off < cfg.min_activity) return d;
  // |v - 1/2| > delta  <=>  |A - B| > 2*delta*(A + B)  with A = g_on*n_on,
  // B = g_off*n_off; evaluated over exact rationals.
  const detail::Dyadic up = detail::mul_int(detail::dyadic_from_double(cfg.g_on), n_on);
  const detail::Dyadic down = detail::mul_int(detail::dyadic_from_double(cfg.g_off), n_off);
  detail::Dyadic delta2 = detail::dyadic_from_double(cfg.band_halfwidth);
  delta2.exp2 += 1;
  const detail::Dyadic window = detail::mul(delta2, detail::add(up, down));

  const int side = detail::compare(up, down);
  const detail::Dyadic& hi = side >= 0 ? up : down;
  const detail::Dyadic& lo = side >= 0 ? down : up;
  const std::int64_t e = std::min(hi.exp2, lo.exp2);
  const detail::Dyadic diff{(hi.num << static_cast<unsigned>(hi.exp2 - e)) -
                                (lo.num << static_cast<unsigned>(lo.exp2 - e)),
                            e};
  if (detail::compare(diff, window) <= 0) return d;
  d.spike = true;
  d.polarity = side < 0 ? LoomPolarity::DarkLoom : LoomPolarity::BrightLoom;
  return d;
}

std::vector<LdResult> ld_step(const BipolarEventMap& events, const RfLayout& layout,
                              const LdConfig& cfg) {
  check_events_match(events, layout);
  std::vector<LdResult> results(layout.rfs.size());
  const std::int64_t n = static_cast<std::int64_t>(layout.rfs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto [n_on, n_off] = count_center(events, layout.rfs[i]);
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

}  // namespace iris
