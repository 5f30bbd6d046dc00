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

#ifndef IRIS_OMS_HPP
#define IRIS_OMS_HPP

#include "iris/layout.hpp"
#include "iris/types.hpp"

namespace iris {

/*
 * Object-motion-sensitivity engine. Active center pixels (ON or OFF,
 * rectified) pull a normalized accumulation node toward full scale with
 * weight g_center each; active surround pixels pull it toward ground
 * with weight g_surround each. The settled node value is the steady-state
 * divider
 *
 *   v_norm = g_center*c_on / (g_center*c_on + g_surround*s_on)
 *
 * and the rf spikes when v_norm reaches the buffer trip fraction while
 * at least min_center_activity center pixels are active.
 *
 * Two decision routes are provided: the analog route compares the
 * floating-point divider value against the trip fraction, the digital
 * route evaluates the equivalent cross-multiplied comparison
 * g_center*c_on*(1-tau) >= tau*g_surround*s_on in exact rational
 * arithmetic. They agree on every input; `iris verify` enumerates this.
 */

struct OmsConfig {
  double g_center = 1.0;
  // Used when balanced_weights is false; otherwise each rf gets
  // g_surround = g_center * |center| / |surround|.
  double g_surround = 1.0;
  bool balanced_weights = true;
  double trip_fraction = 0.6;  // buffer trip point, in (0,1)
  int min_center_activity = 1;
  double idle_value = 0.0;  // node value when no device is active

  void validate() const;
};

struct OmsResult {
  int c_on = 0;
  int s_on = 0;
  double v_norm = 0.0;
  bool spike = false;
};

/// (active center pixels, active surround pixels) of one rf.
std::pair<int, int> oms_counts(const BipolarEventMap& events, const RfLayout& layout,
                               std::uint32_t rf_id);

double oms_analog_voltage(int c_on, int s_on, double g_center, double g_surround,
                          double idle_value);
double oms_analog_voltage(int c_on, int s_on, const OmsConfig& cfg);

bool oms_decide(double v_norm, int c_on, const OmsConfig& cfg);

/// Exact-rational decision route; no divider value is formed.
bool oms_decide_digital(int c_on, int s_on, double g_center, double g_surround,
                        double trip_fraction, int min_center_activity);

/// Effective surround weight for one rf under the configured weighting rule.
double oms_surround_weight(const OmsConfig& cfg, int center_size, int surround_size);

/// Evaluates every rf independently (parallel over rfs).
std::vector<OmsResult> oms_step(const BipolarEventMap& events, const RfLayout& layout,
                                const OmsConfig& cfg);

}  // namespace iris

#endif  // IRIS_OMS_HPP
