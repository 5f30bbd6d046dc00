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

#ifndef IRIS_LD_HPP
#define IRIS_LD_HPP

#include "iris/layout.hpp"
#include "iris/types.hpp"

namespace iris {

/*
 * Looming-detection engine. Within each rf's center region, ON events
 * pull the node up and OFF events pull it down:
 *
 *   v_norm = g_on*n_on / (g_on*n_on + g_off*n_off)
 *
 * A translating object exposes one leading and one trailing edge, the
 * counts balance and the node settles near half scale, which a window
 * comparator rejects. An expanding (or contracting) object drives both
 * edges with the same polarity, the node escapes the +/- band_halfwidth
 * window around 0.5 and the rf fires with the corresponding polarity:
 * DARK_LOOM below the window, BRIGHT_LOOM above.
 *
 * A quiet rf parks at idle_value (0.5), inside the window by
 * construction. As in the OMS engine, an exact-rational digital decision
 * route mirrors the floating-point analog route.
 */

struct LdConfig {
  double g_on = 1.0;
  double g_off = 1.0;
  double band_halfwidth = 0.25;  // rejection window half-width, in (0, 0.5)
  int min_activity = 2;
  double idle_value = 0.5;

  void validate() const;
};

struct LdResult {
  int n_on = 0;
  int n_off = 0;
  double v_norm = 0.5;
  bool spike = false;
  LoomPolarity polarity = LoomPolarity::None;
};

struct LdDecision {
  bool spike = false;
  LoomPolarity polarity = LoomPolarity::None;
};

/// (ON count, OFF count) over the rf's center region only.
std::pair<int, int> ld_counts(const BipolarEventMap& events, const RfLayout& layout,
                              std::uint32_t rf_id);

double ld_voltage(int n_on, int n_off, const LdConfig& cfg);

LdDecision ld_decide(double v_norm, int n_on, int n_off, const LdConfig& cfg);

/// Exact-rational decision route: |A - B| > 2*delta*(A + B) on the
/// weighted counts, with polarity from the sign of A - B.
LdDecision ld_decide_digital(int n_on, int n_off, const LdConfig& cfg);

/// Evaluates every rf independently (parallel over rfs).
std::vector<LdResult> ld_step(const BipolarEventMap& events, const RfLayout& layout,
                              const LdConfig& cfg);

}  // namespace iris

#endif  // IRIS_LD_HPP
