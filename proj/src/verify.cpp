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

#include "iris/verify.hpp"

#include <ostream>

namespace iris {

EquivReport scan_oms_equivalence(const OmsConfig& analog_cfg, const OmsConfig& digital_cfg,
                                 int max_c, int max_s) {
  EquivReport report;
  report.parameter_sets = 1;
  for (int c = 0; c <= max_c; ++c) {
    for (int s = 0; s <= max_s; ++s) {
      ++report.cases;
      const double v = oms_analog_voltage(c, s, analog_cfg);
      const bool analog = oms_decide(v, c, analog_cfg);
      const bool digital =
          oms_decide_digital(c, s, digital_cfg.g_center, digital_cfg.g_surround,
                             digital_cfg.trip_fraction, digital_cfg.min_center_activity);
      if (analog != digital) {
        report.mismatches.push_back(EquivMismatch{'o', analog_cfg.g_center,
                                                  analog_cfg.g_surround,
                                                  analog_cfg.trip_fraction, c, s, analog,
                                                  digital});
      }
    }
  }
  return report;
}

EquivReport scan_ld_equivalence(const LdConfig& analog_cfg, const LdConfig& digital_cfg,
                                int max_n) {
  EquivReport report;
  report.parameter_sets = 1;
  for (int n_on = 0; n_on <= max_n; ++n_on) {
    for (int n_off = 0; n_off <= max_n; ++n_off) {
      ++report.cases;
      const double v = ld_voltage(n_on, n_off, analog_cfg);
      const bool analog = ld_decide(v, n_on, n_off, analog_cfg).spike;
      const bool digital = ld_decide_digital(n_on, n_off, digital_cfg).spike;
      if (analog != digital) {
        report.mismatches.push_back(EquivMismatch{'l', analog_cfg.g_on, analog_cfg.g_off,
                                                  analog_cfg.band_halfwidth, n_on, n_off, analog,
                                                  digital});
      }
    }
  }
  return report;
}

namespace {

void merge(EquivReport& total, const EquivReport& part) {
  total.cases += part.cases;
  total.parameter_sets += part.parameter_sets;
  total.mismatches.insert(total.mismatches.end(), part.mismatches.begin(),
                          part.mismatches.end());
}

}  // namespace

EquivReport run_default_verification() {
  // Weight pairs model transistor width ratios; thresholds cover the
  // usable trip-point and window ranges around the defaults.
  constexpr double kWeightPairs[][2] = {{1, 1}, {2, 1}, {1, 2}, {4, 1}, {2, 3}};
  constexpr double kTripFractions[] = {0.375, 0.5, 0.5625, 0.6, 0.625, 0.6875, 0.75, 0.8125,
                                       0.875};
  constexpr double kBandHalfwidths[] = {0.125, 0.1875, 0.25, 0.3125, 0.375};

  EquivReport total;
  for (const auto& w : kWeightPairs) {
    for (double tau : kTripFractions) {
      OmsConfig cfg;
      cfg.g_center = w[0];
      cfg.g_surround = w[1];
      cfg.balanced_weights = false;
      cfg.trip_fraction = tau;
      merge(total, scan_oms_equivalence(cfg, cfg, 16, 48));
    }
  }
  for (const auto& w : kWeightPairs) {
    for (double delta : kBandHalfwidths) {
      LdConfig cfg;
      cfg.g_on = w[0];
      cfg.g_off = w[1];
      cfg.band_halfwidth = delta;
      merge(total, scan_ld_equivalence(cfg, cfg, 32));
    }
  }
  return total;
}

bool print_verification_report(const EquivReport& report, std::ostream& out) {
  if (report.ok()) {
    out << "OK (" << report.cases << " cases across " << report.parameter_sets
        << " parameter sets, 0 mismatches)\n";
    return true;
  }
  out << report.mismatches.size() << " mismatches in " << report.cases << " cases:\n";
  std::size_t shown = 0;
  for (const EquivMismatch& m : report.mismatches) {
    if (++shown > 20) {
      out << "  ... " << (report.mismatches.size() - 20) << " more\n";
      break;
    }
    out << "  " << (m.engine == 'o' ? "OMS" : "LD") << " g_up=" << m.g_up
        << " g_down=" << m.g_down << " threshold=" << m.threshold << " n_up=" << m.n_up
        << " n_down=" << m.n_down << " analog=" << (m.analog ? "spike" : "quiet")
        << " digital=" << (m.digital ? "spike" : "quiet") << "\n";
  }
  return false;
}

}  // namespace iris
