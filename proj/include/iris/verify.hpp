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

#ifndef IRIS_VERIFY_HPP
#define IRIS_VERIFY_HPP

#include <iosfwd>

#include "iris/ld.hpp"
#include "iris/oms.hpp"

namespace iris {

/*
 * Exhaustive digital/analog equivalence scan. For every enumerated count
 * tuple the analog divider decision and the exact-rational digital
 * decision must agree. The two parameter sets are normally identical;
 * tests pass different ones to prove the scan detects inconsistencies.
 */

struct EquivMismatch {
  char engine = 'o';  // 'o' = OMS, 'l' = LD
  double g_up = 0.0;
  double g_down = 0.0;
  double threshold = 0.0;  // trip fraction or band half-width
  int n_up = 0;
  int n_down = 0;
  bool analog = false;
  bool digital = false;
};

struct EquivReport {
  std::uint64_t cases = 0;
  std::uint64_t parameter_sets = 0;
  std::vector<EquivMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Enumerates c_on in [0, max_c], s_on in [0, max_s] for one parameter set.
EquivReport scan_oms_equivalence(const OmsConfig& analog_cfg, const OmsConfig& digital_cfg,
                                 int max_c, int max_s);

/// Enumerates n_on, n_off in [0, max_n] for one parameter set.
EquivReport scan_ld_equivalence(const LdConfig& analog_cfg, const LdConfig& digital_cfg,
                                int max_n);

/// Full grid used by `iris verify`: weight pairs x thresholds, counts
/// c_on <= 16, s_on <= 48 (OMS) and n_on, n_off <= 32 (LD).
EquivReport run_default_verification();

/// Human-readable report; returns true when the scan found no mismatch.
bool print_verification_report(const EquivReport& report, std::ostream& out);

}  // namespace iris

#endif  // IRIS_VERIFY_HPP
