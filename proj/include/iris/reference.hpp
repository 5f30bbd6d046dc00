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

#ifndef IRIS_REFERENCE_HPP
#define IRIS_REFERENCE_HPP

#include "iris/frontend.hpp"
#include "iris/ld.hpp"
#include "iris/oms.hpp"

// Plain single-threaded implementations of the parallel kernels. Tests
// assert bit-identical agreement with the OpenMP versions; iris_bench
// compares their throughput.
namespace iris::serial {

BipolarEventMap aps_step(const LuminanceFrame& prev, const LuminanceFrame& cur,
                         const FrontendConfig& cfg, std::int64_t frame_index);

BipolarEventMap dvs_step(DvsState& state, const LuminanceFrame& cur,
                         const FrontendConfig& cfg, std::int64_t frame_index);

std::vector<OmsResult> oms_step(const BipolarEventMap& events, const RfLayout& layout,
                                const OmsConfig& cfg);

std::vector<LdResult> ld_step(const BipolarEventMap& events, const RfLayout& layout,
                              const LdConfig& cfg);

}  // namespace iris::serial

#endif  // IRIS_REFERENCE_HPP
