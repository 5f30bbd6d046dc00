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

#ifndef IRIS_PIPELINE_HPP
#define IRIS_PIPELINE_HPP

#include <filesystem>

#include "iris/config.hpp"
#include "iris/pgm.hpp"

namespace iris {

struct RunMetrics {
  std::int64_t frames = 0;
  std::int64_t total_events = 0;
  std::int64_t oms_spikes = 0;
  std::int64_t ld_spikes = 0;
  std::int64_t raw_bytes = 0;    // frames * width * height
  std::int64_t event_bytes = 0;  // AER file size
  double bandwidth_ratio = 0.0;  // event_bytes / raw_bytes, 0 when no input
  std::vector<double> oms_fraction_per_tick;  // spike-active rf fraction
  std::vector<double> ld_fraction_per_tick;
};

/*
 * Drives ingestion -> frontend -> engines -> serialization. Output files
 * written under out_dir:
 *
 *   events.csv, events.aer   bipolar event stream
 *   spikes.csv               feature spikes of the enabled engines
 *   spike_maps/oms_NNNNNN.pgm, spike_maps/ld_NNNNNN.pgm
 *   metrics.csv, tick_metrics.csv
 *
 * The run is tick-sequential; a single writer emits outputs in tick
 * order. On failure every file created by the run is removed before the
 * error propagates.
 */
RunMetrics run_pipeline(const PipelineConfig& cfg, FrameSource& frames,
                        const std::filesystem::path& out_dir);

}  // namespace iris

#endif  // IRIS_PIPELINE_HPP
