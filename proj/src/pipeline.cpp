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

#include "iris/pipeline.hpp"

#include <cstdio>
#include <limits>

#include "iris/event_codec.hpp"
#include "iris/ld.hpp"
#include "iris/oms.hpp"

namespace iris {

namespace fs = std::filesystem;

namespace {

struct OutputTracker {
  std::vector<fs::path> files;
  std::vector<fs::path> dirs;

  fs::path file(const fs::path& p) {
    files.push_back(p);
    return p;
  }

  fs::path dir(const fs::path& p) {
    fs::create_directories(p);
    dirs.push_back(p);
    return p;
  }

  void remove_all() {
    std::error_code ec;
    for (const fs::path& p : files) fs::remove(p, ec);
    for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) fs::remove(*it, ec);
  }
};

void check_frame_dims(const LuminanceFrame& f, const LayoutConfig& cfg, std::int64_t index) {
  if (f.width != cfg.sensor_width || f.height != cfg.sensor_height) {
    throw DataError("frame " + std::to_string(index) + " is " + std::to_string(f.width) + "x" +
                    std::to_string(f.height) + " but the configured sensor is " +
                    std::to_string(cfg.sensor_width) + "x" + std::to_string(cfg.sensor_height));
  }
}

std::string tick_name(const char* prefix, std::int64_t tick) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s_%06lld.pgm", prefix, static_cast<long long>(tick));
  return buf;
}

void write_metrics(const RunMetrics& m, const fs::path& summary_path,
                   const fs::path& per_tick_path) {
  std::ofstream out(summary_path, std::ios::binary);
  if (!out) throw DataError(summary_path.string() + ": cannot open for writing");
  char ratio[32];
  std::snprintf(ratio, sizeof(ratio), "%.8f", m.bandwidth_ratio);
  out << "key,value\n"
      << "frames," << m.frames << "\n"
      << "total_events," << m.total_events << "\n"
      << "oms_spikes," << m.oms_spikes << "\n"
      << "ld_spikes," << m.ld_spikes << "\n"
      << "raw_bytes," << m.raw_bytes << "\n"
      << "event_bytes," << m.event_bytes << "\n"
      << "bandwidth_ratio," << ratio << "\n";
  if (!out) throw DataError(summary_path.string() + ": write failed");

  std::ofstream ticks(per_tick_path, std::ios::binary);
  if (!ticks) throw DataError(per_tick_path.string() + ": cannot open for writing");
  ticks << "tick,oms_spike_fraction,ld_spike_fraction\n";
  for (std::size_t t = 0; t < m.oms_fraction_per_tick.size(); ++t) {
    char a[32], b[32];
    std::snprintf(a, sizeof(a), "%.6f", m.oms_fraction_per_tick[t]);
    std::snprintf(b, sizeof(b), "%.6f", m.ld_fraction_per_tick[t]);
    ticks << (t + 1) << ',' << a << ',' << b << "\n";
  }
  if (!ticks) throw DataError(per_tick_path.string() + ": write failed");
}

RunMetrics run_impl(const PipelineConfig& cfg, FrameSource& frames, const fs::path& out_dir,
                      OutputTracker& outputs) {
  const RfLayout layout = build_layout(cfg.layout);
  Frontend frontend(cfg.frontend);

  EventCsvWriter event_csv(outputs.file(out_dir / "events.csv"));
  AerWriter aer(outputs.file(out_dir / "events.aer"));
  SpikeCsvWriter spike_csv(outputs.file(out_dir / "spikes.csv"));
  const fs::path map_dir = outputs.dir(out_dir / "spike_maps");

  RunMetrics metrics;
  std::int64_t tick = 0;
  std::vector<std::uint32_t> oms_spiking;
  std::vector<std::uint32_t> ld_spiking;

  while (auto frame = frames.next()) {
    check_frame_dims(*frame, cfg.layout, metrics.frames);
    ++metrics.frames;
    if (metrics.frames == 1) {
      frontend.reset(*frame);
      continue;
    }
    ++tick;
    if (tick > std::numeric_limits<std::uint32_t>::max()) {
      throw DataError("frame index overflows the 32-bit event format");
    }
    const BipolarEventMap map = frontend.step(*frame);
    for (const Event& e : extract_events(map)) {
      event_csv.append(e);
      aer.append(e);
      ++metrics.total_events;
    }

    oms_spiking.clear();
    ld_spiking.clear();
    std::vector<OmsResult> oms_results;
    std::vector<LdResult> ld_results;
    if (cfg.engines.oms) oms_results = oms_step(map, layout, cfg.oms);
    if (cfg.engines.ld) ld_results = ld_step(map, layout, cfg.ld);

    // Spike rows ordered (frame, rf_id, kind).
    for (std::uint32_t rf = 0; rf < layout.rf_count(); ++rf) {
      if (cfg.engines.oms && oms_results[rf].spike) {
        oms_spiking.push_back(rf);
        spike_csv.append(FeatureSpikeRecord{static_cast<std::uint32_t>(tick), rf,
                                            SpikeKind::Oms, LoomPolarity::None,
                                            oms_results[rf].v_norm});
        ++metrics.oms_spikes;
      }
      if (cfg.engines.ld && ld_results[rf].spike) {
        ld_spiking.push_back(rf);
        spike_csv.append(FeatureSpikeRecord{static_cast<std::uint32_t>(tick), rf, SpikeKind::Ld,
                                            ld_results[rf].polarity, ld_results[rf].v_norm});
        ++metrics.ld_spikes;
      }
    }
    const double rf_count = static_cast<double>(layout.rf_count());
    metrics.oms_fraction_per_tick.push_back(oms_spiking.size() / rf_count);
    metrics.ld_fraction_per_tick.push_back(ld_spiking.size() / rf_count);

    if (cfg.engines.oms) {
      render_spike_map(oms_spiking, layout, outputs.file(map_dir / tick_name("oms", tick)));
    }
    if (cfg.engines.ld) {
      render_spike_map(ld_spiking, layout, outputs.file(map_dir / tick_name("ld", tick)));
    }
  }

  event_csv.close();
  aer.close();
  spike_csv.close();

  metrics.raw_bytes = metrics.frames * cfg.layout.sensor_width * cfg.layout.sensor_height;
  metrics.event_bytes = static_cast<std::int64_t>(fs::file_size(out_dir / "events.aer"));
  metrics.bandwidth_ratio =
      metrics.raw_bytes > 0
          ? static_cast<double>(metrics.event_bytes) / static_cast<double>(metrics.raw_bytes)
          : 0.0;

  write_metrics(metrics, outputs.file(out_dir / "metrics.csv"),
                outputs.file(out_dir / "tick_metrics.csv"));
  return metrics;
}

}  // namespace

RunMetrics run_pipeline(const PipelineConfig& cfg, FrameSource& frames,
                        const fs::path& out_dir) {
  cfg.validate();
  fs::create_directories(out_dir);
  OutputTracker outputs;
  try {
    return run_impl(cfg, frames, out_dir, outputs);
  } catch (...) {
    outputs.remove_all();
    throw;
  }
}

}  // namespace iris
