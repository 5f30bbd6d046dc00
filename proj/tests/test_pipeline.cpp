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

#include <algorithm>
#include <doctest.h>
#include <fstream>
#include <map>

#include "iris/event_codec.hpp"
#include "iris/pipeline.hpp"
#include "iris/synth.hpp"
#include "support.hpp"

using namespace iris;
using namespace iris::testing;

namespace {

class VectorSource final : public FrameSource {
 public:
  explicit VectorSource(std::vector<LuminanceFrame> frames) : frames_(std::move(frames)) {}
  std::optional<LuminanceFrame> next() override {
    if (index_ >= frames_.size()) return std::nullopt;
    return frames_[index_++];
  }

 private:
  std::vector<LuminanceFrame> frames_;
  std::size_t index_ = 0;
};

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

PipelineConfig config_for(int sensor, int center) {
  PipelineConfig cfg;
  cfg.layout.sensor_width = sensor;
  cfg.layout.sensor_height = sensor;
  cfg.layout.center_w = center;
  cfg.layout.center_h = center;
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("a static scene produces headers only") {
  TempDir out("static");
  PipelineConfig cfg = config_for(16, 8);
  VectorSource frames({frame_of(16, 16, 0.3), frame_of(16, 16, 0.3), frame_of(16, 16, 0.3)});
  const RunMetrics m = run_pipeline(cfg, frames, out.path());

  CHECK(m.frames == 3);
  CHECK(m.total_events == 0);
  CHECK(m.oms_spikes == 0);
  CHECK(m.ld_spikes == 0);
  CHECK(read_bytes(out / "events.csv") == "frame,x,y,polarity\n");
  CHECK(read_bytes(out / "events.aer") == std::string("IRSE\x01", 5));
  CHECK(read_bytes(out / "spikes.csv") == "frame,rf_id,kind,polarity,v_norm\n");
  CHECK(m.event_bytes == 5);
  CHECK(m.raw_bytes == 3 * 16 * 16);
  CHECK(m.bandwidth_ratio == 5.0 / (3 * 16 * 16));
}

TEST_CASE("an empty stream emits zero ticks") {
  TempDir out("empty");
  PipelineConfig cfg = config_for(16, 8);
  VectorSource frames({});
  const RunMetrics m = run_pipeline(cfg, frames, out.path());
  CHECK(m.frames == 0);
  CHECK(m.bandwidth_ratio == 0.0);
  CHECK(read_bytes(out / "events.csv") == "frame,x,y,polarity\n");
}

TEST_CASE("full-activation pan matches the AER size formula") {
  StimulusSpec spec;
  spec.kind = StimulusKind::GlobalPan;
  spec.width = 32;
  spec.height = 32;
  spec.frames = 5;
  TempDir out("pan");
  PipelineConfig cfg = config_for(32, 8);
  VectorSource frames(synthesize(spec));
  const RunMetrics m = run_pipeline(cfg, frames, out.path());

  const std::int64_t events = 32 * 32 * (spec.frames - 1);
  CHECK(m.total_events == events);
  CHECK(m.event_bytes == 5 + 10 * events);
  const std::string csv = read_bytes(out / "events.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == events + 1);  // rows + header
  CHECK(static_cast<std::int64_t>(std::filesystem::file_size(out / "events.aer")) ==
        m.event_bytes);
  CHECK(m.raw_bytes == static_cast<std::int64_t>(spec.frames) * 32 * 32);
  CHECK(m.bandwidth_ratio == doctest::Approx(static_cast<double>(m.event_bytes) / m.raw_bytes));
}

TEST_CASE("pipeline runs are byte-deterministic") {
  StimulusSpec spec;
  spec.kind = StimulusKind::LoomDisc;
  spec.width = 32;
  spec.height = 32;
  spec.frames = 8;
  spec.radius = 2;
  spec.growth = 1;

  TempDir a("det_a");
  TempDir b("det_b");
  PipelineConfig cfg = config_for(32, 16);
  {
    VectorSource frames(synthesize(spec));
    run_pipeline(cfg, frames, a.path());
  }
  {
    VectorSource frames(synthesize(spec));
    run_pipeline(cfg, frames, b.path());
  }
  for (const char* name : {"events.csv", "events.aer", "spikes.csv", "metrics.csv",
                           "tick_metrics.csv"}) {
    CHECK(read_bytes(a / name) == read_bytes(b / name));
  }
  for (int t = 1; t <= 7; ++t) {
    char name[48];
    std::snprintf(name, sizeof(name), "spike_maps/ld_%06d.pgm", t);
    CHECK(read_bytes(a.path() / name) == read_bytes(b.path() / name));
    CHECK(!read_bytes(a.path() / name).empty());
  }
}

TEST_CASE("spike maps whiten exactly the rfs with spike rows") {
  StimulusSpec spec;
  spec.kind = StimulusKind::LoomDisc;
  spec.width = 64;
  spec.height = 64;
  spec.frames = 9;
  spec.radius = 2;
  spec.growth = 1;
  spec.disc_x = 16;
  spec.disc_y = 16;

  TempDir out("consistency");
  PipelineConfig cfg = config_for(64, 32);
  VectorSource frames(synthesize(spec));
  run_pipeline(cfg, frames, out.path());

  const RfLayout layout = build_layout(cfg.layout);
  const std::vector<FeatureSpikeRecord> spikes = read_spike_csv(out / "spikes.csv");
  CHECK(!spikes.empty());

  std::map<std::pair<std::uint32_t, SpikeKind>, std::vector<bool>> spiked;
  for (const FeatureSpikeRecord& r : spikes) {
    auto& v = spiked[{r.frame, r.kind}];
    v.resize(layout.rf_count(), false);
    v[r.rf_id] = true;
  }
  for (std::uint32_t t = 1; t <= 8; ++t) {
    for (SpikeKind kind : {SpikeKind::Oms, SpikeKind::Ld}) {
      char name[48];
      std::snprintf(name, sizeof(name), "spike_maps/%s_%06u.pgm",
                    kind == SpikeKind::Oms ? "oms" : "ld", t);
      const LuminanceFrame map = read_pgm(out.path() / name);
      std::vector<bool> white(layout.rf_count(), false);
      auto it = spiked.find({t, kind});
      if (it != spiked.end()) white = it->second;
      for (std::uint32_t rf = 0; rf < layout.rf_count(); ++rf) {
        for (PixelIndex p : pixels_of(layout, rf, RfRole::Center)) {
          CHECK(map.samples[p] == (white[rf] ? 1.0 : 0.0));
        }
      }
    }
  }
}

TEST_CASE("frames that disagree with the configured sensor are rejected") {
  TempDir out("mismatch");
  PipelineConfig cfg = config_for(16, 8);
  VectorSource frames({frame_of(8, 8, 0.5)});
  CHECK_THROWS_WITH_AS(run_pipeline(cfg, frames, out.path()),
                       doctest::Contains("configured sensor"), DataError);
  // Partial outputs are removed on failure.
  CHECK_FALSE(std::filesystem::exists(out / "events.csv"));
  CHECK_FALSE(std::filesystem::exists(out / "spike_maps"));
}

TEST_CASE("missing inputs are rejected") {
  CHECK_THROWS_AS(resolve_frame_paths("/nonexistent/iris/input"), DataError);
}

TEST_CASE("single-engine runs skip the other engine's outputs") {
  StimulusSpec spec;
  spec.kind = StimulusKind::LoomDisc;
  spec.width = 32;
  spec.height = 32;
  spec.frames = 4;
  TempDir out("oms_only");
  PipelineConfig cfg = config_for(32, 16);
  cfg.engines.ld = false;
  VectorSource frames(synthesize(spec));
  run_pipeline(cfg, frames, out.path());
  CHECK(std::filesystem::exists(out.path() / "spike_maps/oms_000001.pgm"));
  CHECK_FALSE(std::filesystem::exists(out.path() / "spike_maps/ld_000001.pgm"));
  for (const FeatureSpikeRecord& r : read_spike_csv(out / "spikes.csv")) {
    CHECK(r.kind == SpikeKind::Oms);
  }
}

TEST_SUITE_END();
