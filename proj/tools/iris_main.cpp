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

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "iris/config.hpp"
#include "iris/pipeline.hpp"
#include "iris/synth.hpp"
#include "iris/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // bad flags or bad config
constexpr int kExitData = 2;   // malformed or inconsistent input data
constexpr int kExitVerify = 3;

std::pair<int, int> parse_dims(const std::string& spec) {
  const auto x = spec.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= spec.size()) {
    throw iris::ConfigError("--raw-dims expects WxH, got '" + spec + "'");
  }
  try {
    return {std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1))};
  } catch (const std::exception&) {
    throw iris::ConfigError("--raw-dims expects WxH, got '" + spec + "'");
  }
}

int cmd_run(const std::string& config_path, const std::string& input, const std::string& out_dir,
            const std::string& raw_dims) {
  const iris::PipelineConfig cfg = iris::read_config(config_path);
  std::unique_ptr<iris::FrameSource> source;
  if (!raw_dims.empty()) {
    const auto [w, h] = parse_dims(raw_dims);
    source = iris::make_raw_y8_source(input, w, h);
  } else {
    source = iris::make_pgm_source(iris::resolve_frame_paths(input));
  }
  const iris::RunMetrics m = iris::run_pipeline(cfg, *source, out_dir);
  std::printf("frames=%lld events=%lld oms_spikes=%lld ld_spikes=%lld bandwidth_ratio=%.6f\n",
              static_cast<long long>(m.frames), static_cast<long long>(m.total_events),
              static_cast<long long>(m.oms_spikes), static_cast<long long>(m.ld_spikes),
              m.bandwidth_ratio);
  return kExitOk;
}

int cmd_layout(const std::string& config_path) {
  const iris::PipelineConfig cfg = iris::read_config(config_path);
  const iris::RfLayout layout = iris::build_layout(cfg.layout);
  iris::dump_layout(layout, std::cout);
  return kExitOk;
}

int cmd_verify() {
  const iris::EquivReport report = iris::run_default_verification();
  return iris::print_verification_report(report, std::cout) ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IRIS retina-inspired sensor simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string input;
  std::string out_dir;
  std::string raw_dims;
  auto* run = app.add_subcommand("run", "run the event/feature-spike pipeline on a frame sequence");
  run->add_option("--config", config_path, "pipeline config file")->required();
  run->add_option("--input", input, "PGM directory, file, or pattern; raw file with --raw-dims")
      ->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--raw-dims", raw_dims, "treat input as raw 8-bit frames of WxH");

  iris::StimulusSpec spec;
  std::string kind;
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "generate a synthetic stimulus PGM sequence");
  synth->add_option("--kind", kind, "global_pan | differential | loom_disc | translate_disc")
      ->required();
  synth->add_option("--out", synth_out, "output directory")->required();
  synth->add_option("--width", spec.width, "sensor width");
  synth->add_option("--height", spec.height, "sensor height");
  synth->add_option("--frames", spec.frames, "frame count");
  synth->add_option("--velocity", spec.velocity, "pixels per tick along +x");
  synth->add_option("--radius", spec.radius, "initial disc radius");
  synth->add_option("--growth", spec.growth, "disc radius growth per tick");
  synth->add_option("--disc-x", spec.disc_x, "disc center x (-1 = sensor center)");
  synth->add_option("--disc-y", spec.disc_y, "disc center y (-1 = sensor center)");
  synth->add_option("--patch-x", spec.patch_x, "differential patch origin x");
  synth->add_option("--patch-y", spec.patch_y, "differential patch origin y");
  synth->add_option("--patch-w", spec.patch_w, "differential patch width");
  synth->add_option("--patch-h", spec.patch_h, "differential patch height");
  synth->add_option("--object-level", spec.object_level, "object luminance in [0,1]");
  synth->add_option("--background-level", spec.background_level, "background luminance in [0,1]");
  synth->add_option("--seed", spec.seed, "texture seed");

  auto* verify = app.add_subcommand("verify", "run the digital/analog equivalence scan");
  (void)verify;

  std::string layout_config;
  auto* layout = app.add_subcommand("layout", "dump the receptive-field layout");
  layout->add_option("--config", layout_config, "pipeline config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("run")) {
      return cmd_run(config_path, input, out_dir, raw_dims);
    }
    if (app.got_subcommand("synth")) {
      if (kind == "global_pan") {
        spec.kind = iris::StimulusKind::GlobalPan;
      } else if (kind == "differential") {
        spec.kind = iris::StimulusKind::Differential;
      } else if (kind == "loom_disc") {
        spec.kind = iris::StimulusKind::LoomDisc;
      } else if (kind == "translate_disc") {
        spec.kind = iris::StimulusKind::TranslateDisc;
      } else {
        throw iris::ConfigError("--kind must be one of global_pan, differential, loom_disc, "
                                "translate_disc; got '" + kind + "'");
      }
      iris::write_stimulus(spec, synth_out);
      return kExitOk;
    }
    if (app.got_subcommand("verify")) {
      return cmd_verify();
    }
    if (app.got_subcommand("layout")) {
      return cmd_layout(layout_config);
    }
  } catch (const iris::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
