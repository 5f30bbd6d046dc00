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

#ifndef IRIS_SYNTH_HPP
#define IRIS_SYNTH_HPP

#include <filesystem>

#include "iris/types.hpp"

namespace iris {

/*
 * Synthetic stimulus generator for the four canonical motion classes.
 *
 * GLOBAL_PAN      scrolls a full-contrast binary texture uniformly with
 *                 wraparound. The texture alternates along each scroll
 *                 orbit (random per-orbit polarity from the seed), so
 *                 every pixel changes on every tick: the dense
 *                 background-event case that global-motion suppression
 *                 must reject.
 * DIFFERENTIAL    keeps a random binary background static and scrolls an
 *                 independent binary texture inside one rectangular patch.
 * LOOM_DISC       grows a filled disc of object_level on background_level
 *                 by `growth` pixels of radius per tick.
 * TRANSLATE_DISC  moves a fixed-radius disc laterally by `velocity`
 *                 pixels per tick.
 *
 * All frames are quantized to 8-bit like the PGM on-disk form, so
 * in-memory runs and file-based runs see identical luminance.
 */

enum class StimulusKind : std::uint8_t {
  GlobalPan = 0,
  Differential = 1,
  LoomDisc = 2,
  TranslateDisc = 3,
};

struct StimulusSpec {
  StimulusKind kind = StimulusKind::GlobalPan;
  int width = 64;
  int height = 64;
  int frames = 16;
  int velocity = 1;  // pixels/tick along +x; negative moves left
  int radius = 2;    // initial disc radius
  int growth = 1;    // disc radius growth, pixels/tick
  int disc_x = -1;   // disc center; -1 means sensor center
  int disc_y = -1;
  int patch_x = 24;  // DIFFERENTIAL moving patch
  int patch_y = 24;
  int patch_w = 8;
  int patch_h = 8;
  double object_level = 0.1;
  double background_level = 0.8;
  std::uint64_t seed = 1;

  void validate() const;
};

std::vector<LuminanceFrame> synthesize(const StimulusSpec& spec);

/// Writes the sequence as frame_000000.pgm ... under out_dir.
void write_stimulus(const StimulusSpec& spec, const std::filesystem::path& out_dir);

}  // namespace iris

#endif  // IRIS_SYNTH_HPP
