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

#include "iris/synth.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "iris/pgm.hpp"

namespace iris {

void StimulusSpec::validate() const {
  if (width < 1 || height < 1) {
    throw ConfigError("stimulus: sensor dimensions must be >= 1");
  }
  if (frames < 2) {
    throw ConfigError("stimulus: frames must be >= 2");
  }
  if (!(object_level >= 0.0 && object_level <= 1.0) ||
      !(background_level >= 0.0 && background_level <= 1.0)) {
    throw ConfigError("stimulus: luminance levels must be in [0, 1]");
  }
  if (kind == StimulusKind::Differential) {
    if (patch_w < 1 || patch_h < 1 || patch_x < 0 || patch_y < 0 ||
        patch_x + patch_w > width || patch_y + patch_h > height) {
      throw ConfigError("stimulus: patch must lie inside the sensor");
    }
  }
  if (kind == StimulusKind::LoomDisc || kind == StimulusKind::TranslateDisc) {
    if (radius < 0) throw ConfigError("stimulus: radius must be >= 0");
    if (growth < 0) throw ConfigError("stimulus: growth must be >= 0");
  }
}

namespace {

std::uint8_t quantize(double level) {
  return static_cast<std::uint8_t>(std::lround(level * 255.0));
}

// Frames carry the same values a PGM round trip would produce.
LuminanceFrame frame_from_bytes(const std::vector<std::uint8_t>& bytes, int w, int h) {
  return to_luminance(bytes, w, h);
}

int wrap(int v, int m) {
  const int r = v % m;
  return r < 0 ? r + m : r;
}

// Binary texture that flips at every scroll step: bits alternate along
// each orbit of x -> x+velocity (mod width), polarity per orbit from the
// rng. Odd orbit lengths keep one non-alternating seam per orbit.
std::vector<std::uint8_t> pan_texture_row(int width, int velocity, std::mt19937_64& rng) {
  std::vector<std::uint8_t> row(width, 0);
  const int v = wrap(velocity, width);
  if (v == 0) {
    for (int x = 0; x < width; ++x) row[x] = static_cast<std::uint8_t>(rng() & 1);
    return row;
  }
  const int cycles = std::gcd(width, v);
  for (int start = 0; start < cycles; ++start) {
    std::uint8_t bit = static_cast<std::uint8_t>(rng() & 1);
    int x = start;
    do {
      row[x] = bit;
      bit ^= 1;
      x = wrap(x + v, width);
    } while (x != start);
  }
  return row;
}

std::vector<LuminanceFrame> make_global_pan(const StimulusSpec& s) {
  std::mt19937_64 rng(s.seed);
  std::vector<std::vector<std::uint8_t>> texture(s.height);
  for (int y = 0; y < s.height; ++y) {
    texture[y] = pan_texture_row(s.width, s.velocity, rng);
  }
  const std::uint8_t levels[2] = {quantize(s.background_level), quantize(s.object_level)};

  std::vector<LuminanceFrame> frames;
  frames.reserve(s.frames);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(s.width) * s.height);
  for (int t = 0; t < s.frames; ++t) {
    for (int y = 0; y < s.height; ++y) {
      for (int x = 0; x < s.width; ++x) {
        const int u = wrap(x - t * s.velocity, s.width);
        bytes[static_cast<std::size_t>(y) * s.width + x] = levels[texture[y][u]];
      }
    }
    frames.push_back(frame_from_bytes(bytes, s.width, s.height));
  }
  return frames;
}

std::vector<LuminanceFrame> make_differential(const StimulusSpec& s) {
  std::mt19937_64 rng(s.seed);
  std::vector<std::uint8_t> background(static_cast<std::size_t>(s.width) * s.height);
  for (auto& b : background) b = static_cast<std::uint8_t>(rng() & 1);
  std::vector<std::uint8_t> patch(static_cast<std::size_t>(s.patch_w) * s.patch_h);
  for (auto& b : patch) b = static_cast<std::uint8_t>(rng() & 1);

  const std::uint8_t levels[2] = {quantize(s.background_level), quantize(s.object_level)};

  std::vector<LuminanceFrame> frames;
  frames.reserve(s.frames);
  std::vector<std::uint8_t> bytes(background.size());
  for (int t = 0; t < s.frames; ++t) {
    for (std::size_t i = 0; i < background.size(); ++i) bytes[i] = levels[background[i]];
    // Texture scrolls inside the patch with wraparound; the rest of the
    // scene stays frozen.
    for (int ly = 0; ly < s.patch_h; ++ly) {
      for (int lx = 0; lx < s.patch_w; ++lx) {
        const int u = wrap(lx - t * s.velocity, s.patch_w);
        const std::uint8_t bit = patch[static_cast<std::size_t>(ly) * s.patch_w + u];
        bytes[static_cast<std::size_t>(s.patch_y + ly) * s.width + s.patch_x + lx] = levels[bit];
      }
    }
    frames.push_back(frame_from_bytes(bytes, s.width, s.height));
  }
  return frames;
}

std::vector<LuminanceFrame> make_disc(const StimulusSpec& s, bool looming) {
  const int cx0 = s.disc_x >= 0 ? s.disc_x : s.width / 2;
  const int cy = s.disc_y >= 0 ? s.disc_y : s.height / 2;
  const std::uint8_t obj = quantize(s.object_level);
  const std::uint8_t bg = quantize(s.background_level);

  std::vector<LuminanceFrame> frames;
  frames.reserve(s.frames);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(s.width) * s.height);
  for (int t = 0; t < s.frames; ++t) {
    const int cx = looming ? cx0 : cx0 + t * s.velocity;
    const std::int64_t r = looming ? s.radius + static_cast<std::int64_t>(t) * s.growth
                                   : s.radius;
    const std::int64_t r2 = r * r;
    for (int y = 0; y < s.height; ++y) {
      const std::int64_t dy = y - cy;
      for (int x = 0; x < s.width; ++x) {
        const std::int64_t dx = x - cx;
        bytes[static_cast<std::size_t>(y) * s.width + x] =
            (dx * dx + dy * dy <= r2) ? obj : bg;
      }
    }
    frames.push_back(frame_from_bytes(bytes, s.width, s.height));
  }
  return frames;
}

}  // namespace

std::vector<LuminanceFrame> synthesize(const StimulusSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case StimulusKind::GlobalPan:
      return make_global_pan(spec);
    case StimulusKind::Differential:
      return make_differential(spec);
    case StimulusKind::LoomDisc:
      return make_disc(spec, true);
    case StimulusKind::TranslateDisc:
      return make_disc(spec, false);
  }
  throw ConfigError("stimulus: unknown kind");
}

void write_stimulus(const StimulusSpec& spec, const std::filesystem::path& out_dir) {
  const std::vector<LuminanceFrame> frames = synthesize(spec);
  std::filesystem::create_directories(out_dir);
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const LuminanceFrame& f = frames[i];
    bytes.resize(f.pixel_count());
    for (std::size_t p = 0; p < f.pixel_count(); ++p) {
      bytes[p] = static_cast<std::uint8_t>(std::lround(f.samples[p] * 255.0));
    }
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%06zu.pgm", i);
    write_pgm(out_dir / name, bytes.data(), f.width, f.height);
  }
}

}  // namespace iris
