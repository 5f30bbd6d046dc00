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

#ifndef IRIS_TYPES_HPP
#define IRIS_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iris {

// Configuration / usage problems (bad key, out-of-range value, bad flag).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (files, frame streams, dimensions).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Per-pixel contrast-change channel. Exactly one value per pixel per tick.
enum class Channel : std::uint8_t { None = 0, On = 1, Off = 2 };

enum class SpikeKind : std::uint8_t { Oms = 0, Ld = 1 };

enum class LoomPolarity : std::uint8_t { None = 0, DarkLoom = 1, BrightLoom = 2 };

const char* to_string(Channel c);
const char* to_string(SpikeKind k);
const char* to_string(LoomPolarity p);

/// One grayscale frame, normalized to [0,1], row-major.
struct LuminanceFrame {
  int width = 0;
  int height = 0;
  std::vector<double> samples;

  double at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  bool same_dims(const LuminanceFrame& o) const { return width == o.width && height == o.height; }
};

/// Normalizes an 8-bit grayscale grid: sample = raw / 255.0.
/// Throws DataError when the buffer size does not match width x height.
LuminanceFrame to_luminance(const std::vector<std::uint8_t>& raw, int width, int height);

/// Ternary ON/OFF/NONE map for one frame tick.
struct BipolarEventMap {
  int width = 0;
  int height = 0;
  std::int64_t frame_index = 0;
  std::vector<Channel> channels;

  Channel at(int x, int y) const { return channels[static_cast<std::size_t>(y) * width + x]; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  std::size_t event_count() const;
};

/// One ON/OFF event in address-event form.
struct Event {
  std::uint32_t frame = 0;
  std::uint16_t x = 0;
  std::uint16_t y = 0;
  bool on = false;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Extracts events from a map in (frame, y, x) order.
std::vector<Event> extract_events(const BipolarEventMap& map);

/// Per-receptive-field feature spike.
struct FeatureSpikeRecord {
  std::uint32_t frame = 0;
  std::uint32_t rf_id = 0;
  SpikeKind kind = SpikeKind::Oms;
  LoomPolarity polarity = LoomPolarity::None;
  double v_norm = 0.0;
};

}  // namespace iris

#endif  // IRIS_TYPES_HPP
