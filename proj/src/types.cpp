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

#include "iris/types.hpp"

namespace iris {

const char* to_string(Channel c) {
  switch (c) {
    case Channel::On:
      return "ON";
    case Channel::Off:
      return "OFF";
    default:
      return "NONE";
  }
}

const char* to_string(SpikeKind k) { return k == SpikeKind::Oms ? "OMS" : "LD"; }

const char* to_string(LoomPolarity p) {
  switch (p) {
    case LoomPolarity::DarkLoom:
      return "DARK_LOOM";
    case LoomPolarity::BrightLoom:
      return "BRIGHT_LOOM";
    default:
      return "NONE";
  }
}

LuminanceFrame to_luminance(const std::vector<std::uint8_t>& raw, int width, int height) {
  if (width < 1 || height < 1) {
    throw DataError("to_luminance: frame dimensions must be at least 1x1");
  }
  const std::size_t expected = static_cast<std::size_t>(width) * height;
  if (raw.size() != expected) {
    throw DataError("to_luminance: got " + std::to_string(raw.size()) + " bytes, expected " +
                    std::to_string(expected) + " for " + std::to_string(width) + "x" +
                    std::to_string(height));
  }
  LuminanceFrame frame;
  frame.width = width;
  frame.height = height;
  frame.samples.resize(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    frame.samples[i] = raw[i] / 255.0;
  }
  return frame;
}

std::size_t BipolarEventMap::event_count() const {
  std::size_t n = 0;
  for (Channel c : channels) {
    if (c != Channel::None) ++n;
  }
  return n;
}

std::vector<Event> extract_events(const BipolarEventMap& map) {
  std::vector<Event> events;
  events.reserve(map.event_count());
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      const Channel c = map.at(x, y);
      if (c == Channel::None) continue;
      events.push_back(Event{static_cast<std::uint32_t>(map.frame_index),
                             static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y),
                             c == Channel::On});
    }
  }
  return events;
}

}  // namespace iris
