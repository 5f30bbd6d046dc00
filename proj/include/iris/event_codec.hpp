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

#ifndef IRIS_EVENT_CODEC_HPP
#define IRIS_EVENT_CODEC_HPP

#include <filesystem>
#include <fstream>

#include "iris/types.hpp"

namespace iris {

/*
 * Serialization formats.
 *
 * Event CSV:  header `frame,x,y,polarity`, one row per event, polarity
 *             ON or OFF, rows sorted by (frame, y, x), LF line endings.
 *
 * Spike CSV:  header `frame,rf_id,kind,polarity,v_norm`, kind OMS or LD,
 *             v_norm with 6 decimal places, rows sorted by
 *             (frame, rf_id, kind).
 *
 * AER binary: magic "IRSE", version byte 0x01, then 10 bytes per event,
 *             little-endian: u32 frame, u16 x, u16 y, u8 polarity
 *             (0 = OFF, 1 = ON), u8 reserved = 0. Events ordered
 *             (frame, y, x). Requires coordinates < 65536.
 */

inline constexpr char kAerMagic[4] = {'I', 'R', 'S', 'E'};
inline constexpr std::uint8_t kAerVersion = 0x01;
inline constexpr std::size_t kAerHeaderBytes = 5;
inline constexpr std::size_t kAerRecordBytes = 10;

class EventCsvWriter {
 public:
  explicit EventCsvWriter(const std::filesystem::path& path);
  void append(const Event& e);
  void close();

 private:
  std::ofstream out_;
};

class AerWriter {
 public:
  explicit AerWriter(const std::filesystem::path& path);
  void append(const Event& e);
  void close();

 private:
  std::ofstream out_;
};

class SpikeCsvWriter {
 public:
  explicit SpikeCsvWriter(const std::filesystem::path& path);
  void append(const FeatureSpikeRecord& r);
  void close();

 private:
  std::ofstream out_;
};

void write_event_csv(const std::vector<Event>& events, const std::filesystem::path& path);
void write_aer(const std::vector<Event>& events, const std::filesystem::path& path);
void write_spike_csv(const std::vector<FeatureSpikeRecord>& spikes,
                     const std::filesystem::path& path);

std::vector<Event> read_event_csv(const std::filesystem::path& path);
std::vector<Event> read_aer(const std::filesystem::path& path);
std::vector<FeatureSpikeRecord> read_spike_csv(const std::filesystem::path& path);

}  // namespace iris

#endif  // IRIS_EVENT_CODEC_HPP
