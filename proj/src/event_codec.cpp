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

#include "iris/event_codec.hpp"

#include <array>
#include <cinttypes>
#include <cstdio>
#include <cstring>

namespace iris {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) {
    throw DataError(path.string() + ": cannot open for writing");
  }
  return out;
}

[[noreturn]] void bad_row(const fs::path& path, std::size_t line, const std::string& what) {
  throw DataError(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::int64_t parse_int_field(const std::string& s, const fs::path& path, std::size_t line) {
  try {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    bad_row(path, line, "invalid integer field '" + s + "'");
  }
}

constexpr char kEventHeader[] = "frame,x,y,polarity";
constexpr char kSpikeHeader[] = "frame,rf_id,kind,polarity,v_norm";

}  // namespace

EventCsvWriter::EventCsvWriter(const fs::path& path)
    : out_(open_out(path, std::ios::binary)) {
  out_ << kEventHeader << "\n";
}

void EventCsvWriter::append(const Event& e) {
  out_ << e.frame << ',' << e.x << ',' << e.y << ',' << (e.on ? "ON" : "OFF") << "\n";
}

void EventCsvWriter::close() {
  out_.flush();
  if (!out_) throw DataError("event csv: write failed");
  out_.close();
}

AerWriter::AerWriter(const fs::path& path) : out_(open_out(path, std::ios::binary)) {
  out_.write(kAerMagic, sizeof(kAerMagic));
  out_.put(static_cast<char>(kAerVersion));
}

void AerWriter::append(const Event& e) {
  std::array<std::uint8_t, kAerRecordBytes> rec{};
  rec[0] = static_cast<std::uint8_t>(e.frame & 0xff);
  rec[1] = static_cast<std::uint8_t>((e.frame >> 8) & 0xff);
  rec[2] = static_cast<std::uint8_t>((e.frame >> 16) & 0xff);
  rec[3] = static_cast<std::uint8_t>((e.frame >> 24) & 0xff);
  rec[4] = static_cast<std::uint8_t>(e.x & 0xff);
  rec[5] = static_cast<std::uint8_t>(e.x >> 8);
  rec[6] = static_cast<std::uint8_t>(e.y & 0xff);
  rec[7] = static_cast<std::uint8_t>(e.y >> 8);
  rec[8] = e.on ? 1 : 0;
  rec[9] = 0;
  out_.write(reinterpret_cast<const char*>(rec.data()), rec.size());
}

void AerWriter::close() {
  out_.flush();
  if (!out_) throw DataError("aer: write failed");
  out_.close();
}

SpikeCsvWriter::SpikeCsvWriter(const fs::path& path)
    : out_(open_out(path, std::ios::binary)) {
  out_ << kSpikeHeader << "\n";
}

void SpikeCsvWriter::append(const FeatureSpikeRecord& r) {
  char v[32];
  std::snprintf(v, sizeof(v), "%.6f", r.v_norm);
  out_ << r.frame << ',' << r.rf_id << ',' << to_string(r.kind) << ',' << to_string(r.polarity)
       << ',' << v << "\n";
}

void SpikeCsvWriter::close() {
  out_.flush();
  if (!out_) throw DataError("spike csv: write failed");
  out_.close();
}

void write_event_csv(const std::vector<Event>& events, const fs::path& path) {
  EventCsvWriter w(path);
  for (const Event& e : events) w.append(e);
  w.close();
}

void write_aer(const std::vector<Event>& events, const fs::path& path) {
  AerWriter w(path);
  for (const Event& e : events) w.append(e);
  w.close();
}

void write_spike_csv(const std::vector<FeatureSpikeRecord>& spikes, const fs::path& path) {
  SpikeCsvWriter w(path);
  for (const FeatureSpikeRecord& r : spikes) w.append(r);
  w.close();
}

std::vector<Event> read_event_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open");
  std::string line;
  if (!std::getline(in, line) || line != kEventHeader) {
    bad_row(path, 1, "missing or malformed header (expected '" + std::string(kEventHeader) + "')");
  }
  std::vector<Event> events;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv_row(line);
    if (fields.size() != 4) bad_row(path, lineno, "expected 4 fields");
    Event e;
    e.frame = static_cast<std::uint32_t>(parse_int_field(fields[0], path, lineno));
    e.x = static_cast<std::uint16_t>(parse_int_field(fields[1], path, lineno));
    e.y = static_cast<std::uint16_t>(parse_int_field(fields[2], path, lineno));
    if (fields[3] == "ON") {
      e.on = true;
    } else if (fields[3] == "OFF") {
      e.on = false;
    } else {
      bad_row(path, lineno, "invalid polarity '" + fields[3] + "'");
    }
    events.push_back(e);
  }
  return events;
}

std::vector<Event> read_aer(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open");
  std::array<char, kAerHeaderBytes> header{};
  in.read(header.data(), header.size());
  if (static_cast<std::size_t>(in.gcount()) != header.size() ||
      std::memcmp(header.data(), kAerMagic, sizeof(kAerMagic)) != 0) {
    throw DataError(path.string() + ": missing IRSE magic");
  }
  if (static_cast<std::uint8_t>(header[4]) != kAerVersion) {
    throw DataError(path.string() + ": unsupported version " +
                    std::to_string(static_cast<int>(header[4])));
  }
  const std::uintmax_t payload = fs::file_size(path) - kAerHeaderBytes;
  if (payload % kAerRecordBytes != 0) {
    throw DataError(path.string() + ": truncated record (payload " + std::to_string(payload) +
                    " bytes)");
  }
  std::vector<Event> events;
  events.reserve(payload / kAerRecordBytes);
  std::array<std::uint8_t, kAerRecordBytes> rec{};
  while (in.read(reinterpret_cast<char*>(rec.data()), rec.size())) {
    Event e;
    e.frame = static_cast<std::uint32_t>(rec[0]) | (static_cast<std::uint32_t>(rec[1]) << 8) |
              (static_cast<std::uint32_t>(rec[2]) << 16) |
              (static_cast<std::uint32_t>(rec[3]) << 24);
    e.x = static_cast<std::uint16_t>(rec[4] | (rec[5] << 8));
    e.y = static_cast<std::uint16_t>(rec[6] | (rec[7] << 8));
    if (rec[8] > 1) {
      throw DataError(path.string() + ": invalid polarity byte " + std::to_string(rec[8]));
    }
    e.on = rec[8] == 1;
    events.push_back(e);
  }
  return events;
}

std::vector<FeatureSpikeRecord> read_spike_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open");
  std::string line;
  if (!std::getline(in, line) || line != kSpikeHeader) {
    bad_row(path, 1, "missing or malformed header");
  }
  std::vector<FeatureSpikeRecord> spikes;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv_row(line);
    if (fields.size() != 5) bad_row(path, lineno, "expected 5 fields");
    FeatureSpikeRecord r;
    r.frame = static_cast<std::uint32_t>(parse_int_field(fields[0], path, lineno));
    r.rf_id = static_cast<std::uint32_t>(parse_int_field(fields[1], path, lineno));
    if (fields[2] == "OMS") {
      r.kind = SpikeKind::Oms;
    } else if (fields[2] == "LD") {
      r.kind = SpikeKind::Ld;
    } else {
      bad_row(path, lineno, "invalid kind '" + fields[2] + "'");
    }
    if (fields[3] == "NONE") {
      r.polarity = LoomPolarity::None;
    } else if (fields[3] == "DARK_LOOM") {
      r.polarity = LoomPolarity::DarkLoom;
    } else if (fields[3] == "BRIGHT_LOOM") {
      r.polarity = LoomPolarity::BrightLoom;
    } else {
      bad_row(path, lineno, "invalid polarity '" + fields[3] + "'");
    }
    try {
      r.v_norm = std::stod(fields[4]);
    } catch (const std::exception&) {
      bad_row(path, lineno, "invalid v_norm '" + fields[4] + "'");
    }
    spikes.push_back(r);
  }
  return spikes;
}

}  // namespace iris
