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

#include <doctest.h>
#include <fstream>

#include "iris/event_codec.hpp"
#include "iris/pgm.hpp"
#include "support.hpp"

using namespace iris;
using namespace iris::testing;

namespace {

void write_bytes(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("read_pgm decodes a hand-built P5 file") {
  TempDir tmp("pgm");
  const std::string bytes = std::string("P5\n2 2\n255\n") + '\x00' + '\x80' + '\xff' + '\x40';
  write_bytes(tmp / "a.pgm", bytes);
  const LuminanceFrame f = read_pgm(tmp / "a.pgm");
  CHECK(f.width == 2);
  CHECK(f.height == 2);
  CHECK(f.samples[0] == 0.0);
  CHECK(f.samples[1] == 128.0 / 255.0);
  CHECK(f.samples[2] == 1.0);
  CHECK(f.samples[3] == 64.0 / 255.0);
}

TEST_CASE("read_pgm accepts comments and arbitrary header whitespace") {
  TempDir tmp("pgm");
  write_bytes(tmp / "c.pgm", std::string("P5 # magic\n# a comment line\n 2\t1 \n255 ") + "ab");
  const LuminanceFrame f = read_pgm(tmp / "c.pgm");
  CHECK(f.width == 2);
  CHECK(f.height == 1);
  CHECK(f.samples[0] == doctest::Approx(97.0 / 255.0));
}

TEST_CASE("read_pgm rejections name the file and offset") {
  TempDir tmp("pgm");
  write_bytes(tmp / "ascii.pgm", "P2\n2 2\n255\n0 1 2 3\n");
  CHECK_THROWS_WITH_AS(read_pgm(tmp / "ascii.pgm"),
                       doctest::Contains("unsupported magic 'P2'"), DataError);

  write_bytes(tmp / "depth.pgm", std::string("P5\n2 1\n65535\n") + "abcd");
  CHECK_THROWS_WITH_AS(read_pgm(tmp / "depth.pgm"), doctest::Contains("maxval 65535"),
                       DataError);

  write_bytes(tmp / "short.pgm", std::string("P5\n4 4\n255\n") + "abc");
  CHECK_THROWS_WITH_AS(read_pgm(tmp / "short.pgm"), doctest::Contains("truncated raster"),
                       DataError);

  CHECK_THROWS_AS(read_pgm(tmp / "missing.pgm"), DataError);
}

TEST_CASE("pgm write/read round trip") {
  TempDir tmp("pgm");
  const std::vector<std::uint8_t> data = {1, 2, 3, 4, 5, 250};
  write_pgm(tmp / "w.pgm", data.data(), 3, 2);
  const LuminanceFrame f = read_pgm(tmp / "w.pgm");
  CHECK(f.width == 3);
  CHECK(f.height == 2);
  for (std::size_t i = 0; i < data.size(); ++i) {
    CHECK(f.samples[i] == data[i] / 255.0);
  }
}

TEST_CASE("pgm sequences keep lexicographic order and reject dimension drift") {
  TempDir tmp("seq");
  const std::vector<std::uint8_t> a = {10, 20, 30, 40};
  const std::vector<std::uint8_t> b = {50, 60, 70, 80};
  write_pgm(tmp / "f_001.pgm", a.data(), 2, 2);
  write_pgm(tmp / "f_000.pgm", b.data(), 2, 2);

  auto paths = resolve_frame_paths(tmp.path().string());
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].filename() == "f_000.pgm");

  auto source = make_pgm_source(paths);
  CHECK(source->next()->samples[0] == 50.0 / 255.0);
  CHECK(source->next()->samples[0] == 10.0 / 255.0);
  CHECK_FALSE(source->next().has_value());

  // Empty directory: empty stream.
  TempDir empty("seq_empty");
  CHECK(resolve_frame_paths(empty.path().string()).empty());

  // Drift.
  const std::vector<std::uint8_t> c = {1, 2};
  write_pgm(tmp / "f_002.pgm", c.data(), 2, 1);
  auto drifting = make_pgm_source(resolve_frame_paths(tmp.path().string()));
  drifting->next();
  drifting->next();
  CHECK_THROWS_WITH_AS(drifting->next(), doctest::Contains("dimension drift"), DataError);
}

TEST_CASE("wildcard patterns filter the frame list") {
  TempDir tmp("glob");
  const std::vector<std::uint8_t> px = {7};
  write_pgm(tmp / "run_a_0.pgm", px.data(), 1, 1);
  write_pgm(tmp / "run_b_0.pgm", px.data(), 1, 1);
  write_pgm(tmp / "other.pgm", px.data(), 1, 1);
  const auto paths = resolve_frame_paths((tmp / "run_*.pgm").string());
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].filename() == "run_a_0.pgm");
}

TEST_CASE("raw y8 source blocks frames and rejects partial tails") {
  TempDir tmp("raw");
  write_bytes(tmp / "ok.y8", std::string(2 * 3 * 3, 'x'));
  auto source = make_raw_y8_source(tmp / "ok.y8", 2, 3);
  int frames = 0;
  while (source->next()) ++frames;
  CHECK(frames == 3);

  write_bytes(tmp / "one.y8", std::string(6, 'y'));
  auto single = make_raw_y8_source(tmp / "one.y8", 2, 3);
  CHECK(single->next().has_value());
  CHECK_FALSE(single->next().has_value());

  write_bytes(tmp / "bad.y8", std::string(6 * 3 + 1, 'z'));
  CHECK_THROWS_WITH_AS(make_raw_y8_source(tmp / "bad.y8", 2, 3),
                       doctest::Contains("not a multiple"), DataError);
}

TEST_CASE("event csv golden rows") {
  TempDir tmp("csv");
  write_event_csv({}, tmp / "empty.csv");
  CHECK(read_bytes(tmp / "empty.csv") == "frame,x,y,polarity\n");

  write_event_csv({Event{7, 3, 1, true}}, tmp / "one.csv");
  CHECK(read_bytes(tmp / "one.csv") == "frame,x,y,polarity\n7,3,1,ON\n");
}

TEST_CASE("spike csv prints v_norm with six decimals") {
  TempDir tmp("csv");
  write_spike_csv({FeatureSpikeRecord{2, 5, SpikeKind::Oms, LoomPolarity::None, 2.0 / 3.0},
                   FeatureSpikeRecord{2, 6, SpikeKind::Ld, LoomPolarity::DarkLoom, 0.0}},
                  tmp / "s.csv");
  CHECK(read_bytes(tmp / "s.csv") ==
        "frame,rf_id,kind,polarity,v_norm\n2,5,OMS,NONE,0.666667\n2,6,LD,DARK_LOOM,0.000000\n");
}

TEST_CASE("aer layout is byte-exact") {
  TempDir tmp("aer");
  write_aer({}, tmp / "empty.aer");
  CHECK(read_bytes(tmp / "empty.aer") == std::string("IRSE\x01", 5));

  write_aer({Event{0x01020304, 0x1122, 0x3344, true}}, tmp / "one.aer");
  const std::string bytes = read_bytes(tmp / "one.aer");
  REQUIRE(bytes.size() == 15);
  const std::string expected = std::string("IRSE\x01", 5) + '\x04' + '\x03' + '\x02' + '\x01' +
                               '\x22' + '\x11' + '\x44' + '\x33' + '\x01' + '\x00';
  CHECK(bytes == expected);
}

TEST_CASE("aer reader validates magic, version, and record boundaries") {
  TempDir tmp("aer");
  write_bytes(tmp / "bad_magic.aer", "XXXX\x01");
  CHECK_THROWS_WITH_AS(read_aer(tmp / "bad_magic.aer"), doctest::Contains("IRSE"), DataError);

  write_bytes(tmp / "bad_version.aer", "IRSE\x02");
  CHECK_THROWS_WITH_AS(read_aer(tmp / "bad_version.aer"), doctest::Contains("version"),
                       DataError);

  write_bytes(tmp / "truncated.aer", std::string("IRSE\x01", 5) + "abc");
  CHECK_THROWS_WITH_AS(read_aer(tmp / "truncated.aer"), doctest::Contains("truncated"),
                       DataError);
}

TEST_CASE("codec round trips reproduce the stream and the bytes") {
  TempDir tmp("roundtrip");
  const std::vector<Event> events = random_events(5000, 64, 48, 2024);

  write_aer(events, tmp / "a.aer");
  const std::vector<Event> from_aer = read_aer(tmp / "a.aer");
  CHECK(from_aer == events);
  write_aer(from_aer, tmp / "b.aer");
  CHECK(read_bytes(tmp / "a.aer") == read_bytes(tmp / "b.aer"));

  write_event_csv(events, tmp / "a.csv");
  const std::vector<Event> from_csv = read_event_csv(tmp / "a.csv");
  CHECK(from_csv == events);
  write_event_csv(from_csv, tmp / "b.csv");
  CHECK(read_bytes(tmp / "a.csv") == read_bytes(tmp / "b.csv"));
}

TEST_CASE("spike csv round trip") {
  TempDir tmp("spikes");
  std::vector<FeatureSpikeRecord> spikes;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    FeatureSpikeRecord r;
    r.frame = static_cast<std::uint32_t>(i / 7 + 1);
    r.rf_id = static_cast<std::uint32_t>(rng() % 64);
    r.kind = (rng() & 1) ? SpikeKind::Oms : SpikeKind::Ld;
    r.polarity = r.kind == SpikeKind::Oms
                     ? LoomPolarity::None
                     : ((rng() & 1) ? LoomPolarity::DarkLoom : LoomPolarity::BrightLoom);
    r.v_norm = std::floor((rng() % 1000000) + 0.0) / 1e6;
    spikes.push_back(r);
  }
  write_spike_csv(spikes, tmp / "s.csv");
  const auto parsed = read_spike_csv(tmp / "s.csv");
  REQUIRE(parsed.size() == spikes.size());
  for (std::size_t i = 0; i < spikes.size(); ++i) {
    CHECK(parsed[i].frame == spikes[i].frame);
    CHECK(parsed[i].rf_id == spikes[i].rf_id);
    CHECK(parsed[i].kind == spikes[i].kind);
    CHECK(parsed[i].polarity == spikes[i].polarity);
    CHECK(parsed[i].v_norm == doctest::Approx(spikes[i].v_norm).epsilon(1e-9));
  }
}

TEST_CASE("render_spike_map whitens exactly the spiking centers") {
  TempDir tmp("render");
  LayoutConfig cfg;
  cfg.sensor_width = 6;
  cfg.sensor_height = 6;
  cfg.center_w = 3;
  cfg.center_h = 3;
  const RfLayout layout = build_layout(cfg);

  render_spike_map({}, layout, tmp / "none.pgm");
  const LuminanceFrame black = read_pgm(tmp / "none.pgm");
  for (double s : black.samples) CHECK(s == 0.0);

  render_spike_map({1}, layout, tmp / "one.pgm");
  const LuminanceFrame one = read_pgm(tmp / "one.pgm");
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 6; ++x) {
      const bool in_rf1 = x >= 3 && y < 3;
      CHECK(one.at(x, y) == (in_rf1 ? 1.0 : 0.0));
    }
  }

  render_spike_map({0, 1, 2, 3}, layout, tmp / "all.pgm");
  const LuminanceFrame white = read_pgm(tmp / "all.pgm");
  for (double s : white.samples) CHECK(s == 1.0);
}

TEST_SUITE_END();
