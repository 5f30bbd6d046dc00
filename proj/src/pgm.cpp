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

#include "iris/pgm.hpp"

#include <algorithm>
#include <fstream>

namespace iris {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void reject(const fs::path& path, std::int64_t offset, const std::string& what) {
  throw DataError(path.string() + " (byte " + std::to_string(offset) + "): " + what);
}

// PNM token scanner: skips whitespace and `#` comment lines.
std::string next_token(std::istream& in, const fs::path& path) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  if (c == EOF) reject(path, static_cast<std::int64_t>(in.tellg()), "unexpected end of header");
  std::string token;
  while (c != EOF && !std::isspace(c)) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  return token;
}

int parse_header_int(std::istream& in, const fs::path& path, const char* field) {
  const std::int64_t offset = static_cast<std::int64_t>(in.tellg());
  const std::string token = next_token(in, path);
  try {
    std::size_t pos = 0;
    const int value = std::stoi(token, &pos);
    if (pos != token.size() || value < 0) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    reject(path, offset, std::string("invalid ") + field + " '" + token + "'");
  }
}

}  // namespace

LuminanceFrame read_pgm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError(path.string() + ": cannot open");
  }
  const std::string magic = next_token(in, path);
  if (magic != "P5") {
    reject(path, 0, "unsupported magic '" + magic + "' (only binary P5 is accepted)");
  }
  const int width = parse_header_int(in, path, "width");
  const int height = parse_header_int(in, path, "height");
  const std::int64_t maxval_offset = static_cast<std::int64_t>(in.tellg());
  const int maxval = parse_header_int(in, path, "maxval");
  if (maxval != 255) {
    reject(path, maxval_offset, "maxval " + std::to_string(maxval) + " (only 255 is accepted)");
  }
  if (width < 1 || height < 1) {
    reject(path, 0, "degenerate dimensions");
  }
  // next_token consumed exactly one whitespace byte after the maxval.
  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> raw(count);
  const std::int64_t data_offset = static_cast<std::int64_t>(in.tellg());
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(in.gcount()) != count) {
    reject(path, data_offset + in.gcount(),
           "truncated raster (expected " + std::to_string(count) + " bytes)");
  }
  return to_luminance(raw, width, height);
}

void write_pgm(const fs::path& path, const std::uint8_t* data, int width, int height) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError(path.string() + ": cannot open for writing");
  }
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(data),
            static_cast<std::streamsize>(static_cast<std::size_t>(width) * height));
  if (!out) {
    throw DataError(path.string() + ": write failed");
  }
}

namespace {

bool wildcard_match(const std::string& pattern, const std::string& name) {
  // Iterative '*' matcher; '?' is not supported.
  std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace

std::vector<fs::path> resolve_frame_paths(const std::string& input) {
  std::vector<fs::path> paths;
  const fs::path p(input);
  if (input.find('*') != std::string::npos) {
    const fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
    const std::string pattern = p.filename().string();
    if (!fs::is_directory(dir)) {
      throw DataError(dir.string() + ": not a directory");
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && wildcard_match(pattern, entry.path().filename().string())) {
        paths.push_back(entry.path());
      }
    }
  } else if (fs::is_directory(p)) {
    for (const auto& entry : fs::directory_iterator(p)) {
      if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
        paths.push_back(entry.path());
      }
    }
  } else if (fs::is_regular_file(p)) {
    paths.push_back(p);
  } else {
    throw DataError(input + ": no such file or directory");
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

namespace {

class PgmSequenceSource final : public FrameSource {
 public:
  explicit PgmSequenceSource(std::vector<fs::path> paths) : paths_(std::move(paths)) {}

  std::optional<LuminanceFrame> next() override {
    if (index_ >= paths_.size()) return std::nullopt;
    LuminanceFrame frame = read_pgm(paths_[index_]);
    if (index_ == 0) {
      width_ = frame.width;
      height_ = frame.height;
    } else if (frame.width != width_ || frame.height != height_) {
      throw DataError(paths_[index_].string() + ": dimension drift mid-sequence (" +
                      std::to_string(frame.width) + "x" + std::to_string(frame.height) +
                      " after " + std::to_string(width_) + "x" + std::to_string(height_) + ")");
    }
    ++index_;
    return frame;
  }

 private:
  std::vector<fs::path> paths_;
  std::size_t index_ = 0;
  int width_ = 0;
  int height_ = 0;
};

class RawY8Source final : public FrameSource {
 public:
  RawY8Source(const fs::path& path, int width, int height)
      : path_(path), in_(path, std::ios::binary), width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw DataError("raw input requires positive dimensions");
    }
    if (!in_) {
      throw DataError(path.string() + ": cannot open");
    }
    const std::uintmax_t size = fs::file_size(path);
    const std::uintmax_t block = static_cast<std::uintmax_t>(width) * height;
    if (size % block != 0) {
      throw DataError(path.string() + ": size " + std::to_string(size) +
                      " is not a multiple of the frame size " + std::to_string(block) +
                      " (trailing partial frame)");
    }
    frames_ = size / block;
  }

  std::optional<LuminanceFrame> next() override {
    if (index_ >= frames_) return std::nullopt;
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(width_) * height_);
    in_.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in_.gcount()) != raw.size()) {
      throw DataError(path_.string() + ": short read at frame " + std::to_string(index_));
    }
    ++index_;
    return to_luminance(raw, width_, height_);
  }

 private:
  fs::path path_;
  std::ifstream in_;
  int width_;
  int height_;
  std::uintmax_t frames_ = 0;
  std::uintmax_t index_ = 0;
};

}  // namespace

std::unique_ptr<FrameSource> make_pgm_source(std::vector<fs::path> paths) {
  return std::make_unique<PgmSequenceSource>(std::move(paths));
}

std::unique_ptr<FrameSource> make_raw_y8_source(const fs::path& path, int width, int height) {
  return std::make_unique<RawY8Source>(path, width, height);
}

void render_spike_map(const std::vector<std::uint32_t>& spiking_rfs, const RfLayout& layout,
                      const fs::path& path) {
  const int w = layout.cfg.sensor_width;
  const int h = layout.cfg.sensor_height;
  std::vector<std::uint8_t> image(static_cast<std::size_t>(w) * h, 0);
  for (std::uint32_t rf_id : spiking_rfs) {
    if (rf_id >= layout.rfs.size()) {
      throw DataError("render_spike_map: unknown rf_id " + std::to_string(rf_id));
    }
    const ReceptiveField& rf = layout.rfs[rf_id];
    for (int y = rf.cy0; y < rf.cy1; ++y) {
      std::fill(image.begin() + static_cast<std::size_t>(y) * w + rf.cx0,
                image.begin() + static_cast<std::size_t>(y) * w + rf.cx1,
                static_cast<std::uint8_t>(255));
    }
  }
  write_pgm(path, image.data(), w, h);
}

}  // namespace iris
