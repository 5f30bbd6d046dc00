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

#ifndef IRIS_PGM_HPP
#define IRIS_PGM_HPP

#include <filesystem>
#include <memory>
#include <optional>

#include "iris/layout.hpp"
#include "iris/types.hpp"

namespace iris {

// Only binary PGM ("P5") with maxval 255 is accepted; rejections name the
// file and byte offset.
LuminanceFrame read_pgm(const std::filesystem::path& path);

void write_pgm(const std::filesystem::path& path, const std::uint8_t* data, int width,
               int height);

/// Resolves a directory, a single file, or a pattern with `*` wildcards in
/// its filename part to a lexicographically sorted list of frame files.
std::vector<std::filesystem::path> resolve_frame_paths(const std::string& input);

// Ordered frame stream.
class FrameSource {
 public:
  virtual ~FrameSource() = default;
  virtual std::optional<LuminanceFrame> next() = 0;
};

/// PGM files consumed in the given order; dimension drift mid-sequence is
/// rejected naming the offending file.
std::unique_ptr<FrameSource> make_pgm_source(std::vector<std::filesystem::path> paths);

/// Raw 8-bit luminance blocks of width*height bytes each; a trailing
/// partial frame is rejected naming expected and actual sizes.
std::unique_ptr<FrameSource> make_raw_y8_source(const std::filesystem::path& path, int width,
                                                int height);

/// Writes the tick's spike map: center pixels of spiking rfs at 255,
/// everything else 0.
void render_spike_map(const std::vector<std::uint32_t>& spiking_rfs, const RfLayout& layout,
                      const std::filesystem::path& path);

}  // namespace iris

#endif  // IRIS_PGM_HPP
