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

#ifndef IRIS_CONFIG_HPP
#define IRIS_CONFIG_HPP

#include <filesystem>
#include <iosfwd>

#include "iris/frontend.hpp"
#include "iris/layout.hpp"
#include "iris/ld.hpp"
#include "iris/oms.hpp"

namespace iris {

struct EngineSelection {
  bool oms = true;
  bool ld = true;
};

struct PipelineConfig {
  FrontendConfig frontend;
  LayoutConfig layout;
  OmsConfig oms;
  LdConfig ld;
  EngineSelection engines;

  void validate() const;
};

/*
 * Config files are line-oriented `key = value` text, UTF-8, with `#`
 * comments. Unknown keys are rejected so typos cannot silently fall back
 * to defaults; missing keys take the documented defaults. See the README
 * for the key table.
 */
PipelineConfig parse_config(std::istream& in, const std::string& source_name);
PipelineConfig read_config(const std::filesystem::path& path);

}  // namespace iris

#endif  // IRIS_CONFIG_HPP
