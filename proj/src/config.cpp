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

#include "iris/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace iris {

void PipelineConfig::validate() const {
  frontend.validate();
  layout.validate();
  oms.validate();
  ld.validate();
  if (!engines.oms && !engines.ld) {
    throw ConfigError("engines: at least one of oms, ld must be enabled");
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct Parser {
  PipelineConfig cfg;
  std::string source;
  std::size_t line = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(source + ":" + std::to_string(line) + ": " + what);
  }

  double as_double(const std::string& v) const {
    try {
      std::size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      fail("invalid number '" + v + "'");
    }
  }

  int as_int(const std::string& v) const {
    try {
      std::size_t pos = 0;
      const int i = std::stoi(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return i;
    } catch (const std::exception&) {
      fail("invalid integer '" + v + "'");
    }
  }

  std::uint64_t as_u64(const std::string& v) const {
    try {
      std::size_t pos = 0;
      const unsigned long long u = std::stoull(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return u;
    } catch (const std::exception&) {
      fail("invalid integer '" + v + "'");
    }
  }

  void set(const std::string& key, const std::string& value) {
    PipelineConfig& c = cfg;
    if (key == "sensor.width") {
      c.layout.sensor_width = as_int(value);
    } else if (key == "sensor.height") {
      c.layout.sensor_height = as_int(value);
    } else if (key == "frontend.mode") {
      if (value == "aps") {
        c.frontend.mode = FrontendMode::Aps;
      } else if (value == "dvs") {
        c.frontend.mode = FrontendMode::Dvs;
      } else {
        fail("frontend.mode must be aps or dvs, got '" + value + "'");
      }
    } else if (key == "frontend.theta_aps") {
      c.frontend.theta_aps = as_double(value);
    } else if (key == "frontend.theta_dvs") {
      c.frontend.theta_dvs = as_double(value);
    } else if (key == "frontend.log_floor") {
      c.frontend.log_floor = as_double(value);
    } else if (key == "frontend.frame_period") {
      c.frontend.frame_period = as_int(value);
    } else if (key == "layout.center_w") {
      c.layout.center_w = as_int(value);
    } else if (key == "layout.center_h") {
      c.layout.center_h = as_int(value);
    } else if (key == "layout.surround_stride") {
      c.layout.surround_stride = as_int(value);
    } else if (key == "layout.neighborhood") {
      c.layout.neighborhood = as_int(value);
    } else if (key == "oms.g_center") {
      c.oms.g_center = as_double(value);
    } else if (key == "oms.g_surround") {
      c.oms.g_surround = as_double(value);
    } else if (key == "oms.weighting") {
      if (value == "balanced") {
        c.oms.balanced_weights = true;
      } else if (value == "fixed") {
        c.oms.balanced_weights = false;
      } else {
        fail("oms.weighting must be balanced or fixed, got '" + value + "'");
      }
    } else if (key == "oms.trip_fraction") {
      c.oms.trip_fraction = as_double(value);
    } else if (key == "oms.min_center_activity") {
      c.oms.min_center_activity = as_int(value);
    } else if (key == "oms.idle_value") {
      c.oms.idle_value = as_double(value);
    } else if (key == "ld.g_on") {
      c.ld.g_on = as_double(value);
    } else if (key == "ld.g_off") {
      c.ld.g_off = as_double(value);
    } else if (key == "ld.band_halfwidth") {
      c.ld.band_halfwidth = as_double(value);
    } else if (key == "ld.min_activity") {
      c.ld.min_activity = as_int(value);
    } else if (key == "ld.idle_value") {
      c.ld.idle_value = as_double(value);
    } else if (key == "engines") {
      c.engines.oms = false;
      c.engines.ld = false;
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item == "oms") {
          c.engines.oms = true;
        } else if (item == "ld") {
          c.engines.ld = true;
        } else {
          fail("engines: unknown engine '" + item + "'");
        }
      }
    } else {
      fail("unknown key '" + key + "'");
    }
  }
};

}  // namespace

PipelineConfig parse_config(std::istream& in, const std::string& source_name) {
  Parser parser;
  parser.source = source_name;
  std::string raw;
  while (std::getline(in, raw)) {
    ++parser.line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      parser.fail("expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) parser.fail("empty key");
    if (value.empty()) parser.fail("empty value for key '" + key + "'");
    parser.set(key, value);
  }
  parser.cfg.validate();
  return parser.cfg;
}

PipelineConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path.string() + ": cannot open");
  }
  return parse_config(in, path.string());
}

}  // namespace iris
