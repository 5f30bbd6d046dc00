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

// Compares the OpenMP kernels against the serial reference implementations
// and reports per-kernel throughput. Usage: iris_bench [width height reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iris/frontend.hpp"
#include "iris/ld.hpp"
#include "iris/oms.hpp"
#include "iris/reference.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

iris::LuminanceFrame random_frame(int w, int h, std::mt19937_64& rng) {
  iris::LuminanceFrame f;
  f.width = w;
  f.height = h;
  f.samples.resize(f.pixel_count());
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (double& s : f.samples) s = dist(rng);
  return f;
}

template <typename F>
double time_reps(int reps, F&& fn) {
  fn();  // warmup
  const auto start = Clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return ms_since(start) / reps;
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-10s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "outputs match" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int width = 1024;
  int height = 1024;
  int reps = 20;
  if (argc > 1) width = std::atoi(argv[1]);
  if (argc > 2) height = std::atoi(argv[2]);
  if (argc > 3) reps = std::atoi(argv[3]);

#ifdef _OPENMP
  std::printf("%d x %d, %d reps, %d OpenMP threads\n", width, height, reps,
              omp_get_max_threads());
#else
  std::printf("%d x %d, %d reps, OpenMP disabled\n", width, height, reps);
#endif

  std::mt19937_64 rng(12345);
  const iris::LuminanceFrame prev = random_frame(width, height, rng);
  const iris::LuminanceFrame cur = random_frame(width, height, rng);

  iris::FrontendConfig fcfg;
  iris::BipolarEventMap par_map, ser_map;
  const double aps_par = time_reps(reps, [&] { par_map = iris::aps_step(prev, cur, fcfg, 1); });
  const double aps_ser =
      time_reps(reps, [&] { ser_map = iris::serial::aps_step(prev, cur, fcfg, 1); });
  report("aps_step", aps_ser, aps_par, par_map.channels == ser_map.channels);

  iris::DvsState par_state = iris::dvs_reset(prev, fcfg);
  iris::DvsState ser_state = par_state;
  iris::BipolarEventMap par_dvs, ser_dvs;
  // State snapshots keep every rep identical.
  const double dvs_par = time_reps(reps, [&] {
    iris::DvsState s = par_state;
    par_dvs = iris::dvs_step(s, cur, fcfg, 1);
  });
  const double dvs_ser = time_reps(reps, [&] {
    iris::DvsState s = ser_state;
    ser_dvs = iris::serial::dvs_step(s, cur, fcfg, 1);
  });
  report("dvs_step", dvs_ser, dvs_par, par_dvs.channels == ser_dvs.channels);

  iris::LayoutConfig lcfg;
  lcfg.sensor_width = width;
  lcfg.sensor_height = height;
  lcfg.center_w = 8;
  lcfg.center_h = 8;
  const iris::RfLayout layout = iris::build_layout(lcfg);

  iris::OmsConfig ocfg;
  std::vector<iris::OmsResult> par_oms, ser_oms;
  const double oms_par = time_reps(reps, [&] { par_oms = iris::oms_step(par_map, layout, ocfg); });
  const double oms_ser =
      time_reps(reps, [&] { ser_oms = iris::serial::oms_step(par_map, layout, ocfg); });
  bool oms_equal = par_oms.size() == ser_oms.size();
  for (std::size_t i = 0; oms_equal && i < par_oms.size(); ++i) {
    oms_equal = par_oms[i].c_on == ser_oms[i].c_on && par_oms[i].s_on == ser_oms[i].s_on &&
                par_oms[i].v_norm == ser_oms[i].v_norm && par_oms[i].spike == ser_oms[i].spike;
  }
  report("oms_step", oms_ser, oms_par, oms_equal);

  iris::LdConfig dcfg;
  std::vector<iris::LdResult> par_ld, ser_ld;
  const double ld_par = time_reps(reps, [&] { par_ld = iris::ld_step(par_map, layout, dcfg); });
  const double ld_ser =
      time_reps(reps, [&] { ser_ld = iris::serial::ld_step(par_map, layout, dcfg); });
  bool ld_equal = par_ld.size() == ser_ld.size();
  for (std::size_t i = 0; ld_equal && i < par_ld.size(); ++i) {
    ld_equal = par_ld[i].n_on == ser_ld[i].n_on && par_ld[i].n_off == ser_ld[i].n_off &&
               par_ld[i].v_norm == ser_ld[i].v_norm && par_ld[i].spike == ser_ld[i].spike &&
               par_ld[i].polarity == ser_ld[i].polarity;
  }
  report("ld_step", ld_ser, ld_par, ld_equal);

  return 0;
}
