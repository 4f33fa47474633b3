// Copyright 2026 The sdrcalc Authors
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

// Compares the serial reference implementations of the two scan kernels
// (certificate grid and raster rendering) against their concurrent
// variants, reporting wall time and checking the results stay identical.

#include <chrono>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sdrcalc/feas.hpp"
#include "sdrcalc/raster.hpp"
#include "sdrcalc/sdrep.hpp"
#include "sdrcalc/symmat.hpp"

namespace {

using sdrcalc::Exec;
using sdrcalc::SDRep;
using sdrcalc::SymMat;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

SDRep hyperbola() {
  SDRep rep;
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  rep.A = SymMat(a);
  rep.B = {SymMat::Diagonal({1.0, 0.0}), SymMat::Diagonal({0.0, 1.0})};
  rep.block_dims = {2};
  return rep;
}

SDRep halfline_ge_one() {
  SDRep rep;
  rep.A = SymMat::Diagonal({-1.0});
  rep.B = {SymMat::Diagonal({1.0})};
  return rep;
}

void report(const char* name, double serial_s, double parallel_s, bool same) {
  std::cout << std::left << std::setw(26) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(9) << serial_s << "s"
            << std::setw(9) << parallel_s << "s   speedup "
            << std::setprecision(2) << (serial_s / parallel_s) << "x   results "
            << (same ? "identical" : "DIFFER") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << "kernel                       serial  parallel\n";
  bool all_same = true;

  {
    const SDRep cone = sdrcalc::cone_hull(hyperbola());
    const Eigen::Vector2d x(1.0, 1.0);

    auto t0 = std::chrono::steady_clock::now();
    const sdrcalc::GridResult serial =
        sdrcalc::grid_feasibility(cone, x, 10.0, 301, Exec::kSerial);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const sdrcalc::GridResult parallel =
        sdrcalc::grid_feasibility(cone, x, 10.0, 301, Exec::kParallel);
    const double tp = seconds_since(t0);

    const bool same = serial.feasible == parallel.feasible &&
                      serial.best_margin == parallel.best_margin;
    all_same = all_same && same;
    report("grid scan 301x301", ts, tp, same);
  }

  {
    const SDRep hyp = hyperbola();
    const sdrcalc::RasterWindow window{0.0, 3.0, 0.0, 3.0};

    auto t0 = std::chrono::steady_clock::now();
    const sdrcalc::RasterImage serial = sdrcalc::render_membership(
        hyp, window, 256, 1e-6, 1e6, {}, 0, Exec::kSerial);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const sdrcalc::RasterImage parallel = sdrcalc::render_membership(
        hyp, window, 256, 1e-6, 1e6, {}, 0, Exec::kParallel);
    const double tp = seconds_since(t0);

    const bool same = serial.pixels == parallel.pixels;
    all_same = all_same && same;
    report("raster 256x256 (exact)", ts, tp, same);
  }

  {
    const SDRep hom = sdrcalc::homogenize(halfline_ge_one());
    // One lifted variable per pixel drives the full search oracle.
    const sdrcalc::RasterWindow window{-1.0, 3.0, -1.0, 3.0};

    auto t0 = std::chrono::steady_clock::now();
    const sdrcalc::RasterImage serial = sdrcalc::render_membership(
        hom, window, 48, 1e-6, 100.0, {}, 0, Exec::kSerial);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const sdrcalc::RasterImage parallel = sdrcalc::render_membership(
        hom, window, 48, 1e-6, 100.0, {}, 0, Exec::kParallel);
    const double tp = seconds_since(t0);

    const bool same = serial.pixels == parallel.pixels;
    all_same = all_same && same;
    report("raster 48x48 (search)", ts, tp, same);
  }

  return all_same ? 0 : 1;
}
