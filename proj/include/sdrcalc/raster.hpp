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

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "sdrcalc/feas.hpp"
#include "sdrcalc/sdrep.hpp"

namespace sdrcalc {

struct RasterWindow {
  double xmin = -1.0, xmax = 1.0;
  double ymin = -1.0, ymax = 1.0;
};

struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, row 0 at ymax
};

// Membership image over a 2-D window (requires n == 2): one oracle call
// per pixel at the pixel center, margin clamped to [-1, 1] and mapped
// linearly to 0..255. Pixels are independent, so the parallel path gives
// the same bytes as the serial one.
RasterImage render_membership(const SDRep& rep, const RasterWindow& window,
                              int res, double tol = 1e-6, double radius = 1e6,
                              const SmoothingSchedule& schedule = {},
                              std::uint64_t seed = 0,
                              Exec exec = Exec::kParallel);

// Binary PGM (P5), 8-bit grayscale.
void write_pgm(const RasterImage& image, const std::filesystem::path& path);

// Rejection sampling: draws uniform points from the per-coordinate box
// until `count` members (status not EpsInfeasible) are found or
// max_attempts draws are spent. Deterministic for a fixed seed.
struct SampleBox {
  std::vector<double> lo;
  std::vector<double> hi;
};
std::vector<Point> sample_members(const SDRep& rep, const SampleBox& box,
                                  int count, std::uint64_t seed = 0,
                                  double tol = 1e-6, double radius = 1e6,
                                  long max_attempts = -1);  // -1: 1000*count

}  // namespace sdrcalc
