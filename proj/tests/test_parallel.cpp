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

#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "sdrcalc/feas.hpp"
#include "sdrcalc/raster.hpp"
#include "sdrcalc/sdrep.hpp"

namespace {

using sdrcalc::Exec;
using sdrcalc::SDRep;

}  // namespace

TEST_CASE("grid scans agree between serial and concurrent execution") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);

  SDRep cone = sdrcalc::cone_hull(sdrcalc::testing::hyperbola_rep());
  for (int trial = 0; trial < 3; ++trial) {
    Eigen::Vector2d x(dist(rng), dist(rng));
    sdrcalc::GridResult serial =
        sdrcalc::grid_feasibility(cone, x, 5.0, 41, Exec::kSerial);
    sdrcalc::GridResult parallel =
        sdrcalc::grid_feasibility(cone, x, 5.0, 41, Exec::kParallel);
    CHECK(serial.feasible == parallel.feasible);
    CHECK(serial.best_margin == parallel.best_margin);
  }

  for (int trial = 0; trial < 3; ++trial) {
    SDRep rep = sdrcalc::testing::random_rep(rng, 3, 2, 3);
    Eigen::Vector2d x(dist(rng), dist(rng));
    sdrcalc::GridResult serial =
        sdrcalc::grid_feasibility(rep, x, 2.0, 21, Exec::kSerial);
    sdrcalc::GridResult parallel =
        sdrcalc::grid_feasibility(rep, x, 2.0, 21, Exec::kParallel);
    CHECK(serial.feasible == parallel.feasible);
    CHECK(serial.best_margin == parallel.best_margin);
  }
}

TEST_CASE("rendered membership images agree between execution modes") {
  sdrcalc::RasterWindow window{0.0, 3.0, 0.0, 3.0};

  SDRep hyp = sdrcalc::testing::hyperbola_rep();
  sdrcalc::RasterImage serial = sdrcalc::render_membership(
      hyp, window, 16, 1e-6, 1e6, {}, 0, Exec::kSerial);
  sdrcalc::RasterImage parallel = sdrcalc::render_membership(
      hyp, window, 16, 1e-6, 1e6, {}, 0, Exec::kParallel);
  REQUIRE(serial.pixels.size() == parallel.pixels.size());
  CHECK(serial.pixels == parallel.pixels);

  // A representation with a lifted variable drives the search oracle per
  // pixel; a tight radius keeps it cheap.
  SDRep hom = sdrcalc::homogenize(sdrcalc::testing::halfline_ge(1.0));
  sdrcalc::RasterWindow cone_window{-2.0, 4.0, -1.0, 3.0};
  sdrcalc::RasterImage s2 = sdrcalc::render_membership(
      hom, cone_window, 10, 1e-6, 50.0, {}, 0, Exec::kSerial);
  sdrcalc::RasterImage p2 = sdrcalc::render_membership(
      hom, cone_window, 10, 1e-6, 50.0, {}, 0, Exec::kParallel);
  CHECK(s2.pixels == p2.pixels);
}
