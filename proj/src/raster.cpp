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

#include "sdrcalc/raster.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace sdrcalc {
namespace {

std::uint8_t shade(double margin) {
  const double clamped = std::min(1.0, std::max(-1.0, margin));
  return static_cast<std::uint8_t>(std::lround((clamped + 1.0) * 127.5));
}

}  // namespace

RasterImage render_membership(const SDRep& rep, const RasterWindow& window,
                              int res, double tol, double radius,
                              const SmoothingSchedule& schedule,
                              std::uint64_t seed, Exec exec) {
  validate(rep);
  if (rep.n() != 2) {
    throw std::invalid_argument("render_membership: need n == 2, have n = " +
                                std::to_string(rep.n()));
  }
  if (res < 1) throw std::invalid_argument("render_membership: res must be >= 1");
  if (!(window.xmax > window.xmin) || !(window.ymax > window.ymin) ||
      !std::isfinite(window.xmin) || !std::isfinite(window.xmax) ||
      !std::isfinite(window.ymin) || !std::isfinite(window.ymax)) {
    throw std::invalid_argument("render_membership: degenerate window");
  }

  RasterImage image;
  image.width = res;
  image.height = res;
  image.pixels.assign(static_cast<std::size_t>(res) * res, 0);

  const double dx = (window.xmax - window.xmin) / res;
  const double dy = (window.ymax - window.ymin) / res;
  const long total = static_cast<long>(res) * res;

  // Pixels write to disjoint indices with a per-pixel deterministic
  // computation, so the schedule and thread count cannot change the bytes.
  const auto pixel = [&](long flat) {
    const int r = static_cast<int>(flat / res);
    const int c = static_cast<int>(flat % res);
    Point p(2);
    p(0) = window.xmin + (c + 0.5) * dx;
    p(1) = window.ymax - (r + 0.5) * dy;
    const FeasibilityReport rep_at =
        membership(rep, p, tol, radius, schedule, seed);
    image.pixels[static_cast<std::size_t>(flat)] = shade(rep_at.margin);
  };

  if (exec == Exec::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long i = 0; i < total; ++i) pixel(i);
  } else {
    for (long i = 0; i < total; ++i) pixel(i);
  }
  return image;
}

void write_pgm(const RasterImage& image, const std::filesystem::path& path) {
  if (image.width < 1 || image.height < 1 ||
      image.pixels.size() !=
          static_cast<std::size_t>(image.width) * image.height) {
    throw std::invalid_argument("write_pgm: inconsistent image dimensions");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << "P5\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write error");
}

std::vector<Point> sample_members(const SDRep& rep, const SampleBox& box,
                                  int count, std::uint64_t seed, double tol,
                                  double radius, long max_attempts) {
  validate(rep);
  const Eigen::Index n = rep.n();
  if (static_cast<Eigen::Index>(box.lo.size()) != n ||
      static_cast<Eigen::Index>(box.hi.size()) != n) {
    throw std::invalid_argument("sample_members: box size does not match n");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(box.lo[static_cast<std::size_t>(i)] <
          box.hi[static_cast<std::size_t>(i)])) {
      throw std::invalid_argument("sample_members: empty box on coordinate " +
                                  std::to_string(i + 1));
    }
  }
  if (count < 0) throw std::invalid_argument("sample_members: count must be >= 0");
  if (max_attempts < 0) max_attempts = 1000L * count;

  std::mt19937_64 rng(seed);
  std::vector<Point> members;
  members.reserve(static_cast<std::size_t>(count));
  for (long attempt = 0;
       attempt < max_attempts && static_cast<int>(members.size()) < count;
       ++attempt) {
    Point p(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      std::uniform_real_distribution<double> dist(
          box.lo[static_cast<std::size_t>(i)], box.hi[static_cast<std::size_t>(i)]);
      p(i) = dist(rng);
    }
    const FeasibilityReport report = membership(rep, p, tol, radius, {}, seed);
    if (report.status != FeasStatus::kEpsInfeasible) members.push_back(p);
  }
  return members;
}

}  // namespace sdrcalc
