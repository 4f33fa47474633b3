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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sdrcalc/sdrep.hpp"

namespace sdrcalc {

enum class Exec { kSerial, kParallel };

enum class FeasStatus { kStrictlyFeasible, kEpsFeasible, kEpsInfeasible };

std::string to_string(FeasStatus s);

/// Outcome of a membership query. `margin` is the best found value of
/// lambda_min(pencil(x, z)), always recomputed exactly at `witness`, so
/// the report can be re-checked independently of the search that produced
/// it. `radius_hit` flags that the returned witness sits on the search
/// box boundary; the supremum may only be approached as |z| grows, so a
/// negative margin with radius_hit set is not a robust infeasibility.
struct FeasibilityReport {
  FeasStatus status = FeasStatus::kEpsInfeasible;
  double margin = 0.0;
  Eigen::VectorXd witness;
  std::int64_t iterations = 0;
  bool radius_hit = false;
};

/// Continuation schedule for the smoothed concave surrogate
/// f_beta(z) = -(1/beta) log sum_i exp(-beta lambda_i(pencil(x,z))),
/// which satisfies f_beta <= lambda_min <= f_beta + log(k)/beta. Each
/// stage runs projected gradient ascent with Armijo backtracking on the
/// |z|_inf <= radius box; after the last stage a cyclic coordinate
/// golden-section polish runs directly on the exact objective
/// g(z) = lambda_min(pencil(x, z)), which is concave, hence unimodal
/// along every coordinate line.
struct SmoothingSchedule {
  std::vector<double> betas{1.0, 10.0, 100.0, 1000.0};
  int max_steps_per_stage = 500;
  double armijo_factor = 0.5;
  double armijo_slope = 1e-4;
  double initial_step = 1.0;
  int polish_rounds = 10;
  double polish_tol = 1e-13;
};

struct LambdaStarResult {
  double value = 0.0;        // exact lambda_min(pencil(x, z)) at `witness`
  Eigen::VectorXd witness;   // size m
  std::int64_t iterations = 0;
  bool hit_iteration_cap = false;
};

// Value and gradient of the smoothed surrogate f_beta at (x, z).
// grad[j] = tr(W C_j) with W the softmax-weighted spectral projector.
struct SmoothedEval {
  double value = 0.0;         // f_beta(z)
  double min_eigenvalue = 0.0;  // exact lambda_min at the same point
  Eigen::VectorXd grad;
};
SmoothedEval smoothed_objective(const SDRep& rep, const Point& x,
                                const Eigen::VectorXd& z, double beta);

// Approximates lambda*(x) = sup { lambda_min(pencil(x,z)) : |z|_inf <= radius }
// (a concave maximization). Deterministic given (rep, x, radius, schedule,
// seed); the seed drives the single random restart. Never throws past
// argument validation: an exhausted iteration budget returns the best
// point found with hit_iteration_cap set.
LambdaStarResult lambda_star(const SDRep& rep, const Point& x, double radius,
                             const SmoothingSchedule& schedule = {},
                             std::uint64_t seed = 0);

// Membership oracle: classifies x against the represented set by the sign
// of lambda*(x) relative to tol:
//   margin >  tol   -> StrictlyFeasible
//   |margin| <= tol -> EpsFeasible
//   margin < -tol   -> EpsInfeasible
// Requires tol > 0, radius > 0, finite coordinates.
FeasibilityReport membership(const SDRep& rep, const Point& x, double tol = 1e-6,
                             double radius = 1e6,
                             const SmoothingSchedule& schedule = {},
                             std::uint64_t seed = 0);

/// Ground-truth oracle for small lifted dimension: exhaustively evaluates
/// lambda_min over the uniform grid with `steps_per_axis` points per axis
/// on [-radius, radius]^m. Returns whether any grid point reaches
/// lambda_min >= -1e-9, plus the best margin found. Requires m <= 6 and
/// steps_per_axis >= 2; cost is steps_per_axis^m eigenvalue computations.
struct GridResult {
  bool feasible = false;
  double best_margin = 0.0;
};
GridResult grid_feasibility(const SDRep& rep, const Point& x, double radius,
                            int steps_per_axis, Exec exec = Exec::kParallel);

}  // namespace sdrcalc
