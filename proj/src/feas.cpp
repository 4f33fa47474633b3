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

#include "sdrcalc/feas.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdrcalc {
namespace {

constexpr double kGridFeasTol = 1e-9;

// Smallest meaningful trust in a line-search step or coordinate move.
constexpr double kMinStep = 1e-18;

void check_query_args(const SDRep& rep, const Point& x, double radius) {
  validate(rep);
  if (x.size() != rep.n()) {
    throw std::invalid_argument("feas: x has size " + std::to_string(x.size()) +
                                ", expected " + std::to_string(rep.n()));
  }
  if (!x.allFinite()) throw std::invalid_argument("feas: non-finite coordinate in x");
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw std::invalid_argument("feas: radius must be positive and finite");
  }
}

}  // namespace

std::string to_string(FeasStatus s) {
  switch (s) {
    case FeasStatus::kStrictlyFeasible: return "strictly_feasible";
    case FeasStatus::kEpsFeasible: return "eps_feasible";
    case FeasStatus::kEpsInfeasible: return "eps_infeasible";
  }
  throw std::invalid_argument("to_string: bad FeasStatus");
}

SmoothedEval smoothed_objective(const SDRep& rep, const Point& x,
                                const Eigen::VectorXd& z, double beta) {
  if (!(beta > 0) || !std::isfinite(beta)) {
    throw std::invalid_argument("smoothed_objective: beta must be positive");
  }
  const EigenSystem es = eigen_sym(pencil_eval(rep, x, z));
  const double lmin = es.values(0);

  // Shift by lambda_min before exponentiating; the largest weight is then
  // exactly 1 and the rest underflow harmlessly.
  Eigen::VectorXd w = (-beta * (es.values.array() - lmin)).exp();
  const double total = w.sum();

  SmoothedEval out;
  out.value = lmin - std::log(total) / beta;
  out.min_eigenvalue = lmin;
  w /= total;

  const Eigen::MatrixXd projector =
      es.vectors * w.asDiagonal() * es.vectors.transpose();
  out.grad.resize(rep.m());
  for (Eigen::Index j = 0; j < rep.m(); ++j) {
    out.grad(j) = projector.cwiseProduct(rep.C[j].mat()).sum();
  }
  return out;
}

LambdaStarResult lambda_star(const SDRep& rep, const Point& x, double radius,
                             const SmoothingSchedule& schedule,
                             std::uint64_t seed) {
  check_query_args(rep, x, radius);
  const Eigen::Index m = rep.m();

  if (m == 0) {
    LambdaStarResult out;
    out.value = lambda_min(pencil_eval(rep, x));
    out.witness.resize(0);
    out.iterations = 1;
    return out;
  }

  std::int64_t evals = 0;
  bool cap = false;

  double best_val = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_z = Eigen::VectorXd::Zero(m);

  const auto exact = [&](const Eigen::VectorXd& z) {
    ++evals;
    return lambda_min(pencil_eval(rep, x, z));
  };
  const auto consider = [&](const Eigen::VectorXd& z, double val) {
    if (val > best_val) {
      best_val = val;
      best_z = z;
    }
  };

  // Two starts: the origin, plus one seeded random point. The objective is
  // concave, so restarts only guard against stalling on flat pieces, not
  // against local optima.
  std::vector<Eigen::VectorXd> starts;
  starts.push_back(Eigen::VectorXd::Zero(m));
  {
    std::mt19937_64 rng(seed);
    const double r0 = std::min(1.0, radius);
    std::uniform_real_distribution<double> dist(-r0, r0);
    Eigen::VectorXd z(m);
    for (Eigen::Index j = 0; j < m; ++j) z(j) = dist(rng);
    starts.push_back(z);
  }

  for (Eigen::VectorXd& z : starts) {
    for (double beta : schedule.betas) {
      ++evals;
      SmoothedEval cur = smoothed_objective(rep, x, z, beta);
      consider(z, cur.min_eigenvalue);

      double step = schedule.initial_step;
      int taken = 0;
      while (taken < schedule.max_steps_per_stage) {
        bool moved = false;
        while (step >= kMinStep) {
          const Eigen::VectorXd cand =
              (z + step * cur.grad).cwiseMax(-radius).cwiseMin(radius);
          const Eigen::VectorXd delta = cand - z;
          const double delta_norm = delta.lpNorm<Eigen::Infinity>();
          if (delta_norm < kMinStep * std::max(1.0, radius)) break;

          ++evals;
          const SmoothedEval next = smoothed_objective(rep, x, cand, beta);
          consider(cand, next.min_eigenvalue);
          if (next.value >= cur.value + schedule.armijo_slope * cur.grad.dot(delta)) {
            z = cand;
            cur = next;
            moved = true;
            // Re-arm generously; backtracking pulls it down again quickly.
            step *= 2.0;
            break;
          }
          step *= schedule.armijo_factor;
        }
        if (!moved) break;
        ++taken;
      }
      if (taken == schedule.max_steps_per_stage) cap = true;
    }
  }

  // Exact polish: cyclic golden-section maximization of
  // g(t) = lambda_min(pencil(x, z + (t - z_j) e_j)). Concavity of
  // lambda_min in z makes every such line unimodal, so this closes the
  // smoothing gap log(k)/beta that gradient stages cannot cross.
  {
    Eigen::VectorXd z = best_z;
    const double span_tol = std::max(schedule.polish_tol,
                                     schedule.polish_tol * radius);
    const double shrink = (std::sqrt(5.0) - 1.0) / 2.0;

    for (int round = 0; round < schedule.polish_rounds; ++round) {
      const double round_start = best_val;
      for (Eigen::Index j = 0; j < m; ++j) {
        double best_t = z(j);
        double best_line = exact(z);
        const auto eval_at = [&](double t) {
          z(j) = t;
          const double v = exact(z);
          if (v > best_line) {
            best_line = v;
            best_t = t;
          }
          return v;
        };

        double lo = -radius, hi = radius;
        double c = hi - shrink * (hi - lo);
        double d = lo + shrink * (hi - lo);
        double fc = eval_at(c);
        double fd = eval_at(d);
        while (hi - lo > span_tol) {
          if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - shrink * (hi - lo);
            fc = eval_at(c);
          } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + shrink * (hi - lo);
            fd = eval_at(d);
          }
        }
        z(j) = best_t;
        consider(z, best_line);
      }
      if (best_val <= round_start + 1e-15 * std::max(1.0, std::abs(round_start))) {
        break;
      }
    }
  }

  LambdaStarResult out;
  out.value = best_val;
  out.witness = best_z;
  out.iterations = evals;
  out.hit_iteration_cap = cap;
  return out;
}

FeasibilityReport membership(const SDRep& rep, const Point& x, double tol,
                             double radius, const SmoothingSchedule& schedule,
                             std::uint64_t seed) {
  if (!(tol > 0) || !std::isfinite(tol)) {
    throw std::invalid_argument("membership: tol must be positive");
  }
  const LambdaStarResult ls = lambda_star(rep, x, radius, schedule, seed);

  FeasibilityReport report;
  report.witness = ls.witness;
  report.iterations = ls.iterations;
  // Recompute rather than trust the search bookkeeping; the report must be
  // verifiable from (x, witness) alone.
  report.margin = rep.m() == 0
                      ? lambda_min(pencil_eval(rep, x))
                      : lambda_min(pencil_eval(rep, x, ls.witness));
  if (rep.m() > 0) {
    report.radius_hit =
        ls.witness.lpNorm<Eigen::Infinity>() >= radius * (1.0 - 1e-12);
  }
  if (report.margin > tol) {
    report.status = FeasStatus::kStrictlyFeasible;
  } else if (report.margin >= -tol) {
    report.status = FeasStatus::kEpsFeasible;
  } else {
    report.status = FeasStatus::kEpsInfeasible;
  }
  return report;
}

GridResult grid_feasibility(const SDRep& rep, const Point& x, double radius,
                            int steps_per_axis, Exec exec) {
  check_query_args(rep, x, radius);
  const Eigen::Index m = rep.m();
  if (m > 6) {
    throw std::invalid_argument("grid_feasibility: m = " + std::to_string(m) +
                                " exceeds the exhaustive-scan limit of 6");
  }
  if (steps_per_axis < 2) {
    throw std::invalid_argument("grid_feasibility: need >= 2 steps per axis");
  }

  std::int64_t total = 1;
  for (Eigen::Index j = 0; j < m; ++j) {
    total *= steps_per_axis;
    if (total > 100'000'000) {
      throw std::invalid_argument("grid_feasibility: grid exceeds 1e8 points");
    }
  }
  const double spacing = 2.0 * radius / (steps_per_axis - 1);

  // Decoding the flat index per point keeps iterations independent, so the
  // parallel variant is a plain reduction. max is exact and order-free,
  // which keeps both variants bitwise identical.
  const auto margin_at = [&](std::int64_t flat) {
    Eigen::VectorXd z(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      z(j) = -radius + spacing * static_cast<double>(flat % steps_per_axis);
      flat /= steps_per_axis;
    }
    return lambda_min(pencil_eval(rep, x, z));
  };

  double best = -std::numeric_limits<double>::infinity();
  if (exec == Exec::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for reduction(max : best) schedule(static)
#endif
    for (std::int64_t i = 0; i < total; ++i) best = std::max(best, margin_at(i));
  } else {
    for (std::int64_t i = 0; i < total; ++i) best = std::max(best, margin_at(i));
  }

  GridResult out;
  out.best_margin = best;
  out.feasible = best >= -kGridFeasTol;
  return out;
}

}  // namespace sdrcalc
