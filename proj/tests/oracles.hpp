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

#include <random>

#include "sdrcalc/sdrep.hpp"
#include "sdrcalc/symmat.hpp"

namespace sdrcalc::testing {

// Independent smallest-eigenvalue oracle: bisection on the sign of
// det(M - tI), with the determinant computed by hand-rolled Gaussian
// elimination (no shared code with the library's eigensolver path).
// Intended for matrices with a simple smallest eigenvalue (random test
// inputs); accuracy ~1e-12 relative to the spectral range.
double lambda_min_bisect(const SymMat& m);

// Determinant by Gaussian elimination with partial pivoting.
double det_elimination(const Eigen::MatrixXd& m);

// Symmetric matrix with entries uniform in [-amp, amp].
SymMat random_sym(std::mt19937_64& rng, Eigen::Index dim, double amp = 2.0);

// Random plain spectrahedron (m = 0) with the given dimensions.
SDRep random_spectrahedron(std::mt19937_64& rng, Eigen::Index k, Eigen::Index n,
                           double amp = 2.0);

// Random representation with lifted variables.
SDRep random_rep(std::mt19937_64& rng, Eigen::Index k, Eigen::Index n,
                 Eigen::Index m, double amp = 2.0);

// {x in R^1 : x >= a} as the 1x1 pencil [x - a].
SDRep halfline_ge(double a);

// The closure of {x : x1*x2 >= 1, x1 > 0} via [[x1, 1],[1, x2]] >= 0.
SDRep hyperbola_rep();

// {(0, 0)} in R^2 via diag(x1, -x1, x2, -x2) >= 0.
SDRep origin_rep();

// Largest value of mu |-> lambda_min(pencil(mu * a)) for an m = 0
// representation, maximized over [mu_lo, mu_hi] by golden section (the
// profile is concave in mu). Ground truth for conic-membership tests.
double best_scaling_margin(const SDRep& rep, const Point& a, double mu_lo,
                           double mu_hi);

}  // namespace sdrcalc::testing
