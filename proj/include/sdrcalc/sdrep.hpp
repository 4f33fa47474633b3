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

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sdrcalc/symmat.hpp"

namespace sdrcalc {

// Point in ambient space.
using Point = Eigen::VectorXd;

/// A semidefinite representation of a convex set
///
///   S = { x in R^n | exists z in R^m :
///         A + sum_i x_i B[i] + sum_j z_j C[j]  is PSD },
///
/// i.e. the coordinate projection of a spectrahedron in R^{n+m}. m == 0
/// means a plain spectrahedron. All coefficient matrices share dimension k.
struct SDRep {
  SymMat A{1};  // 1x1 zero until assigned
  std::vector<SymMat> B;  // ambient coefficients, size n
  std::vector<SymMat> C;  // lifted coefficients, size m

  // Optional direct-sum structure of the pencil (sizes summing to k).
  // Maintained by the block-assembling constructions; empty means unknown
  // (treated as a single block).
  std::vector<Eigen::Index> block_dims;

  // Metadata only.
  std::vector<std::string> ambient_labels;  // empty or size n
  std::vector<std::string> lifted_labels;   // empty or size m
  std::vector<std::string> provenance;      // ordered history of constructions

  Eigen::Index k() const { return A.dim(); }
  Eigen::Index n() const { return static_cast<Eigen::Index>(B.size()); }
  Eigen::Index m() const { return static_cast<Eigen::Index>(C.size()); }
};

// Throws std::invalid_argument if any structural invariant fails
// (dimension agreement, n >= 1, block/label sizes).
void validate(const SDRep& rep);

// The affine pencil A + sum x_i B_i + sum z_j C_j. Throws on dimension
// mismatch or non-finite coordinates.
SymMat pencil_eval(const SDRep& rep, const Point& x, const Eigen::VectorXd& z);
SymMat pencil_eval(const SDRep& rep, const Point& x);  // requires m == 0

// Conic hull { lam * a : lam >= 0, a in S }. Output dimensions:
// k' = k + 2n, n' = n, m' = m + 2. Block 0 holds the original pencil
// scaled by the new lifted variable lam; blocks 1..n are 2x2 slots
// [[lam, x_i], [x_i, r]] sharing a single lifted bound r. The 2x2 slots
// force x = 0 whenever lam = 0.
SDRep cone_hull(const SDRep& rep);

// Conic hull of S x {1} in R^{n+1}, with the scaling variable exposed as
// the new last ambient coordinate instead of staying lifted. Output:
// k' = k + 2n, n' = n + 1, m' = m + 1 (only r remains lifted).
SDRep homogenize(const SDRep& rep);

// { x in R^{n-1} |(x, 1) in S }. Requires n >= 2; A' = A + B_n.
SDRep slice_last_at_one(const SDRep& rep);

// Minkowski sum S1 + S2 (equal ambient dimension). Realized as
// { x | exists u : u in S1 and x - u in S2 } with the split point u
// lifted. Output: k' = k1 + k2, n' = n, m' = n + m1 + m2; the lifted
// order is (u_1..u_n, z1, z2).
SDRep minkowski_sum(const SDRep& r1, const SDRep& r2);
SDRep minkowski_sum(std::span<const SDRep> reps);  // folds left-to-right
SDRep minkowski_sum(std::initializer_list<SDRep> reps);

// S1 ∩ S2 by block-diagonal conjunction (equal ambient dimension).
// Output: k' = k1 + k2, m' = m1 + m2, lifted order (z1, z2).
SDRep intersection(const SDRep& r1, const SDRep& r2);

// Cartesian product S1 x S2 over R^{n1+n2}.
SDRep product(const SDRep& r1, const SDRep& r2);

// Convex hull of the union of the represented sets:
// slice_last_at_one(minkowski_sum(homogenize(R1), ..., homogenize(Rt))).
// For t = 1 the pipeline represents the input set itself (conv of a
// single set when that set is convex, which SDRep sets always are).
SDRep convex_hull_union(std::span<const SDRep> reps);
SDRep convex_hull_union(std::initializer_list<SDRep> reps);

}  // namespace sdrcalc
