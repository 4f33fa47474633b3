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
#include <vector>

#include <Eigen/Dense>

namespace sdrcalc {

/// Dense real symmetric matrix. Symmetry is enforced at construction:
/// the input is averaged with its transpose, and inputs whose asymmetry
/// exceeds `max_asymmetry` in max-norm are rejected. After construction
/// entries(i,j) == entries(j,i) holds exactly.
class SymMat {
 public:
  static constexpr double kMaxAsymmetry = 1e-12;

  // k x k zero matrix.
  explicit SymMat(Eigen::Index dim);

  // Symmetrizes `m` via (m + m^T)/2; throws std::invalid_argument if m is
  // not square, has dim < 1, or |m - m^T| exceeds max_asymmetry in max-norm.
  explicit SymMat(const Eigen::MatrixXd& m, double max_asymmetry = kMaxAsymmetry);

  static SymMat Zero(Eigen::Index dim);
  static SymMat Identity(Eigen::Index dim);
  static SymMat Diagonal(const Eigen::VectorXd& d);
  static SymMat Diagonal(std::initializer_list<double> d);

  Eigen::Index dim() const { return mat_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }
  const Eigen::MatrixXd& mat() const { return mat_; }

  // Exact elementwise equality (same dimension, identical bits).
  friend bool operator==(const SymMat& a, const SymMat& b) {
    return a.mat_.rows() == b.mat_.rows() &&
           (a.mat_.array() == b.mat_.array()).all();
  }
  friend bool operator!=(const SymMat& a, const SymMat& b) { return !(a == b); }

 private:
  Eigen::MatrixXd mat_;
};

// Smallest eigenvalue. Exact closed form for dim <= 2, symmetric
// eigensolver otherwise.
double lambda_min(const SymMat& m);

// Full eigensystem, eigenvalues ascending.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns
};
EigenSystem eigen_sym(const SymMat& m);

// True iff lambda_min(m) >= -tol. Requires tol >= 0.
bool is_psd(const SymMat& m, double tol);

// Direct sum of the blocks; throws std::invalid_argument on an empty list.
SymMat block_diag(std::span<const SymMat> blocks);
SymMat block_diag(std::initializer_list<SymMat> blocks);

}  // namespace sdrcalc
