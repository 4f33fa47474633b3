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

#include "sdrcalc/symmat.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace sdrcalc {

SymMat::SymMat(Eigen::Index dim) {
  if (dim < 1) throw std::invalid_argument("SymMat: dim must be >= 1");
  mat_ = Eigen::MatrixXd::Zero(dim, dim);
}

SymMat::SymMat(const Eigen::MatrixXd& m, double max_asymmetry) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymMat: matrix not square");
  if (m.rows() < 1) throw std::invalid_argument("SymMat: dim must be >= 1");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= max_asymmetry)) {
    throw std::invalid_argument("SymMat: asymmetry " + std::to_string(asym) +
                                " exceeds tolerance");
  }
  // (m_ij + m_ji)/2 evaluates identically for both triangles, so the
  // stored matrix is symmetric exactly, not just up to rounding.
  mat_ = 0.5 * (m + m.transpose());
}

SymMat SymMat::Zero(Eigen::Index dim) { return SymMat(dim); }

SymMat SymMat::Identity(Eigen::Index dim) {
  return SymMat(Eigen::MatrixXd::Identity(dim, dim));
}

SymMat SymMat::Diagonal(const Eigen::VectorXd& d) {
  return SymMat(Eigen::MatrixXd(d.asDiagonal()));
}

SymMat SymMat::Diagonal(std::initializer_list<double> d) {
  return Diagonal(Eigen::Map<const Eigen::VectorXd>(
      d.begin(), static_cast<Eigen::Index>(d.size())));
}

double lambda_min(const SymMat& m) {
  const Eigen::Index k = m.dim();
  if (k == 1) return m(0, 0);
  if (k == 2) {
    // Closed form keeps exact zeros exact (e.g. rank-1 PSD boundary cases).
    const double a = m(0, 0), c = m(1, 1), b = m(0, 1);
    const double half_diff = 0.5 * (a - c);
    return 0.5 * (a + c) - std::hypot(half_diff, b);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.mat(),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("lambda_min: eigensolver failed to converge");
  }
  return solver.eigenvalues()(0);
}

EigenSystem eigen_sym(const SymMat& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.mat());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen_sym: eigensolver failed to converge");
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

bool is_psd(const SymMat& m, double tol) {
  if (!(tol >= 0)) throw std::invalid_argument("is_psd: tol must be >= 0");
  return lambda_min(m) >= -tol;
}

SymMat block_diag(std::span<const SymMat> blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_diag: no blocks");
  Eigen::Index total = 0;
  for (const SymMat& b : blocks) total += b.dim();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(total, total);
  Eigen::Index off = 0;
  for (const SymMat& b : blocks) {
    out.block(off, off, b.dim(), b.dim()) = b.mat();
    off += b.dim();
  }
  return SymMat(out);
}

SymMat block_diag(std::initializer_list<SymMat> blocks) {
  return block_diag(std::span<const SymMat>(blocks.begin(), blocks.size()));
}

}  // namespace sdrcalc
