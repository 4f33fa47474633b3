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

#include "sdrcalc/sdpa.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "str_format.hpp"

namespace sdrcalc {
namespace {

// Block metadata is advisory; exporting trusts it only after checking that
// every coefficient matrix really vanishes outside the declared diagonal
// blocks.
bool blocks_consistent(const SDRep& rep) {
  if (rep.block_dims.empty()) return false;
  const Eigen::Index k = rep.k();
  std::vector<int> owner(static_cast<std::size_t>(k));
  Eigen::Index off = 0;
  int blk = 0;
  for (Eigen::Index d : rep.block_dims) {
    for (Eigen::Index i = 0; i < d; ++i) owner[static_cast<std::size_t>(off + i)] = blk;
    off += d;
    ++blk;
  }
  const auto ok = [&](const SymMat& mat) {
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = r + 1; c < k; ++c) {
        if (mat(r, c) != 0.0 &&
            owner[static_cast<std::size_t>(r)] != owner[static_cast<std::size_t>(c)]) {
          return false;
        }
      }
    }
    return true;
  };
  if (!ok(rep.A)) return false;
  for (const SymMat& b : rep.B) {
    if (!ok(b)) return false;
  }
  for (const SymMat& c : rep.C) {
    if (!ok(c)) return false;
  }
  return true;
}

}  // namespace

std::string format_sdpa(const SDRep& rep, const Point& x) {
  validate(rep);
  if (x.size() != rep.n()) {
    throw std::invalid_argument("format_sdpa: x has size " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(rep.n()));
  }
  if (!x.allFinite()) {
    throw std::invalid_argument("format_sdpa: non-finite coordinate in x");
  }

  const Eigen::Index k = rep.k();
  const Eigen::Index m = rep.m();
  const std::vector<Eigen::Index> blocks =
      blocks_consistent(rep) ? rep.block_dims : std::vector<Eigen::Index>{k};

  // Local coordinates of each global row: block number (1-based) and the
  // 1-based index inside that block.
  std::vector<int> blkno(static_cast<std::size_t>(k));
  std::vector<int> local(static_cast<std::size_t>(k));
  {
    Eigen::Index off = 0;
    int b = 1;
    for (Eigen::Index d : blocks) {
      for (Eigen::Index i = 0; i < d; ++i) {
        blkno[static_cast<std::size_t>(off + i)] = b;
        local[static_cast<std::size_t>(off + i)] = static_cast<int>(i + 1);
      }
      off += d;
      ++b;
    }
  }

  std::ostringstream out;
  out << (m + 1) << "\n";
  out << blocks.size() << "\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << " ";
    out << blocks[i];
  }
  out << "\n";
  for (Eigen::Index j = 0; j < m; ++j) out << "0 ";
  out << "-1\n";

  const auto emit = [&](int matno, const Eigen::MatrixXd& mat) {
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = r; c < k; ++c) {
        if (mat(r, c) == 0.0) continue;
        out << matno << " " << blkno[static_cast<std::size_t>(r)] << " "
            << local[static_cast<std::size_t>(r)] << " "
            << local[static_cast<std::size_t>(c)] << " "
            << internal::double_str(mat(r, c)) << "\n";
      }
    }
  };

  // F_0 = -(A + sum x_i B_i); the solver's constraint
  // sum_j y_j F_j - F_0 PSD then reads pencil(x, z) - t I PSD.
  Eigen::MatrixXd f0 = -rep.A.mat();
  for (Eigen::Index i = 0; i < rep.n(); ++i) f0 -= x(i) * rep.B[i].mat();
  emit(0, f0);
  for (Eigen::Index j = 0; j < m; ++j) emit(static_cast<int>(j + 1), rep.C[j].mat());
  emit(static_cast<int>(m + 1), -Eigen::MatrixXd::Identity(k, k));
  return out.str();
}

void export_sdpa(const SDRep& rep, const Point& x,
                 const std::filesystem::path& path) {
  const std::string text = format_sdpa(rep, x);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write error");
}

}  // namespace sdrcalc
