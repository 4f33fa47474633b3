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

#include "sdrcalc/sdrep.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace sdrcalc {
namespace {

std::string dim_summary(const SDRep& rep) {
  return "k=" + std::to_string(rep.k()) + " n=" + std::to_string(rep.n()) +
         " m=" + std::to_string(rep.m());
}

std::vector<Eigen::Index> blocks_or_single(const SDRep& rep) {
  if (!rep.block_dims.empty()) return rep.block_dims;
  return {rep.k()};
}

// Input labels when present, generated stand-ins otherwise, so combined
// representations stay self-describing even if an operand was unlabeled.
std::vector<std::string> labels_or_default(const std::vector<std::string>& given,
                                           Eigen::Index count, const char* stem) {
  if (static_cast<Eigen::Index>(given.size()) == count) return given;
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i)
    out.push_back(stem + std::to_string(i + 1));
  return out;
}

void append_all(std::vector<std::string>& dst, const std::vector<std::string>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// Embeds `m` as the diagonal block of a dim x dim matrix starting at `off`.
Eigen::MatrixXd embed(const SymMat& m, Eigen::Index dim, Eigen::Index off) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  out.block(off, off, m.dim(), m.dim()) = m.mat();
  return out;
}

void require_same_ambient(const SDRep& r1, const SDRep& r2, const char* op) {
  if (r1.n() != r2.n()) {
    throw std::invalid_argument(std::string(op) + ": ambient dimensions differ (" +
                                std::to_string(r1.n()) + " vs " +
                                std::to_string(r2.n()) + ")");
  }
}

}  // namespace

void validate(const SDRep& rep) {
  const Eigen::Index k = rep.k();
  if (rep.n() < 1) throw std::invalid_argument("SDRep: ambient dimension must be >= 1");
  for (std::size_t i = 0; i < rep.B.size(); ++i) {
    if (rep.B[i].dim() != k) {
      throw std::invalid_argument("SDRep: B[" + std::to_string(i) +
                                  "] has dim " + std::to_string(rep.B[i].dim()) +
                                  ", expected " + std::to_string(k));
    }
  }
  for (std::size_t j = 0; j < rep.C.size(); ++j) {
    if (rep.C[j].dim() != k) {
      throw std::invalid_argument("SDRep: C[" + std::to_string(j) +
                                  "] has dim " + std::to_string(rep.C[j].dim()) +
                                  ", expected " + std::to_string(k));
    }
  }
  if (!rep.block_dims.empty()) {
    Eigen::Index total = 0;
    for (Eigen::Index d : rep.block_dims) {
      if (d < 1) throw std::invalid_argument("SDRep: block dims must be >= 1");
      total += d;
    }
    if (total != k) {
      throw std::invalid_argument("SDRep: block dims sum to " +
                                  std::to_string(total) + ", expected " +
                                  std::to_string(k));
    }
  }
  if (!rep.ambient_labels.empty() &&
      static_cast<Eigen::Index>(rep.ambient_labels.size()) != rep.n()) {
    throw std::invalid_argument("SDRep: ambient label count does not match n");
  }
  if (!rep.lifted_labels.empty() &&
      static_cast<Eigen::Index>(rep.lifted_labels.size()) != rep.m()) {
    throw std::invalid_argument("SDRep: lifted label count does not match m");
  }
}

SymMat pencil_eval(const SDRep& rep, const Point& x, const Eigen::VectorXd& z) {
  if (x.size() != rep.n()) {
    throw std::invalid_argument("pencil_eval: x has size " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(rep.n()));
  }
  if (z.size() != rep.m()) {
    throw std::invalid_argument("pencil_eval: z has size " +
                                std::to_string(z.size()) + ", expected " +
                                std::to_string(rep.m()));
  }
  if (!x.allFinite() || !z.allFinite()) {
    throw std::invalid_argument("pencil_eval: non-finite coordinate");
  }
  Eigen::MatrixXd p = rep.A.mat();
  for (Eigen::Index i = 0; i < rep.n(); ++i) p += x(i) * rep.B[i].mat();
  for (Eigen::Index j = 0; j < rep.m(); ++j) p += z(j) * rep.C[j].mat();
  // Summands are exactly symmetric, so no symmetrization slack is needed.
  return SymMat(p, 0.0);
}

SymMat pencil_eval(const SDRep& rep, const Point& x) {
  if (rep.m() != 0) {
    throw std::invalid_argument("pencil_eval: representation has lifted variables");
  }
  return pencil_eval(rep, x, Eigen::VectorXd(0));
}

SDRep cone_hull(const SDRep& rep) {
  validate(rep);
  const Eigen::Index k = rep.k(), n = rep.n(), m = rep.m();
  const Eigen::Index kk = k + 2 * n;

  SDRep out;
  out.A = SymMat::Zero(kk);

  // Ambient coefficients keep their block-0 role and gain the off-diagonal
  // of their 2x2 slot, which ties x_i to the scaling variable.
  out.B.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::MatrixXd b = embed(rep.B[i], kk, 0);
    b(k + 2 * i, k + 2 * i + 1) = 1.0;
    b(k + 2 * i + 1, k + 2 * i) = 1.0;
    out.B.emplace_back(b);
  }

  out.C.reserve(static_cast<std::size_t>(m + 2));
  for (Eigen::Index j = 0; j < m; ++j) out.C.emplace_back(embed(rep.C[j], kk, 0));

  // lambda multiplies the original constant block and sits in the top-left
  // corner of every 2x2 slot; at lambda = 0 each slot degenerates to
  // [[0, x_i], [x_i, r]], which is PSD only when x_i = 0.
  Eigen::MatrixXd lam = embed(rep.A, kk, 0);
  for (Eigen::Index i = 0; i < n; ++i) lam(k + 2 * i, k + 2 * i) = 1.0;
  out.C.emplace_back(lam);

  // One shared bound r serves all slots; it only ever helps, so sharing
  // does not shrink the represented cone.
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(kk, kk);
  for (Eigen::Index i = 0; i < n; ++i) r(k + 2 * i + 1, k + 2 * i + 1) = 1.0;
  out.C.emplace_back(r);

  out.block_dims = blocks_or_single(rep);
  out.block_dims.insert(out.block_dims.end(), static_cast<std::size_t>(n), 2);

  out.ambient_labels = labels_or_default(rep.ambient_labels, n, "x");
  out.lifted_labels = labels_or_default(rep.lifted_labels, m, "z");
  out.lifted_labels.push_back("lambda");
  out.lifted_labels.push_back("r");

  out.provenance = rep.provenance;
  out.provenance.push_back("cone_hull: " + dim_summary(rep) + " -> " +
                           dim_summary(out));
  validate(out);
  return out;
}

SDRep homogenize(const SDRep& rep) {
  validate(rep);
  const Eigen::Index k = rep.k(), n = rep.n(), m = rep.m();
  const Eigen::Index kk = k + 2 * n;

  // Same matrices as cone_hull, except the scaling variable becomes the
  // last ambient coordinate instead of staying lifted.
  SDRep out;
  out.A = SymMat::Zero(kk);

  out.B.reserve(static_cast<std::size_t>(n + 1));
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::MatrixXd b = embed(rep.B[i], kk, 0);
    b(k + 2 * i, k + 2 * i + 1) = 1.0;
    b(k + 2 * i + 1, k + 2 * i) = 1.0;
    out.B.emplace_back(b);
  }
  Eigen::MatrixXd t = embed(rep.A, kk, 0);
  for (Eigen::Index i = 0; i < n; ++i) t(k + 2 * i, k + 2 * i) = 1.0;
  out.B.emplace_back(t);

  out.C.reserve(static_cast<std::size_t>(m + 1));
  for (Eigen::Index j = 0; j < m; ++j) out.C.emplace_back(embed(rep.C[j], kk, 0));
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(kk, kk);
  for (Eigen::Index i = 0; i < n; ++i) r(k + 2 * i + 1, k + 2 * i + 1) = 1.0;
  out.C.emplace_back(r);

  out.block_dims = blocks_or_single(rep);
  out.block_dims.insert(out.block_dims.end(), static_cast<std::size_t>(n), 2);

  out.ambient_labels = labels_or_default(rep.ambient_labels, n, "x");
  out.ambient_labels.push_back("t");
  out.lifted_labels = labels_or_default(rep.lifted_labels, m, "z");
  out.lifted_labels.push_back("r");

  out.provenance = rep.provenance;
  out.provenance.push_back("homogenize: " + dim_summary(rep) + " -> " +
                           dim_summary(out));
  validate(out);
  return out;
}

SDRep slice_last_at_one(const SDRep& rep) {
  validate(rep);
  if (rep.n() < 2) {
    throw std::invalid_argument("slice_last_at_one: need n >= 2, have n = " +
                                std::to_string(rep.n()));
  }
  SDRep out;
  out.A = SymMat(rep.A.mat() + rep.B.back().mat(), 0.0);
  out.B.assign(rep.B.begin(), rep.B.end() - 1);
  out.C = rep.C;
  out.block_dims = rep.block_dims;
  out.ambient_labels = labels_or_default(rep.ambient_labels, rep.n(), "x");
  out.ambient_labels.pop_back();
  out.lifted_labels = rep.lifted_labels;
  out.provenance = rep.provenance;
  out.provenance.push_back("slice_last_at_one: " + dim_summary(rep) + " -> " +
                           dim_summary(out));
  validate(out);
  return out;
}

SDRep minkowski_sum(const SDRep& r1, const SDRep& r2) {
  validate(r1);
  validate(r2);
  require_same_ambient(r1, r2, "minkowski_sum");
  const Eigen::Index k1 = r1.k(), k2 = r2.k();
  const Eigen::Index n = r1.n(), m1 = r1.m(), m2 = r2.m();
  const Eigen::Index kk = k1 + k2;

  // Realizes { x : exists u with u in S1, x - u in S2 }: the first block
  // sees only u, the second sees x - u.
  SDRep out;
  out.A = SymMat(embed(r1.A, kk, 0) + embed(r2.A, kk, k1), 0.0);

  out.B.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.B.emplace_back(embed(r2.B[i], kk, k1));

  out.C.reserve(static_cast<std::size_t>(n + m1 + m2));
  for (Eigen::Index i = 0; i < n; ++i) {
    out.C.emplace_back(embed(r1.B[i], kk, 0) - embed(r2.B[i], kk, k1));
  }
  for (Eigen::Index j = 0; j < m1; ++j) out.C.emplace_back(embed(r1.C[j], kk, 0));
  for (Eigen::Index j = 0; j < m2; ++j) out.C.emplace_back(embed(r2.C[j], kk, k1));

  out.block_dims = blocks_or_single(r1);
  const std::vector<Eigen::Index> right = blocks_or_single(r2);
  out.block_dims.insert(out.block_dims.end(), right.begin(), right.end());

  out.ambient_labels = labels_or_default(r1.ambient_labels, n, "x");
  for (Eigen::Index i = 0; i < n; ++i)
    out.lifted_labels.push_back("u" + std::to_string(i + 1));
  append_all(out.lifted_labels, labels_or_default(r1.lifted_labels, m1, "z"));
  append_all(out.lifted_labels, labels_or_default(r2.lifted_labels, m2, "z"));

  out.provenance = r1.provenance;
  append_all(out.provenance, r2.provenance);
  out.provenance.push_back("minkowski_sum: [" + dim_summary(r1) + "] + [" +
                           dim_summary(r2) + "] -> " + dim_summary(out));
  validate(out);
  return out;
}

SDRep minkowski_sum(std::span<const SDRep> reps) {
  if (reps.empty()) throw std::invalid_argument("minkowski_sum: no operands");
  SDRep acc = reps[0];
  for (std::size_t i = 1; i < reps.size(); ++i) acc = minkowski_sum(acc, reps[i]);
  return acc;
}

SDRep minkowski_sum(std::initializer_list<SDRep> reps) {
  return minkowski_sum(std::span<const SDRep>(reps.begin(), reps.size()));
}

SDRep intersection(const SDRep& r1, const SDRep& r2) {
  validate(r1);
  validate(r2);
  require_same_ambient(r1, r2, "intersection");
  const Eigen::Index k1 = r1.k(), k2 = r2.k();
  const Eigen::Index n = r1.n(), m1 = r1.m(), m2 = r2.m();
  const Eigen::Index kk = k1 + k2;

  SDRep out;
  out.A = SymMat(embed(r1.A, kk, 0) + embed(r2.A, kk, k1), 0.0);
  out.B.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    out.B.emplace_back(embed(r1.B[i], kk, 0) + embed(r2.B[i], kk, k1));
  }
  out.C.reserve(static_cast<std::size_t>(m1 + m2));
  for (Eigen::Index j = 0; j < m1; ++j) out.C.emplace_back(embed(r1.C[j], kk, 0));
  for (Eigen::Index j = 0; j < m2; ++j) out.C.emplace_back(embed(r2.C[j], kk, k1));

  out.block_dims = blocks_or_single(r1);
  const std::vector<Eigen::Index> right = blocks_or_single(r2);
  out.block_dims.insert(out.block_dims.end(), right.begin(), right.end());

  out.ambient_labels = labels_or_default(r1.ambient_labels, n, "x");
  out.lifted_labels = labels_or_default(r1.lifted_labels, m1, "z");
  append_all(out.lifted_labels, labels_or_default(r2.lifted_labels, m2, "z"));

  out.provenance = r1.provenance;
  append_all(out.provenance, r2.provenance);
  out.provenance.push_back("intersection: [" + dim_summary(r1) + "] & [" +
                           dim_summary(r2) + "] -> " + dim_summary(out));
  validate(out);
  return out;
}

SDRep product(const SDRep& r1, const SDRep& r2) {
  validate(r1);
  validate(r2);
  const Eigen::Index k1 = r1.k(), k2 = r2.k();
  const Eigen::Index n1 = r1.n(), n2 = r2.n(), m1 = r1.m(), m2 = r2.m();
  const Eigen::Index kk = k1 + k2;

  SDRep out;
  out.A = SymMat(embed(r1.A, kk, 0) + embed(r2.A, kk, k1), 0.0);
  out.B.reserve(static_cast<std::size_t>(n1 + n2));
  for (Eigen::Index i = 0; i < n1; ++i) out.B.emplace_back(embed(r1.B[i], kk, 0));
  for (Eigen::Index i = 0; i < n2; ++i) out.B.emplace_back(embed(r2.B[i], kk, k1));
  out.C.reserve(static_cast<std::size_t>(m1 + m2));
  for (Eigen::Index j = 0; j < m1; ++j) out.C.emplace_back(embed(r1.C[j], kk, 0));
  for (Eigen::Index j = 0; j < m2; ++j) out.C.emplace_back(embed(r2.C[j], kk, k1));

  out.block_dims = blocks_or_single(r1);
  const std::vector<Eigen::Index> right = blocks_or_single(r2);
  out.block_dims.insert(out.block_dims.end(), right.begin(), right.end());

  out.ambient_labels = labels_or_default(r1.ambient_labels, n1, "x");
  append_all(out.ambient_labels, labels_or_default(r2.ambient_labels, n2, "x"));
  out.lifted_labels = labels_or_default(r1.lifted_labels, m1, "z");
  append_all(out.lifted_labels, labels_or_default(r2.lifted_labels, m2, "z"));

  out.provenance = r1.provenance;
  append_all(out.provenance, r2.provenance);
  out.provenance.push_back("product: [" + dim_summary(r1) + "] x [" +
                           dim_summary(r2) + "] -> " + dim_summary(out));
  validate(out);
  return out;
}

SDRep convex_hull_union(std::span<const SDRep> reps) {
  if (reps.empty()) throw std::invalid_argument("convex_hull_union: no operands");
  std::vector<SDRep> cones;
  cones.reserve(reps.size());
  for (const SDRep& rep : reps) cones.push_back(homogenize(rep));
  // Adding the homogenized cones sums their scaling coordinates; slicing
  // that total at 1 makes the scalings act as convex-combination weights.
  SDRep out = slice_last_at_one(minkowski_sum(cones));
  out.provenance.push_back("convex_hull_union: " + std::to_string(reps.size()) +
                           " operand(s) -> " + dim_summary(out));
  return out;
}

SDRep convex_hull_union(std::initializer_list<SDRep> reps) {
  return convex_hull_union(std::span<const SDRep>(reps.begin(), reps.size()));
}

}  // namespace sdrcalc
