// Copyright 2026 The eaqcc Authors
//
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

#include "eaqcc/poly_matrix.hpp"

#include "eaqcc/errors.hpp"

namespace eaqcc {

PolyMatrix identity_matrix(Eigen::Index n) {
  PolyMatrix m = zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = RationalPoly(1);
  return m;
}

PolyMatrix zero_matrix(Eigen::Index r, Eigen::Index c) {
  return PolyMatrix::Constant(r, c, RationalPoly());
}

PolyMatrix inverse_matrix(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const Eigen::Index n = m.rows();
  PolyMatrix aug(n, 2 * n);
  aug << m, identity_matrix(n);
  auto r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] >= n)
    throw Error("inverse of a singular matrix");
  return r.matrix.rightCols(n);
}

bool solve_left(const PolyMatrix& b, const PolyMatrix& a, PolyMatrix& x) {
  if (a.cols() != b.cols()) throw DimensionError("solve_left: column mismatch");
  const Eigen::Index nb = b.rows(), na = a.rows();
  PolyMatrix aug(b.cols(), nb + na);
  aug << b.transpose(), a.transpose();
  auto r = rref(aug);
  x = zero_matrix(na, nb);
  for (Eigen::Index i = 0; i < r.rank; ++i) {
    const Eigen::Index pc = r.pivots[i];
    if (pc >= nb) return false;
    for (Eigen::Index j = 0; j < na; ++j) x(j, pc) = r.matrix(i, nb + j);
  }
  return true;
}

}  // namespace eaqcc
