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

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "eaqcc/pauli.hpp"

namespace eaqcc {

// Entries are Laurent polynomials for polynomial rows and rational functions
// for rational rows; Omega(D) = Omega^T(D^-1) either way.
using OmegaMatrix = PolyMatrix;

// (h1 . h2)(D) = z1(D) x2(D^-1) + x1(D) z2(D^-1).
template <typename Z1, typename X1, typename Z2, typename X2>
typename Z1::Scalar shifted_symplectic_product(
    const Eigen::MatrixBase<Z1>& z1, const Eigen::MatrixBase<X1>& x1,
    const Eigen::MatrixBase<Z2>& z2, const Eigen::MatrixBase<X2>& x2) {
  typename Z1::Scalar s(0);
  for (Eigen::Index q = 0; q < z1.size(); ++q) {
    if (!is_zero(z1(q)) && !is_zero(x2(q))) s += z1(q) * time_reverse(x2(q));
    if (!is_zero(x1(q)) && !is_zero(z2(q))) s += x1(q) * time_reverse(z2(q));
  }
  return s;
}

RationalPoly shifted_symplectic_product(
    const CheckMatrix& h, Eigen::Index i, const CheckMatrix& g,
    Eigen::Index j);

// Omega(D) = Z(D) X^T(D^-1) + X(D) Z^T(D^-1).
OmegaMatrix omega_matrix(const CheckMatrix& h);
// Products between the rows of a and the rows of b.
PolyMatrix cross_omega(const CheckMatrix& a, const CheckMatrix& b);

bool is_symmetric_omega(const OmegaMatrix& om);

struct SwapOp {
  Eigen::Index i, j;
};
struct ScaleOp {
  Eigen::Index i;
  RationalPoly c;
};
// row i <- row i + c * row j
struct AddOp {
  Eigen::Index i, j;
  RationalPoly c;
};
using RowOp = std::variant<SwapOp, ScaleOp, AddOp>;
using RowOpRecord = std::vector<RowOp>;

// Text form with 1-based rows: `swap i j`, `scale i (c)`, `add i j (c)`.
std::string row_op_str(const RowOp& op);
RowOp parse_row_op(const std::string& line, int line_no = 1);

void apply_row_op(CheckMatrix& h, const RowOp& op);
CheckMatrix apply_row_ops(CheckMatrix h, const RowOpRecord& ops);
// The matrix R(D) with apply_row_ops(h, ops) = R h.
PolyMatrix row_ops_matrix(Eigen::Index r, const RowOpRecord& ops);

// l-expansion: entry (a*r + i, b*n + q) = floor(D^{(a-b)/l} h_iq(D^{1/l})).
CheckMatrix expand(const CheckMatrix& h, int l);
// Omega of the expansion computed from Omega alone; independent of expand().
OmegaMatrix expanded_omega(const OmegaMatrix& om, int l);

}  // namespace eaqcc
