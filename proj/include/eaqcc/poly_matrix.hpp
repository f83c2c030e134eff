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

#include <Eigen/Core>
#include <vector>

#include "eaqcc/poly.hpp"

namespace Eigen {

template <>
struct NumTraits<eaqcc::RationalPoly>
    : GenericNumTraits<eaqcc::RationalPoly> {
  typedef eaqcc::RationalPoly Real;
  typedef eaqcc::RationalPoly NonInteger;
  typedef eaqcc::RationalPoly Nested;
  typedef eaqcc::RationalPoly Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen

namespace eaqcc {

template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVectorT = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using PolyMatrix = MatrixT<RationalPoly>;
using PolyRow = RowVectorT<RationalPoly>;

template <typename Derived>
auto time_reverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return m.unaryExpr([](const Scalar& f) { return time_reverse(f); });
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Derived>
bool is_polynomial_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_polynomial()) return false;
  return true;
}

// Product without Eigen's blocked kernels, which assume cheap scalars.
template <typename A, typename B>
MatrixT<typename A::Scalar> multiply(
    const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  MatrixT<typename A::Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      typename A::Scalar s(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        if (!is_zero(a(i, k)) && !is_zero(b(k, j))) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

template <typename Scalar>
struct RrefResult {
  MatrixT<Scalar> matrix;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivots;
};

// Reduced row-echelon form over a field. Pivot: leftmost column, lowest row.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(
    const Eigen::MatrixBase<Derived>& in) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> res;
  MatrixT<Scalar>& m = res.matrix;
  m = in;
  Eigen::Index piv = 0;
  for (Eigen::Index c = 0; c < m.cols() && piv < m.rows(); ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index r = piv; r < m.rows(); ++r)
      if (!is_zero(m(r, c))) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != piv) m.row(p).swap(m.row(piv));
    const Scalar iv = inverse(m(piv, c));
    for (Eigen::Index j = c; j < m.cols(); ++j)
      if (!is_zero(m(piv, j))) m(piv, j) = m(piv, j) * iv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == piv || is_zero(m(r, c))) continue;
      const Scalar f = m(r, c);
      for (Eigen::Index j = c; j < m.cols(); ++j)
        if (!is_zero(m(piv, j))) m(r, j) -= f * m(piv, j);
    }
    res.pivots.push_back(c);
    ++piv;
  }
  res.rank = piv;
  return res;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

// Row spaces over the field of fractions coincide.
template <typename A, typename B>
bool row_space_equal(
    const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.cols() != b.cols()) return false;
  auto ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  return ra.matrix.topRows(ra.rank) == rb.matrix.topRows(rb.rank);
}

// Solve x * b = a for the row vectors of a over the field; returns false if
// some row of a is outside the row space of b.
bool solve_left(const PolyMatrix& b, const PolyMatrix& a, PolyMatrix& x);

PolyMatrix identity_matrix(Eigen::Index n);
PolyMatrix zero_matrix(Eigen::Index r, Eigen::Index c);
PolyMatrix inverse_matrix(const PolyMatrix& m);

}  // namespace eaqcc
