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
#include <string_view>
#include <vector>

#include "eaqcc/poly_matrix.hpp"

namespace eaqcc {

// r generators over n qubits per frame, displayed as [Z(D)|X(D)].
struct CheckMatrix {
  PolyMatrix z;
  PolyMatrix x;

  CheckMatrix() = default;
  CheckMatrix(Eigen::Index r, Eigen::Index n);
  CheckMatrix(PolyMatrix z_, PolyMatrix x_);

  Eigen::Index rows() const { return z.rows(); }
  Eigen::Index frames() const { return z.cols(); }

  // The r x 2n block [z | x].
  PolyMatrix stacked() const;
  static CheckMatrix from_stacked(const PolyMatrix& m);

  CheckMatrix rows_subset(const std::vector<Eigen::Index>& idx) const;
  bool is_polynomial() const;

  friend bool operator==(const CheckMatrix& a, const CheckMatrix& b) {
    return a.z.rows() == b.z.rows() && a.z.cols() == b.z.cols() &&
           a.z == b.z && a.x == b.x;
  }
};

bool row_space_equal(const CheckMatrix& a, const CheckMatrix& b);
Eigen::Index rank(const CheckMatrix& h);

// A finite-weight generator as a sequence of frames of Pauli letters.
struct PauliFrameSeq {
  int frame_size = 0;
  int start_offset = 0;
  std::vector<std::string> frames;

  // Bar notation, e.g. |XXX|XZY|.
  std::string str() const;
  static PauliFrameSeq parse(std::string_view text, int line = 1);

  friend bool operator==(const PauliFrameSeq&, const PauliFrameSeq&) =
      default;
};

// Frame j contributes D^j. Unless offsets are pinned, each row is shifted so
// its lowest used frame lands on exponent 0.
CheckMatrix pauli_to_binary(
    const std::vector<PauliFrameSeq>& seqs, bool pin_offsets = false);
// Throws RationalEntry when an entry has a nontrivial denominator.
std::vector<PauliFrameSeq> binary_to_pauli(const CheckMatrix& h);

// Element a + b*w of GF(4)[D, D^-1] with w^2 = w + 1.
struct Gf4Poly {
  LaurentPoly a;
  LaurentPoly b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend Gf4Poly operator+(const Gf4Poly& p, const Gf4Poly& q) {
    return {p.a + q.a, p.b + q.b};
  }
  friend Gf4Poly operator*(const Gf4Poly& p, const Gf4Poly& q);
  friend bool operator==(const Gf4Poly&, const Gf4Poly&) = default;

  static Gf4Poly one() { return {LaurentPoly(1), {}}; }
  static Gf4Poly omega() { return {{}, LaurentPoly(1)}; }
  static Gf4Poly omega_bar() { return {LaurentPoly(1), LaurentPoly(1)}; }

  // Coefficient alphabet {0, 1, w, W}; terms like `wD^2`, `W*D^-1`, `1+D`.
  std::string str() const;
  static Gf4Poly parse(std::string_view s, int line = 1, int column = 1);
};

struct Gf4Matrix {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<Gf4Poly> entries;

  Gf4Matrix() = default;
  Gf4Matrix(Eigen::Index r, Eigen::Index c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r * c)) {}
  Gf4Poly& operator()(Eigen::Index i, Eigen::Index j) {
    return entries[static_cast<std::size_t>(i * cols + j)];
  }
  const Gf4Poly& operator()(Eigen::Index i, Eigen::Index j) const {
    return entries[static_cast<std::size_t>(i * cols + j)];
  }
};

// Per-symbol map 0->I, w->X, 1->Y, W->Z. Rows [W*H; w*H].
CheckMatrix gf4_import(const Gf4Matrix& h);

}  // namespace eaqcc
