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

#include "eaqcc/symplectic.hpp"

#include <sstream>

#include "eaqcc/errors.hpp"

namespace eaqcc {

RationalPoly shifted_symplectic_product(
    const CheckMatrix& h, Eigen::Index i, const CheckMatrix& g,
    Eigen::Index j) {
  return shifted_symplectic_product(h.z.row(i), h.x.row(i), g.z.row(j),
                                    g.x.row(j));
}

PolyMatrix cross_omega(const CheckMatrix& a, const CheckMatrix& b) {
  if (a.frames() != b.frames()) throw DimensionError("frame size mismatch");
  PolyMatrix zx = multiply(a.z, time_reverse(b.x).transpose());
  PolyMatrix xz = multiply(a.x, time_reverse(b.z).transpose());
  return zx + xz;
}

OmegaMatrix omega_matrix(const CheckMatrix& h) { return cross_omega(h, h); }

bool is_symmetric_omega(const OmegaMatrix& om) {
  return om.rows() == om.cols() && om == PolyMatrix(time_reverse(om).transpose());
}

std::string row_op_str(const RowOp& op) {
  std::ostringstream os;
  if (auto* s = std::get_if<SwapOp>(&op)) {
    os << "swap " << s->i + 1 << " " << s->j + 1;
  } else if (auto* s = std::get_if<ScaleOp>(&op)) {
    os << "scale " << s->i + 1 << " (" << s->c.str() << ")";
  } else {
    const auto& a = std::get<AddOp>(op);
    os << "add " << a.i + 1 << " " << a.j + 1 << " (" << a.c.str() << ")";
  }
  return os.str();
}

RowOp parse_row_op(const std::string& line, int line_no) {
  std::istringstream is(line);
  std::string kind;
  is >> kind;
  auto index = [&]() -> Eigen::Index {
    long long v = 0;
    if (!(is >> v) || v < 1) throw ParseError("expected a 1-based row index", line_no, 1);
    return static_cast<Eigen::Index>(v - 1);
  };
  auto coef = [&]() {
    std::string rest;
    std::getline(is, rest);
    const auto b = rest.find('(');
    const auto e = rest.rfind(')');
    if (b == std::string::npos || e == std::string::npos || e < b)
      throw ParseError("expected a parenthesized coefficient", line_no, 1);
    return parse_rational(rest.substr(b + 1, e - b - 1), line_no,
                          static_cast<int>(b) + 2);
  };
  if (kind == "swap") {
    auto i = index();
    auto j = index();
    return SwapOp{i, j};
  }
  if (kind == "scale") {
    auto i = index();
    return ScaleOp{i, coef()};
  }
  if (kind == "add") {
    auto i = index();
    auto j = index();
    return AddOp{i, j, coef()};
  }
  throw ParseError("unknown row operation '" + kind + "'", line_no, 1);
}

void apply_row_op(CheckMatrix& h, const RowOp& op) {
  auto check = [&](Eigen::Index i) {
    if (i < 0 || i >= h.rows()) throw DimensionError("row index out of range");
  };
  if (auto* s = std::get_if<SwapOp>(&op)) {
    check(s->i);
    check(s->j);
    h.z.row(s->i).swap(h.z.row(s->j));
    h.x.row(s->i).swap(h.x.row(s->j));
  } else if (auto* s = std::get_if<ScaleOp>(&op)) {
    check(s->i);
    if (s->c.is_zero()) throw ZeroScale();
    for (Eigen::Index q = 0; q < h.frames(); ++q) {
      h.z(s->i, q) *= s->c;
      h.x(s->i, q) *= s->c;
    }
  } else {
    const auto& a = std::get<AddOp>(op);
    check(a.i);
    check(a.j);
    if (a.i == a.j) throw DimensionError("add: row added to itself");
    for (Eigen::Index q = 0; q < h.frames(); ++q) {
      if (!h.z(a.j, q).is_zero()) h.z(a.i, q) += a.c * h.z(a.j, q);
      if (!h.x(a.j, q).is_zero()) h.x(a.i, q) += a.c * h.x(a.j, q);
    }
  }
}

CheckMatrix apply_row_ops(CheckMatrix h, const RowOpRecord& ops) {
  for (const auto& op : ops) apply_row_op(h, op);
  return h;
}

PolyMatrix row_ops_matrix(Eigen::Index r, const RowOpRecord& ops) {
  CheckMatrix id(identity_matrix(r), zero_matrix(r, r));
  return apply_row_ops(id, ops).z;
}

CheckMatrix expand(const CheckMatrix& h, int l) {
  if (l < 1) throw DimensionError("expansion factor must be positive");
  if (!h.is_polynomial())
    throw RationalEntry("expand requires a polynomial check matrix");
  const Eigen::Index r = h.rows(), n = h.frames();
  CheckMatrix out(l * r, l * n);
  // Scaled exponents: D^{1/l} -> D, so D^{(a-b)/l} f(D^{1/l}) has exponents
  // e + a - b; keep those divisible by l.
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index q = 0; q < n; ++q) {
          const auto zi = h.z(i, q).to_laurent(), xi = h.x(i, q).to_laurent();
          out.z(a * r + i, b * n + q) = zi.shifted(a - b).floor_fractional(l);
          out.x(a * r + i, b * n + q) = xi.shifted(a - b).floor_fractional(l);
        }
  return out;
}

OmegaMatrix expanded_omega(const OmegaMatrix& om, int l) {
  if (l < 1) throw DimensionError("expansion factor must be positive");
  const Eigen::Index r = om.rows();
  OmegaMatrix out = zero_matrix(l * r, l * r);
  // floor(D^{a/l} w(D^{1/l}) D^{-b/l}) per block (a, b).
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) {
          const LaurentPoly w = om(i, j).to_laurent();
          std::vector<std::int64_t> kept;
          for (std::int64_t e : w.support()) {
            const std::int64_t k = e + a - b;
            if (k % l == 0) kept.push_back(k / l);
          }
          out(a * r + i, b * r + j) = LaurentPoly::from_support(kept);
        }
  return out;
}

}  // namespace eaqcc
