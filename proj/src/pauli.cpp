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

#include "eaqcc/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "eaqcc/errors.hpp"

namespace eaqcc {

CheckMatrix::CheckMatrix(Eigen::Index r, Eigen::Index n)
    : z(zero_matrix(r, n)), x(zero_matrix(r, n)) {}

CheckMatrix::CheckMatrix(PolyMatrix z_, PolyMatrix x_)
    : z(std::move(z_)), x(std::move(x_)) {
  if (z.rows() != x.rows() || z.cols() != x.cols())
    throw DimensionError("Z and X blocks differ in shape");
}

PolyMatrix CheckMatrix::stacked() const {
  PolyMatrix m(rows(), 2 * frames());
  m << z, x;
  return m;
}

CheckMatrix CheckMatrix::from_stacked(const PolyMatrix& m) {
  if (m.cols() % 2) throw DimensionError("odd column count");
  const Eigen::Index n = m.cols() / 2;
  return CheckMatrix(m.leftCols(n), m.rightCols(n));
}

CheckMatrix CheckMatrix::rows_subset(
    const std::vector<Eigen::Index>& idx) const {
  CheckMatrix out(static_cast<Eigen::Index>(idx.size()), frames());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.z.row(static_cast<Eigen::Index>(i)) = z.row(idx[i]);
    out.x.row(static_cast<Eigen::Index>(i)) = x.row(idx[i]);
  }
  return out;
}

bool CheckMatrix::is_polynomial() const {
  return is_polynomial_matrix(z) && is_polynomial_matrix(x);
}

bool row_space_equal(const CheckMatrix& a, const CheckMatrix& b) {
  return a.frames() == b.frames() && row_space_equal(a.stacked(), b.stacked());
}

Eigen::Index rank(const CheckMatrix& h) { return rank(h.stacked()); }

std::string PauliFrameSeq::str() const {
  std::string s;
  if (start_offset != 0) s += "@" + std::to_string(start_offset) + " ";
  s += "|";
  for (const auto& f : frames) s += f + "|";
  return s;
}

PauliFrameSeq PauliFrameSeq::parse(std::string_view text, int line) {
  PauliFrameSeq seq;
  std::size_t i = 0;
  auto fail = [&](const std::string& m) {
    throw ParseError(m, line, static_cast<int>(i) + 1);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  if (i < text.size() && text[i] == '@') {
    ++i;
    std::size_t j = i;
    if (j < text.size() && text[j] == '-') ++j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == i || (j == i + 1 && text[i] == '-')) fail("expected frame offset");
    seq.start_offset = std::stoi(std::string(text.substr(i, j - i)));
    i = j;
    skip();
  }
  if (i >= text.size() || text[i] != '|') fail("expected '|'");
  ++i;
  std::string cur;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '|') {
      if (cur.empty()) fail("empty frame");
      if (seq.frame_size == 0) seq.frame_size = static_cast<int>(cur.size());
      if (static_cast<int>(cur.size()) != seq.frame_size)
        fail("inconsistent frame size");
      seq.frames.push_back(cur);
      cur.clear();
    } else if (ch == 'I' || ch == 'X' || ch == 'Y' || ch == 'Z') {
      cur += ch;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      skip();
      if (i < text.size()) fail("unexpected text after frames");
      break;
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
    ++i;
  }
  if (!cur.empty()) fail("missing closing '|'");
  if (seq.frames.empty()) fail("no frames");
  return seq;
}

CheckMatrix pauli_to_binary(
    const std::vector<PauliFrameSeq>& seqs, bool pin_offsets) {
  if (seqs.empty()) throw DimensionError("empty generator list");
  const int n = seqs.front().frame_size;
  CheckMatrix h(static_cast<Eigen::Index>(seqs.size()), n);
  for (std::size_t r = 0; r < seqs.size(); ++r) {
    const auto& s = seqs[r];
    if (s.frame_size != n) throw InconsistentFrameSize("inconsistent frame size");
    std::vector<std::vector<std::int64_t>> zs(n), xs(n);
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    for (std::size_t f = 0; f < s.frames.size(); ++f) {
      const std::int64_t e = s.start_offset + static_cast<std::int64_t>(f);
      for (int q = 0; q < n; ++q) {
        const char p = s.frames[f][q];
        if (p == 'Z' || p == 'Y') zs[q].push_back(e);
        if (p == 'X' || p == 'Y') xs[q].push_back(e);
        if (p != 'I') lo = std::min(lo, e);
      }
    }
    const std::int64_t shift =
        (pin_offsets || lo == std::numeric_limits<std::int64_t>::max()) ? 0
                                                                         : -lo;
    const auto row = static_cast<Eigen::Index>(r);
    for (int q = 0; q < n; ++q) {
      h.z(row, q) = LaurentPoly::from_support(zs[q]).shifted(shift);
      h.x(row, q) = LaurentPoly::from_support(xs[q]).shifted(shift);
    }
  }
  return h;
}

std::vector<PauliFrameSeq> binary_to_pauli(const CheckMatrix& h) {
  std::vector<PauliFrameSeq> out;
  const auto n = static_cast<int>(h.frames());
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    std::vector<LaurentPoly> zs(n), xs(n);
    for (int q = 0; q < n; ++q) {
      zs[q] = h.z(r, q).to_laurent();
      xs[q] = h.x(r, q).to_laurent();
      for (const auto* p : {&zs[q], &xs[q]})
        if (!p->is_zero()) {
          lo = std::min(lo, p->low());
          hi = std::max(hi, p->high());
        }
    }
    PauliFrameSeq s;
    s.frame_size = n;
    if (hi < lo) {
      s.frames.assign(1, std::string(n, 'I'));
      out.push_back(s);
      continue;
    }
    s.start_offset = static_cast<int>(lo);
    for (std::int64_t e = lo; e <= hi; ++e) {
      std::string f(n, 'I');
      for (int q = 0; q < n; ++q) {
        const bool zb = zs[q].coeff(e), xb = xs[q].coeff(e);
        f[q] = zb && xb ? 'Y' : zb ? 'Z' : xb ? 'X' : 'I';
      }
      s.frames.push_back(f);
    }
    out.push_back(s);
  }
  return out;
}

Gf4Poly operator*(const Gf4Poly& p, const Gf4Poly& q) {
  const LaurentPoly bb = p.b * q.b;
  return {p.a * q.a + bb, p.a * q.b + p.b * q.a + bb};
}

std::string Gf4Poly::str() const {
  if (is_zero()) return "0";
  std::vector<std::int64_t> exps = a.support();
  for (auto e : b.support()) exps.push_back(e);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::string s;
  for (auto e : exps) {
    const bool ca = a.coeff(e), cb = b.coeff(e);
    const char* coef = ca && cb ? "W" : cb ? "w" : "";
    if (!s.empty()) s += '+';
    if (e == 0) {
      s += *coef ? coef : "1";
    } else {
      s += coef;
      s += e == 1 ? std::string("D") : "D^" + std::to_string(e);
    }
  }
  return s;
}

Gf4Poly Gf4Poly::parse(std::string_view s, int line, int column) {
  std::size_t i = 0;
  auto fail = [&](const std::string& m) {
    throw ParseError(m, line, column + static_cast<int>(i));
  };
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto peek = [&] { return i < s.size() ? s[i] : '\0'; };
  Gf4Poly p;
  skip();
  if (peek() == '0') {
    ++i;
    skip();
    if (i != s.size()) fail("unexpected text after 0");
    return p;
  }
  for (;;) {
    skip();
    Gf4Poly coef = one();
    bool has_coef = false;
    if (peek() == '1') {
      ++i;
      has_coef = true;
    } else if (peek() == 'w') {
      coef = omega();
      ++i;
      has_coef = true;
    } else if (peek() == 'W') {
      coef = omega_bar();
      ++i;
      has_coef = true;
    }
    skip();
    if (has_coef && peek() == '*') {
      ++i;
      skip();
      if (peek() != 'D') fail("expected 'D' after '*'");
    }
    std::int64_t e = 0;
    if (peek() == 'D') {
      ++i;
      e = 1;
      if (peek() == '^') {
        ++i;
        bool neg = false;
        if (peek() == '-') {
          neg = true;
          ++i;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected exponent after '^'");
        e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          e = e * 10 + (s[i] - '0');
          ++i;
        }
        if (neg) e = -e;
      }
    } else if (!has_coef) {
      fail("expected term");
    }
    p = p + Gf4Poly{coef.a.shifted(e), coef.b.shifted(e)};
    skip();
    if (peek() != '+') break;
    ++i;
  }
  if (i != s.size()) fail(std::string("unexpected '") + s[i] + "'");
  return p;
}

CheckMatrix gf4_import(const Gf4Matrix& h) {
  const Eigen::Index r = h.rows, n = h.cols;
  CheckMatrix out(2 * r, n);
  const Gf4Poly mult[2] = {Gf4Poly::omega_bar(), Gf4Poly::omega()};
  for (int half = 0; half < 2; ++half)
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index q = 0; q < n; ++q) {
        const Gf4Poly e = mult[half] * h(i, q);
        // gamma: a + b*w  ->  z = a, x = a + b
        out.z(half * r + i, q) = e.a;
        out.x(half * r + i, q) = e.a + e.b;
      }
  return out;
}

}  // namespace eaqcc
