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

#include "eaqcc/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "eaqcc/errors.hpp"

namespace eaqcc {

namespace {

using Words = std::vector<std::uint64_t>;

bool get_bit(const Words& w, std::size_t i) {
  return (i >> 6) < w.size() && ((w[i >> 6] >> (i & 63)) & 1u);
}

void flip_bit(Words& w, std::size_t i) {
  if ((i >> 6) >= w.size()) w.resize((i >> 6) + 1, 0);
  w[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

// dst ^= src << shift (bit shift)
void xor_shifted(Words& dst, const Words& src, std::size_t shift) {
  if (src.empty()) return;
  const std::size_t ws = shift >> 6, bs = shift & 63;
  const std::size_t need = src.size() + ws + 1;
  if (dst.size() < need) dst.resize(need, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + ws] ^= src[i] << bs;
    if (bs) dst[i + ws + 1] ^= src[i] >> (64 - bs);
  }
}

void trim(Words& w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

// Index of highest set bit; w must be trimmed and nonempty.
std::size_t top_bit(const Words& w) {
  return (w.size() - 1) * 64 + (63 - std::countl_zero(w.back()));
}

Words shift_right(const Words& w, std::size_t k) {
  const std::size_t ws = k >> 6, bs = k & 63;
  if (ws >= w.size()) return {};
  Words out(w.size() - ws, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = w[i + ws] >> bs;
    if (bs && i + ws + 1 < w.size()) out[i] |= w[i + ws + 1] << (64 - bs);
  }
  trim(out);
  return out;
}

// Polynomial long division on bit blocks with bit 0 the constant term.
void poly_divmod(const Words& a, const Words& b, Words& q, Words& r) {
  r = a;
  trim(r);
  q.clear();
  const std::size_t db = top_bit(b);
  while (!r.empty() && top_bit(r) >= db) {
    const std::size_t s = top_bit(r) - db;
    flip_bit(q, s);
    xor_shifted(r, b, s);
    trim(r);
  }
  trim(q);
}

}  // namespace

LaurentPoly::LaurentPoly(int c) {
  if (c & 1) words_ = {1};
}

LaurentPoly LaurentPoly::monomial(std::int64_t e) {
  LaurentPoly p;
  p.low_ = e;
  p.words_ = {1};
  return p;
}

LaurentPoly LaurentPoly::from_support(const std::vector<std::int64_t>& exps) {
  if (exps.empty()) return {};
  const std::int64_t lo = *std::min_element(exps.begin(), exps.end());
  LaurentPoly p;
  p.low_ = lo;
  for (std::int64_t e : exps) flip_bit(p.words_, static_cast<std::size_t>(e - lo));
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  trim(words_);
  if (words_.empty()) {
    low_ = 0;
    return;
  }
  std::size_t k = 0;
  while (words_[k >> 6] == 0) k += 64;
  k += std::countr_zero(words_[k >> 6]);
  if (k) {
    words_ = shift_right(words_, k);
    low_ += static_cast<std::int64_t>(k);
  }
}

bool LaurentPoly::is_one() const {
  return low_ == 0 && words_.size() == 1 && words_[0] == 1;
}

bool LaurentPoly::is_monomial() const {
  return words_.size() == 1 && words_[0] == 1;
}

std::int64_t LaurentPoly::low() const {
  if (is_zero()) throw Error("low() of the zero polynomial");
  return low_;
}

std::int64_t LaurentPoly::high() const {
  if (is_zero()) throw Error("high() of the zero polynomial");
  return low_ + static_cast<std::int64_t>(top_bit(words_));
}

bool LaurentPoly::coeff(std::int64_t e) const {
  if (is_zero() || e < low_) return false;
  return get_bit(words_, static_cast<std::size_t>(e - low_));
}

std::size_t LaurentPoly::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<std::int64_t> LaurentPoly::support() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(low_ + static_cast<std::int64_t>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::time_reverse() const {
  if (is_zero()) return {};
  const std::size_t top = top_bit(words_);
  LaurentPoly p;
  p.low_ = -high();
  p.words_.assign(words_.size(), 0);
  for (std::int64_t e : support()) {
    const auto i = static_cast<std::size_t>(e - low_);
    flip_bit(p.words_, top - i);
  }
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::floor_fractional(int l) const {
  if (l < 1) throw Error("floor_fractional: l must be positive");
  std::vector<std::int64_t> kept;
  for (std::int64_t e : support()) {
    std::int64_t m = e % l;
    if (m == 0) kept.push_back(e / l);
  }
  return from_support(kept);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.low_ >= low_) {
    xor_shifted(words_, o.words_, static_cast<std::size_t>(o.low_ - low_));
  } else {
    Words w = o.words_;
    xor_shifted(w, words_, static_cast<std::size_t>(low_ - o.low_));
    words_ = std::move(w);
    low_ = o.low_;
  }
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPoly& s = a.weight() <= b.weight() ? a : b;
  const LaurentPoly& t = &s == &a ? b : a;
  LaurentPoly p;
  p.low_ = a.low_ + b.low_;
  for (std::int64_t e : s.support())
    xor_shifted(p.words_, t.words_, static_cast<std::size_t>(e - s.low_));
  p.normalize();
  return p;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.low_ != b.low_) return a.low_ < b.low_;
  return a.words_ < b.words_;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(
    const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {{}, {}};
  Words q, r;
  poly_divmod(a.words_, b.words_, q, r);
  LaurentPoly qp, rp;
  qp.words_ = std::move(q);
  qp.low_ = a.low_ - b.low_;
  qp.normalize();
  rp.words_ = std::move(r);
  rp.low_ = a.low_;
  rp.normalize();
  return {qp, rp};
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Words x = a.words_, y = b.words_, q, r;
  while (!y.empty()) {
    poly_divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  LaurentPoly g;
  g.words_ = std::move(x);
  g.normalize();
  g.low_ = 0;
  return g;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly::gcd(a, b);
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw Error("div_exact: divisor does not divide");
  return q;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::int64_t e : support()) {
    if (!s.empty()) s += '+';
    if (e == 0)
      s += '1';
    else if (e == 1)
      s += 'D';
    else
      s += "D^" + std::to_string(e);
  }
  return s;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<std::int64_t>{}(low_);
  for (auto w : words_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
  return h;
}

RationalPoly::RationalPoly(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const std::int64_t s = den.low();
  num = num.shifted(-s);
  den = den.shifted(-s);
  if (!den.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(num, den);
    if (!g.is_one()) {
      num = num.div_exact(g);
      den = den.div_exact(g);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

LaurentPoly RationalPoly::to_laurent() const {
  if (!is_polynomial()) throw RationalEntry("entry " + str() + " is not a Laurent polynomial");
  return num_;
}

RationalPoly RationalPoly::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RationalPoly(den_, num_);
}

RationalPoly RationalPoly::time_reverse() const {
  if (is_polynomial()) return RationalPoly(num_.time_reverse());
  return RationalPoly(num_.time_reverse(), den_.time_reverse());
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    LaurentPoly n = num_ + o.num_;
    if (den_.is_one()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = RationalPoly(std::move(n), den_);
  }
  return *this = RationalPoly(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalPoly();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = RationalPoly(num_ * o.num_, den_ * o.den_);
}

std::string RationalPoly::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
  return os << p.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int line, int column)
      : s_(s), line_(line), col0_(column) {}

  RationalPoly rational() {
    skip();
    if (peek() == '(') {
      LaurentPoly n = parenthesized();
      skip();
      if (peek() != '/') fail("expected '/' after parenthesized numerator");
      ++i_;
      skip();
      if (peek() != '(') fail("expected '(' for denominator");
      LaurentPoly d = parenthesized();
      end();
      if (d.is_zero()) fail("zero denominator");
      return RationalPoly(n, d);
    }
    LaurentPoly p = poly();
    end();
    return p;
  }

  LaurentPoly laurent() {
    LaurentPoly p = poly();
    end();
    return p;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  int line_, col0_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + static_cast<int>(i_));
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  void end() {
    skip();
    if (i_ != s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
  }

  LaurentPoly parenthesized() {
    ++i_;
    LaurentPoly p = poly();
    skip();
    if (peek() != ')') fail("expected ')'");
    ++i_;
    return p;
  }

  LaurentPoly poly() {
    LaurentPoly p;
    skip();
    if (peek() == '0') {
      ++i_;
      return p;
    }
    for (;;) {
      p += term();
      skip();
      if (peek() != '+') return p;
      ++i_;
    }
  }

  LaurentPoly term() {
    skip();
    if (peek() == '1') {
      ++i_;
      return LaurentPoly(1);
    }
    if (peek() != 'D') fail("expected term '1' or 'D'");
    ++i_;
    if (peek() != '^') return LaurentPoly::monomial(1);
    ++i_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected exponent after '^'");
    std::int64_t k = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      k = k * 10 + (s_[i_] - '0');
      if (k > (std::int64_t{1} << 40)) fail("exponent out of range");
      ++i_;
    }
    return LaurentPoly::monomial(neg ? -k : k);
  }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view s, int line, int column) {
  return PolyParser(s, line, column).laurent();
}

RationalPoly parse_rational(std::string_view s, int line, int column) {
  return PolyParser(s, line, column).rational();
}

}  // namespace eaqcc
