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

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eaqcc {

// Binary Laurent polynomial in the delay operator D. Stored as a dense bit
// block starting at the lowest exponent; the zero polynomial has no words.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c);  // 0 or 1 (mod 2)

  static LaurentPoly monomial(std::int64_t e);
  static LaurentPoly from_support(const std::vector<std::int64_t>& exps);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const;
  bool is_monomial() const;
  std::int64_t low() const;
  std::int64_t high() const;
  std::int64_t span() const { return high() - low(); }
  bool coeff(std::int64_t e) const;
  std::size_t weight() const;
  std::vector<std::int64_t> support() const;

  LaurentPoly shifted(std::int64_t k) const;
  LaurentPoly time_reverse() const;
  // Keep exponents divisible by l and divide them by l.
  LaurentPoly floor_fractional(int l) const;
  bool is_symmetric() const { return *this == time_reverse(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.words_ == b.words_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  // a = q*b + r with span(r) < span(b), or r = 0.
  static std::pair<LaurentPoly, LaurentPoly> divmod(
      const LaurentPoly& a, const LaurentPoly& b);
  // Greatest common divisor normalized to lowest exponent 0.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
  // Exact quotient; throws if b does not divide a.
  LaurentPoly div_exact(const LaurentPoly& b) const;

  std::string str() const;
  std::size_t hash() const;

 private:
  std::int64_t low_ = 0;
  std::vector<std::uint64_t> words_;

  void normalize();
};

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Ratio of binary Laurent polynomials in canonical form: den has lowest
// exponent 0 and gcd(num, den) = 1; zero is 0/1.
class RationalPoly {
 public:
  RationalPoly() : den_(1) {}
  RationalPoly(int c) : num_(c), den_(1) {}
  RationalPoly(LaurentPoly p) : num_(std::move(p)), den_(1) {}
  RationalPoly(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_monomial() const { return is_polynomial() && num_.is_monomial(); }
  LaurentPoly to_laurent() const;

  RationalPoly inverse() const;
  RationalPoly time_reverse() const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o) { return *this += o; }
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator/=(const RationalPoly& o) {
    return *this *= o.inverse();
  }
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) {
    return a += b;
  }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) {
    return a += b;
  }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) {
    return a *= b;
  }
  friend RationalPoly operator/(RationalPoly a, const RationalPoly& b) {
    return a /= b;
  }
  RationalPoly operator-() const { return *this; }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const RationalPoly& f) { return f.is_zero(); }
inline RationalPoly inverse(const RationalPoly& f) { return f.inverse(); }
inline RationalPoly time_reverse(const RationalPoly& f) {
  return f.time_reverse();
}
inline LaurentPoly time_reverse(const LaurentPoly& f) {
  return f.time_reverse();
}

// Text grammar: terms `1`, `D`, `D^k`, `D^-k` joined by `+`; a rational is a
// polynomial or `(poly)/(poly)`. `column` offsets error positions.
LaurentPoly parse_laurent(std::string_view s, int line = 1, int column = 1);
RationalPoly parse_rational(std::string_view s, int line = 1, int column = 1);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

}  // namespace eaqcc

template <>
struct std::hash<eaqcc::LaurentPoly> {
  std::size_t operator()(const eaqcc::LaurentPoly& p) const {
    return p.hash();
  }
};
