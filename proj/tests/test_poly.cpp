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

#include <gtest/gtest.h>

#include <random>

#include "eaqcc/errors.hpp"
#include "eaqcc/poly.hpp"
#include "testdata.hpp"

namespace eaqcc {
namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }
RationalPoly R(const char* s) { return parse_rational(s); }

TEST(LaurentPoly, AdditionCancels) {
  EXPECT_EQ(P("1+D") + P("D+D^2"), P("1+D^2"));
  EXPECT_EQ(P("1+D^3") + P("1+D^3"), LaurentPoly());
  EXPECT_EQ(P("D^-1+D") + P("D"), P("D^-1"));
}

TEST(LaurentPoly, MultiplicationIsFrobeniusOnSquares) {
  EXPECT_EQ(P("1+D") * P("1+D"), P("1+D^2"));
  EXPECT_EQ(P("D^-1") * P("D"), LaurentPoly(1));
}

TEST(LaurentPoly, TimeReverse) {
  EXPECT_EQ(P("D^-1+D").time_reverse(), P("D^-1+D"));
  EXPECT_EQ(P("1+D").time_reverse(), P("1+D^-1"));
  EXPECT_TRUE(P("D^-1+D").is_symmetric());
}

TEST(LaurentPoly, FloorFractionalInScaledExponents) {
  // D^(1/2) + D is 2-scaled as D + D^2.
  EXPECT_EQ(P("D+D^2").floor_fractional(2), P("D"));
  // 1 + D^(3/2) is 1 + D^3.
  EXPECT_EQ(P("1+D^3").floor_fractional(2), LaurentPoly(1));
  EXPECT_EQ(P("D^-4+D^-3").floor_fractional(2), P("D^-2"));
}

TEST(LaurentPoly, GcdMatchesExhaustiveDivisorSearch) {
  // Oracle: largest-degree polynomial of degree <= 2 dividing both.
  const LaurentPoly a = P("1+D^2"), b = P("1+D");
  LaurentPoly best(1);
  for (int m = 1; m < 8; ++m) {
    std::vector<std::int64_t> s;
    for (int e = 0; e < 3; ++e)
      if (m >> e & 1) s.push_back(e);
    const LaurentPoly d = LaurentPoly::from_support(s);
    if (LaurentPoly::divmod(a, d).second.is_zero() &&
        LaurentPoly::divmod(b, d).second.is_zero() && d.span() > best.span())
      best = d;
  }
  EXPECT_EQ(gcd(a, b), best);
  EXPECT_EQ(best, P("1+D"));
}

TEST(LaurentPoly, DivmodRemainderIsShorter) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const LaurentPoly a = testdata::random_poly(rng, 10, -3);
    LaurentPoly b = testdata::random_poly(rng, 5, -2);
    if (b.is_zero()) b = LaurentPoly(1);
    auto [q, r] = LaurentPoly::divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    if (!r.is_zero()) EXPECT_LT(r.span(), b.span());
  }
}

TEST(LaurentPoly, RandomRingLaws) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const LaurentPoly f = testdata::random_poly(rng, 8, -4);
    const LaurentPoly g = testdata::random_poly(rng, 8, -4);
    const LaurentPoly h = testdata::random_poly(rng, 8, -4);
    EXPECT_EQ(f + g, g + f);
    EXPECT_TRUE((f + f).is_zero());
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g).time_reverse(), f.time_reverse() * g.time_reverse());
    EXPECT_EQ(f.time_reverse().time_reverse(), f);
  }
}

TEST(LaurentPoly, SupportRoundTrip) {
  const LaurentPoly f = LaurentPoly::from_support({-3, 0, 5, 70, 5});
  EXPECT_EQ(f.support(), (std::vector<std::int64_t>{-3, 0, 70}));
  EXPECT_EQ(f.low(), -3);
  EXPECT_EQ(f.high(), 70);
  EXPECT_EQ(f.weight(), 3u);
}

TEST(LaurentPoly, TextFormat) {
  EXPECT_EQ(P("D^2+1+D").str(), "1+D+D^2");
  EXPECT_EQ(P("D^-1 + 1").str(), "D^-1+1");
  EXPECT_EQ(LaurentPoly().str(), "0");
  EXPECT_EQ(P("D+D"), LaurentPoly());
}

TEST(LaurentPoly, MalformedExponentNamesPosition) {
  try {
    parse_laurent("1+D^", 4, 10);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_GE(e.column(), 13);
  }
  EXPECT_THROW(parse_laurent("1+X"), ParseError);
  EXPECT_THROW(parse_laurent(""), ParseError);
}

TEST(RationalPoly, PrintedStandardFormEntry) {
  const RationalPoly f = RationalPoly(P("D^2+D")) / RationalPoly(P("1+D+D^2"));
  EXPECT_EQ(f, R("(D+D^2)/(1+D+D^2)"));
  EXPECT_FALSE(f.is_polynomial());
}

TEST(RationalPoly, CanonicalFormIsUnique) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const LaurentPoly n = testdata::random_poly(rng, 5, -2);
    LaurentPoly d = testdata::random_poly(rng, 4, -1);
    LaurentPoly m = testdata::random_poly(rng, 3, -3);
    if (d.is_zero()) d = LaurentPoly(1);
    if (m.is_zero()) m = P("D^2");
    const RationalPoly a(n, d), b(n * m, d * m);
    EXPECT_EQ(a.num(), b.num());
    EXPECT_EQ(a.den(), b.den());
    EXPECT_EQ(a.den().low(), 0);
    EXPECT_TRUE(gcd(a.num(), a.den()).is_one() || a.is_zero());
  }
}

TEST(RationalPoly, FieldLaws) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    auto rnd = [&] {
      LaurentPoly d = testdata::random_poly(rng, 3);
      if (d.is_zero()) d = LaurentPoly(1);
      return RationalPoly(testdata::random_poly(rng, 4, -2), d);
    };
    const RationalPoly f = rnd(), g = rnd(), h = rnd();
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f * g).time_reverse(), f.time_reverse() * g.time_reverse());
    if (!f.is_zero()) EXPECT_TRUE((f * f.inverse()).is_one());
  }
}

TEST(RationalPoly, DivisionByZeroThrows) {
  EXPECT_THROW(RationalPoly(1) / RationalPoly(), DivisionByZero);
  EXPECT_THROW(RationalPoly(LaurentPoly(1), LaurentPoly()), DivisionByZero);
}

TEST(RationalPoly, ToLaurentRequiresPolynomial) {
  EXPECT_EQ(R("(D+D^2)/(1+D)").to_laurent(), P("D"));
  EXPECT_THROW(R("(1)/(1+D)").to_laurent(), RationalEntry);
}

TEST(RationalPoly, ParseAndPrint) {
  EXPECT_EQ(R("(1)/(1+D^-1+D^-2)"), R("(D^2)/(1+D+D^2)"));
  EXPECT_EQ(R("(1)/(1+D)").str(), "(1)/(1+D)");
  EXPECT_EQ(R("D^-1+1").str(), "D^-1+1");
  EXPECT_THROW(parse_rational("(1+D"), ParseError);
}

}  // namespace
}  // namespace eaqcc
