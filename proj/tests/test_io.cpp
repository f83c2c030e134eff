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
#include "eaqcc/io.hpp"
#include "testdata.hpp"

namespace eaqcc {
namespace {

void expect_same(const GSResult& a, const GSResult& b) {
  EXPECT_EQ(a.h_std, b.h_std);
  EXPECT_EQ(a.l, b.l);
  EXPECT_EQ(a.c, b.c);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.k, b.k);
  ASSERT_EQ(a.ops.size(), b.ops.size());
  for (std::size_t i = 0; i < a.ops.size(); ++i)
    EXPECT_EQ(row_op_str(a.ops[i]), row_op_str(b.ops[i]));
}

void expect_same(const Circuit& a, const Circuit& b) {
  EXPECT_EQ(a.n, b.n);
  EXPECT_EQ(a.receivers, b.receivers);
  ASSERT_EQ(a.gates.size(), b.gates.size());
  for (std::size_t i = 0; i < a.gates.size(); ++i)
    EXPECT_EQ(format_gate(a.gates[i], a.receivers), format_gate(b.gates[i], b.receivers));
}

TEST(CheckMatrixIo, RoundTripsTextAndJson) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const CheckMatrix h = testdata::random_check_matrix(rng, 1 + t % 3, 1 + t % 4, 3);
    const std::string text = format_check_matrix(h);
    EXPECT_EQ(parse_check_matrix(text), h);
    EXPECT_EQ(format_check_matrix(parse_check_matrix(text)), text);
    EXPECT_EQ(check_matrix_from_json(Json::parse(check_matrix_json(h).dump())), h);
  }
  // Rational entries survive too.
  const CheckMatrix h2 = testdata::example_h2();
  EXPECT_EQ(parse_check_matrix(format_check_matrix(h2)), h2);
  EXPECT_EQ(check_matrix_from_json(check_matrix_json(h2)), h2);
}

TEST(Gf4Io, RoundTrips) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 50; ++t) {
    const Gf4Matrix g = testdata::random_gf4(rng, 2 + t % 3, 2);
    const Gf4Matrix back = parse_gf4(format_gf4(g));
    EXPECT_EQ(back.rows, g.rows);
    EXPECT_EQ(back.cols, g.cols);
    EXPECT_EQ(back.entries, g.entries);
    EXPECT_EQ(gf4_from_json(gf4_json(g)).entries, g.entries);
  }
  EXPECT_EQ(gf4_import(parse_gf4(format_gf4(testdata::example_gf4()))), testdata::example_code());
}

TEST(PauliIo, RoundTripsAndRejectsRaggedFrames) {
  const auto seqs = binary_to_pauli(testdata::example_code());
  EXPECT_EQ(parse_pauli(format_pauli(seqs)), seqs);
  EXPECT_EQ(pauli_from_json(pauli_json(seqs)), seqs);
  EXPECT_THROW(parse_pauli("pauli frames=2 generators=1\n|XZ|Y|\n"), ParseError);
  EXPECT_THROW(parse_pauli("pauli frames=2 generators=1\n|XZY|\n"), InconsistentFrameSize);
}

TEST(OmegaIo, RoundTrips) {
  const OmegaMatrix om = testdata::example_omega2();
  EXPECT_EQ(parse_omega(format_omega(om)), om);
  EXPECT_EQ(omega_from_json(omega_json(om)), om);
}

TEST(GsResultIo, RoundTrips) {
  const GSResult gs = gram_schmidt(testdata::example_code());
  expect_same(parse_gs_result(format_gs_result(gs)), gs);
  expect_same(gs_result_from_json(gs_result_json(gs)), gs);
  expect_same(parse_gs_result(format_gs_result(gram_schmidt(testdata::valid_code()))),
              gram_schmidt(testdata::valid_code()));
}

TEST(CircuitIo, RoundTripsSynthesizedAndPrinted) {
  const GSResult gs = gram_schmidt(testdata::example_code());
  auto [enc, plan] = synthesize_encoder(gs);
  const Circuit dec = synthesize_decoder(gs, plan);
  for (const Circuit& c : {enc, dec, testdata::example_encoder(testdata::SReading::ControlledZ),
                           testdata::example_decoder(testdata::SReading::Swap)}) {
    const std::string text = format_circuit(c);
    expect_same(parse_circuit(text), c);
    EXPECT_EQ(format_circuit(parse_circuit(text)), text);
    expect_same(circuit_from_json(Json::parse(circuit_json(c).dump(2))), c);
  }
}

TEST(CircuitIo, GateSyntax) {
  const Circuit c = parse_circuit(
      "circuit frames=4 receivers=1\n"
      "# comment\n"
      "\n"
      "CNOT B1 2 1+D\n"
      "H 2..4\n"
      "P 3\n"
      "CZ 2 2 D\n"
      "CZ 2 3\n"
      "ICNOT 2 (1)/(1+D)\n");
  ASSERT_EQ(c.gates.size(), 8u);
  EXPECT_EQ(format_gate(c.gates[0], 1), "CNOT B1 2 1+D");
  EXPECT_TRUE(std::holds_alternative<Hadamard>(c.gates[3]));
  EXPECT_EQ(std::get<ControlledZ>(c.gates[6]).f, LaurentPoly(1));
  EXPECT_EQ(std::get<InfiniteCnot>(c.gates[7]).g, parse_rational("(1)/(1+D)"));
  EXPECT_NE(format_circuit(c).find("H 2..4"), std::string::npos);
}

TEST(Determinism, OutputIsByteIdentical) {
  const GSResult a = gram_schmidt(testdata::example_code());
  const GSResult b = gram_schmidt(testdata::example_code());
  EXPECT_EQ(format_gs_result(a), format_gs_result(b));
  EXPECT_EQ(gs_result_json(a).dump(), gs_result_json(b).dump());
  EXPECT_EQ(format_circuit(synthesize_encoder(a).first),
            format_circuit(synthesize_encoder(b).first));
}

TEST(Errors, ParsePositions) {
  try {
    parse_check_matrix("frames=1 generators=1\nz: D^ | x: 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GE(e.column(), 4);
  }
  try {
    parse_circuit("circuit frames=2 receivers=0\nH 1\nFOO 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_check_matrix("frames=2 generators=0\n"), Error);
  EXPECT_THROW(parse_check_matrix(""), ParseError);
  EXPECT_THROW(parse_gf4("gf4 cols=2 rows=1\n1, D, 1\n"), Error);
  EXPECT_THROW(parse_circuit("circuit frames=2 receivers=0\nH 3\n"), Error);
}

TEST(Detect, Kinds) {
  const GSResult gs = gram_schmidt(testdata::example_code());
  EXPECT_EQ(detect_kind(format_gf4(testdata::example_gf4())), "gf4");
  EXPECT_EQ(detect_kind(format_check_matrix(gs.h_std)), "checkmatrix");
  EXPECT_EQ(detect_kind(format_gs_result(gs)), "gsresult");
  EXPECT_EQ(detect_kind(format_omega(testdata::example_omega())), "omega");
  EXPECT_EQ(detect_kind(format_circuit(synthesize_encoder(gs).first)), "circuit");
  EXPECT_EQ(detect_kind(format_pauli(binary_to_pauli(testdata::example_code()))), "pauli");
  EXPECT_EQ(detect_kind(stage_header("import") + format_gf4(testdata::example_gf4())), "gf4");
}

}  // namespace
}  // namespace eaqcc
