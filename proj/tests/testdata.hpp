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

// Matrices and circuits printed in the reference text, transcribed
// independently of the library algorithms, plus seeded random generators.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "eaqcc/circuit.hpp"

namespace eaqcc::testdata {

using Rows = std::vector<std::vector<std::string>>;

// Entries in the polynomial grammar; rational entries allowed.
PolyMatrix poly_matrix(const Rows& rows);
CheckMatrix check_matrix(const Rows& z, const Rows& x);

// g(D) = [D | 1] and its printed 2- and 3-expansions.
CheckMatrix simple_code();
CheckMatrix simple_g2();
CheckMatrix simple_g3();

// The commuting generator |XXX|XZY| = [0 D D | 1+D 1 1+D].
CheckMatrix valid_code();

// Worked example: classical generator, imported check matrix, Omega,
// 2-expansion, Omega_2, standard form H_2 and encoder start state H_0.
Gf4Matrix example_gf4();
CheckMatrix example_code();
OmegaMatrix example_omega();
CheckMatrix example_expanded();
OmegaMatrix example_omega2();
CheckMatrix example_h2();
CheckMatrix example_h0();

// The printed encoder and decoder. The undefined two-qubit gate S(2,3) is
// read as CZ, as a swap, or dropped.
enum class SReading { ControlledZ, Swap, Omitted };
const char* reading_name(SReading r);
Circuit example_encoder(SReading s);
Circuit example_decoder(SReading s);

// Random Laurent polynomial with exponents in [lo, lo + degree].
LaurentPoly random_poly(std::mt19937_64& rng, int degree, int lo = 0,
                        double density = 0.5);
// Random polynomial check matrix, r x n, entries of degree <= degree.
CheckMatrix random_check_matrix(std::mt19937_64& rng, int r, int n, int degree);
// Random classical GF(4) generator row, 1 x n, degree <= degree, nonzero.
Gf4Matrix random_gf4(std::mt19937_64& rng, int n, int degree);

}  // namespace eaqcc::testdata
