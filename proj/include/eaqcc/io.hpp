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

#include <nlohmann/json.hpp>

#include "eaqcc/circuit.hpp"

namespace eaqcc {

// Every artifact starts with a one-line provenance header. Parsers skip
// blank lines and `#` comments (the GSResult `# ops:` marker excepted).
std::string stage_header(std::string_view stage);

// frames=<n> generators=<r>
// z: p1, ..., pn | x: q1, ..., qn
std::string format_check_matrix(const CheckMatrix& h);
CheckMatrix parse_check_matrix(std::string_view text);

// gf4 cols=<n> rows=<r>, then r lines of comma-separated entries.
std::string format_gf4(const Gf4Matrix& g);
Gf4Matrix parse_gf4(std::string_view text);

// pauli frames=<n> generators=<r>, then one bar-notation sequence per line.
std::string format_pauli(const std::vector<PauliFrameSeq>& seqs);
std::vector<PauliFrameSeq> parse_pauli(std::string_view text);

// omega size=<r>, then r lines of comma-separated entries.
std::string format_omega(const OmegaMatrix& om);
OmegaMatrix parse_omega(std::string_view text);

// Standard-form matrix, a `# ops:` section, then `l=<l> c=<c> a=<a>`.
std::string format_gs_result(const GSResult& gs);
GSResult parse_gs_result(std::string_view text);

// circuit frames=<n> receivers=<c>, then one gate per line. Sender qubits
// are 1..n, receiver qubits B1..Bc.
std::string format_gate(const Gate& g, int receivers);
std::string format_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);

// Kind of a text artifact, read from its first non-comment line:
// checkmatrix, gf4, pauli, omega, gsresult or circuit.
std::string detect_kind(std::string_view text);

using Json = nlohmann::ordered_json;

Json check_matrix_json(const CheckMatrix& h);
CheckMatrix check_matrix_from_json(const Json& j);
Json gf4_json(const Gf4Matrix& g);
Gf4Matrix gf4_from_json(const Json& j);
Json pauli_json(const std::vector<PauliFrameSeq>& seqs);
std::vector<PauliFrameSeq> pauli_from_json(const Json& j);
Json omega_json(const OmegaMatrix& om);
OmegaMatrix omega_from_json(const Json& j);
Json gs_result_json(const GSResult& gs);
GSResult gs_result_from_json(const Json& j);
Json circuit_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

}  // namespace eaqcc
