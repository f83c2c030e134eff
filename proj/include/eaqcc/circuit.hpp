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
#include <variant>
#include <vector>

#include "eaqcc/gram_schmidt.hpp"

namespace eaqcc {

// Qubit indices are global columns: receiver qubits B1..Bc are 0..c-1, the
// sender's frame qubits 1..n are c..c+n-1.

// x_dst += f x_src; z_src += f(D^-1) z_dst.
struct FiniteCnot {
  int src, dst;
  LaurentPoly f;
};
// z_q <-> x_q.
struct Hadamard {
  int q;
};
// z_q += x_q.
struct Phase {
  int q;
};
// q1 != q2: z_q1 += f(D^-1) x_q2, z_q2 += f x_q1.
// q1 == q2: z_q += (f + f(D^-1)) x_q (CZ against the qubit's own shifts).
struct ControlledZ {
  int q1, q2;
  LaurentPoly f = LaurentPoly(1);
};
// x_q <- g x_q; z_q <- z_q / g(D^-1).
struct InfiniteCnot {
  int q;
  RationalPoly g;
};

using Gate = std::variant<FiniteCnot, Hadamard, Phase, ControlledZ, InfiniteCnot>;

void validate_gate(const Gate& g, int total_qubits);
std::vector<int> gate_qubits(const Gate& g);
bool is_infinite_depth(const Gate& g);

struct Circuit {
  int n = 0;          // sender qubits per frame
  int receivers = 0;  // c
  std::vector<Gate> gates;

  int total() const { return n + receivers; }
  std::size_t infinite_count() const;
  bool touches_receiver() const;
  Circuit reversed() const;
  void append(const Circuit& o);
};

struct StabilizerState {
  int receivers = 0;
  int n = 0;
  CheckMatrix stab;     // r rows over c + n columns
  CheckMatrix logical;  // Z rows then X rows of the information qubits
};

// Column transformation on every row.
void apply_gate_inplace(CheckMatrix& m, const Gate& g);
StabilizerState apply_gate(StabilizerState s, const Gate& g);
StabilizerState apply_circuit(StabilizerState s, const Circuit& c);

// Stabilizer rows commute pairwise and with every logical row.
bool commutation_invariant(const StabilizerState& s);

// Receiver columns first; sender layout: ancillas, ebit halves, information.
StabilizerState initial_state(int c, int a, int k, int n);

struct EncoderPlan {
  int c = 0, a = 0, k = 0, n = 0;
  std::vector<RationalPoly> gamma;  // diagonal of Gamma(D)
  PolyMatrix z2n, x2n;              // c x (k + c) numerators
  PolyMatrix a_mat;                 // Z'_2N X'_2N(D^-1)^T
  PolyMatrix b_mat;                 // X'_2N Z'_2N(D^-1)^T, added by the decoder
  PolyMatrix l_mat, u_mat;          // triangular factors on the ebit qubits
  std::vector<int> permutation;     // pair order -> [[0, I], [I, 0]] order
  Circuit finite_depth;             // forward reduction of H_std
  CheckMatrix reduced;              // desired-shape matrix, sender columns
};

// Finite-depth reduction of the last a rows to [I 0 | 0 0] on the first a
// sender qubits (up to rational row operations). Gates use sender-local
// indices (receivers = 0). The returned matrix is row-reduced.
std::pair<Circuit, CheckMatrix> ancilla_block_reduce(
    const CheckMatrix& h_std, int c, int a);

// Finite-depth reduction of the ebit pairs of h (output of
// ancilla_block_reduce) into [[I, 0 | 0, 0], [X1', Z2' | I, X2']] on the
// qubits after the first a. Rows of the result: first halves, second halves,
// ancillas.
struct EbitReduction {
  Circuit circuit;
  EncoderPlan plan;
  CheckMatrix reduced;
};
EbitReduction ebit_block_reduce(const CheckMatrix& h, int c, int a = 0);

std::pair<Circuit, EncoderPlan> synthesize_encoder(const GSResult& gs);
Circuit synthesize_decoder(const GSResult& gs, const EncoderPlan& plan);

struct Verdict {
  bool ok = false;
  std::string stage;   // first failing check, empty on success
  std::string detail;
  PolyMatrix receiver_z, receiver_x;  // induced receiver columns on success
};

// The encoder leaves receiver qubits alone, the stabilizer commutes, and its
// sender restriction has full rank and the target's row space.
Verdict verify_encoder(
    const Circuit& enc, const CheckMatrix& target, int c, int a, int k);
// After encoder then decoder, each logical row equals its initial form up to
// the stabilizer row space.
Verdict verify_decoder(
    const Circuit& enc, const Circuit& dec, int c, int a, int k, int n);

struct Fraction {
  long long num = 0, den = 1;
  std::string str() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};
Fraction make_fraction(long long num, long long den);

// ((k + c) / n, c / n).
std::pair<Fraction, Fraction> rate_report(const GSResult& gs);
// (2 k_cl - n_cl) / n_cl for a classical [n_cl, k_cl] GF(4) code.
Fraction classical_rate_bound(int n_cl, int k_cl);

}  // namespace eaqcc
