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

// Acceptance checks: one PASS/FAIL line per criterion. The process exits 0
// when every failing criterion is one of the known-unattainable ones.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "eaqcc/errors.hpp"
#include "eaqcc/pipeline.hpp"
#include "testdata.hpp"

using namespace eaqcc;
using namespace eaqcc::testdata;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

OmegaMatrix omega_of(std::initializer_list<std::initializer_list<const char*>> rows) {
  Rows r;
  for (auto row : rows) r.emplace_back(row.begin(), row.end());
  return poly_matrix(r);
}

bool standard_j_sum(const OmegaMatrix& om, int c, int a) {
  auto sf = standard_form_check(om);
  return sf && sf->first == c && sf->second == a;
}

// Printed op order: bring generators 2 and 3 to the front, then decouple and
// normalise.
RowOpRecord printed_ops() {
  return {SwapOp{0, 1}, SwapOp{1, 2},
          AddOp{3, 1, parse_rational("1+D")},
          AddOp{2, 0, parse_rational("1+D^-1")},
          ScaleOp{3, parse_rational("(1)/(1+D+D^2)")}};
}

Outcome criterion1() {
  Outcome o;
  o.require(expand(simple_code(), 2) == simple_g2(), "expand([D|1], 2) = G2");
  o.require(expand(simple_code(), 3) == simple_g3(), "expand([D|1], 3) = G3");
  o.require(gf4_import(example_gf4()) == example_code(), "GF(4) import = printed check matrix");
  o.require(expand(example_code(), 2) == example_expanded(), "expanded Z(D), X(D) = printed");
  return o;
}

Outcome criterion2() {
  Outcome o;
  o.require(omega_matrix(valid_code()) == omega_of({{"0"}}), "commuting generator -> [0]");
  o.require(omega_matrix(simple_code()) == omega_of({{"D^-1+D"}}), "[D|1] -> [D^-1+D]");
  o.require(omega_matrix(simple_g2()) == omega_of({{"0", "1+D^-1"}, {"1+D", "0"}}),
            "G2 -> [[0,1+D^-1],[1+D,0]]");
  o.require(omega_matrix(example_code()) == example_omega(), "example Omega = printed");
  o.require(omega_matrix(example_expanded()) == example_omega2(), "example Omega_2 = printed");
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(20260301);
  std::uniform_int_distribution<int> nd(1, 4), rd(1, 3);
  int omega_cases = 0, omega_bad = 0;
  for (int l : {2, 3, 4})
    for (int t = 0; t < 80; ++t, ++omega_cases) {
      const CheckMatrix h = random_check_matrix(rng, rd(rng), nd(rng), 3);
      if (expanded_omega(omega_matrix(h), l) != omega_matrix(expand(h, l))) ++omega_bad;
    }
  // Floor identity in scaled exponents: f(D^(1/l)) is f read in units of
  // 1/l, and D^(i/l) f(D^(1/l)) is f shifted by i.
  int floor_bad = 0, floors = 0;
  std::uniform_int_distribution<int> ld(1, 4), lo(-6, 6);
  for (; floors < 1200; ++floors) {
    const int l = ld(rng);
    const LaurentPoly f = random_poly(rng, 12, lo(rng));
    const LaurentPoly g = random_poly(rng, 12, lo(rng));
    LaurentPoly rhs;
    for (int i = 0; i < l; ++i)
      rhs += f.shifted(-i).floor_fractional(l) * g.shifted(i).floor_fractional(l);
    // Direct evaluation of the left side from the product's support.
    std::vector<std::int64_t> kept;
    for (auto e : (f * g).support())
      if (e % l == 0) kept.push_back(e / l);
    if (LaurentPoly::from_support(kept) != rhs) ++floor_bad;
  }
  o.require(omega_bad == 0, std::to_string(omega_bad) + " expanded Omega mismatches");
  o.require(floor_bad == 0, std::to_string(floor_bad) + " floor identity mismatches");
  o.note(std::to_string(omega_cases) + " expanded Omega cases, " + std::to_string(floors) +
         " floor identity cases");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const GSResult s = gram_schmidt(simple_code(), 8);
  o.require(s.l == 2 && s.c == 1 && s.a == 0, "[D|1] -> l=2, c=1, a=0");
  const bool one_scale =
      s.ops.size() == 1 && std::holds_alternative<ScaleOp>(s.ops[0]) &&
      std::get<ScaleOp>(s.ops[0]).i == 1 &&
      std::get<ScaleOp>(s.ops[0]).c == parse_rational("(1)/(1+D)");
  o.require(one_scale, "[D|1] op list = scale row 2 by 1/(1+D)");
  o.require(standard_j_sum(omega_matrix(s.h_std), 1, 0), "[D|1] final Omega = J");

  const GSResult e = gram_schmidt(example_code(), 8);
  o.require(e.l == 2 && e.c == 2 && e.a == 0, "example -> l=2, c=2, a=0");
  o.require(standard_j_sum(omega_matrix(e.h_std), 2, 0), "example final Omega = J+J");
  o.require(row_space_equal(e.h_std, example_h2()), "H_std row-space-equal to printed H_2");
  const CheckMatrix replay = apply_row_ops(expand(example_code(), 2), printed_ops());
  o.require(replay == example_h2(), "printed op order reproduces H_2 entrywise");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const PipelineResult r = run_pipeline(gf4_import(example_gf4()), 8);
  o.require(r.exit_code == kPass, "pipeline verdict PASS (" + r.message + ")");
  o.require(r.report.rate == make_fraction(3, 4) && r.report.entanglement == make_fraction(1, 4),
            "rate pair (3/4, 1/4)");
  o.note("rate pair (" + r.report.rate.str() + ", " + r.report.entanglement.str() + ")");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const StabilizerState s0 = initial_state(2, 0, 4, 8);
  o.require(s0.stab == example_h0(), "initial state = printed H_0");
  const SReading documented = SReading::ControlledZ;
  for (SReading rd : {SReading::ControlledZ, SReading::Swap, SReading::Omitted}) {
    const Circuit enc = example_encoder(rd);
    const Circuit dec = example_decoder(rd);
    const Verdict ve = verify_encoder(enc, example_h2(), 2, 0, 4);
    const Verdict vd = verify_decoder(enc, dec, 2, 0, 4, 8);
    StabilizerState s = apply_circuit(initial_state(2, 0, 4, 8), enc);
    const CheckMatrix alice(PolyMatrix(s.stab.z.rightCols(8)), PolyMatrix(s.stab.x.rightCols(8)));
    const CheckMatrix joint(
        (PolyMatrix(8, 8) << alice.z, example_h2().z).finished(),
        (PolyMatrix(8, 8) << alice.x, example_h2().x).finished());
    o.note(std::string(reading_name(rd)) + ": encoder " + (ve.ok ? "PASS" : "FAIL") +
           " (joint rank with H_2 = " + std::to_string(rank(joint)) + ", 4 required), decoder " +
           (vd.ok ? "PASS" : "FAIL"));
    if (rd == documented) {
      o.require(ve.ok, "printed encoder reaches H_2 (" + ve.stage + ": " + ve.detail + ")");
      o.require(vd.ok, "printed decoder restores the information qubits");
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const GSResult gs = gram_schmidt(example_code(), 8);
  auto [enc, plan] = synthesize_encoder(gs);
  const Circuit dec = synthesize_decoder(gs, plan);
  o.require(verify_encoder(enc, gs.h_std, gs.c, gs.a, gs.k).ok, "verify_encoder");
  o.require(verify_decoder(enc, dec, gs.c, gs.a, gs.k, gs.n()).ok, "verify_decoder");
  o.require(dec.infinite_count() == 0, "decoder has no infinite-depth gate");
  o.require(verify_encoder(enc, example_h2(), gs.c, gs.a, gs.k).ok,
            "encoder also reaches the printed H_2");
  std::size_t survivors = 0;
  for (std::size_t i = 0; i < enc.gates.size(); ++i) {
    Circuit m = enc;
    m.gates.erase(m.gates.begin() + static_cast<std::ptrdiff_t>(i));
    if (verify_encoder(m, gs.h_std, gs.c, gs.a, gs.k).ok) ++survivors;
  }
  o.require(survivors == 0, std::to_string(survivors) + " single-gate deletions survive");
  o.note(std::to_string(enc.gates.size()) + " encoder gates, all deletions detected");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(20260302);
  std::uniform_int_distribution<int> nd(2, 4);
  int converged = 0, no_conv = 0, attempts = 0, bound_ok = 0;
  std::vector<std::string> failures;
  while (converged < 60 && attempts < 5000) {
    ++attempts;
    const Gf4Matrix g = random_gf4(rng, nd(rng), 2);
    const CheckMatrix h = gf4_import(g);
    if (rank(h) != h.rows()) continue;  // dependent generators are not a code
    const PipelineResult r = run_pipeline(h, 8);
    if (r.exit_code == kConvergenceFailure) {
      ++no_conv;
      continue;
    }
    ++converged;
    if (r.exit_code != kPass) {
      failures.push_back(format_gf4(g) + " -> " + r.stage + ": " + r.message);
      continue;
    }
    if (r.report.ebit_lower_bound * r.report.l <= r.report.c) ++bound_ok;
  }
  o.require(converged >= 50, "only " + std::to_string(converged) + " converged codes");
  o.require(failures.empty(), std::to_string(failures.size()) + " pipelines failed");
  for (const auto& f : failures) o.note(f);
  o.note(std::to_string(converged) + " converged PASS, " + std::to_string(no_conv) +
         " NoConvergence reported; ceil(rank(Omega)/2) <= c/l in " +
         std::to_string(bound_ok) + "/" + std::to_string(converged - failures.size()));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"expansion goldens", criterion1},
      {"Omega goldens", criterion2},
      {"expanded Omega and floor identity properties", criterion3},
      {"Gram-Schmidt goldens", criterion4},
      {"rate report", criterion5},
      {"printed example circuits", criterion6},
      {"synthesized circuit round trip and mutations", criterion7},
      {"random pipeline property suite", criterion8},
  };
  // Criterion 6: the printed encoder does not reach H_2 under any reading
  // of S(2,3); see README.
  const std::set<int> known_unattainable = {6};
  int passed = 0;
  bool unexpected = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - "
         << criteria[i].first << " (" << static_cast<long>(ms) << " ms)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    if (o.pass)
      ++passed;
    else if (!known_unattainable.count(id))
      unexpected = true;
  }
  std::cout << "summary: " << passed << "/" << criteria.size() << " criteria pass";
  if (passed != static_cast<int>(criteria.size()))
    std::cout << "; known unattainable: 6";
  std::cout << "\n";
  return unexpected ? 1 : 0;
}
