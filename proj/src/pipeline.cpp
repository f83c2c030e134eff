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

#include "eaqcc/pipeline.hpp"

#include "eaqcc/errors.hpp"

namespace eaqcc {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NoConvergence*>(&e)) return kConvergenceFailure;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
      dynamic_cast<const IoError*>(&e) ||
      dynamic_cast<const RationalEntry*>(&e))
    return kParseError;
  return kVerificationFailure;
}

CheckMatrix load_code(std::string_view text, std::string_view kind) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
    t.remove_prefix(1);
  if (!t.empty() && t.front() == '{') {
    Json j;
    try {
      j = Json::parse(t);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("json: ") + e.what(), 1, 1);
    }
    const std::string k = j.value("kind", std::string());
    if (kind != "auto" && kind != k)
      throw ParseError("input kind '" + k + "' does not match '" + std::string(kind) + "'", 1, 1);
    if (k == "checkmatrix") return check_matrix_from_json(j);
    if (k == "gf4") return gf4_import(gf4_from_json(j));
    if (k == "pauli") return pauli_to_binary(pauli_from_json(j));
    if (k == "gsresult") return gs_result_from_json(j).h_std;
    throw ParseError("json input is not a code", 1, 1);
  }
  const std::string k = detect_kind(text);
  if (kind != "auto" && kind != k)
    throw ParseError("input kind '" + k + "' does not match '" + std::string(kind) + "'", 1, 1);
  if (k == "checkmatrix") return parse_check_matrix(text);
  if (k == "gf4") return gf4_import(parse_gf4(text));
  if (k == "pauli") return pauli_to_binary(parse_pauli(text));
  if (k == "gsresult") return parse_gs_result(text).h_std;
  throw ParseError("input is a " + k + " artifact, not a code", 1, 1);
}

std::string format_report(const PipelineReport& r) {
  auto verdict = [](const Verdict& v) {
    return v.ok ? std::string("PASS") : "FAIL (" + v.stage + ": " + v.detail + ")";
  };
  std::string s;
  s += "frames=" + std::to_string(r.frames) + " l=" + std::to_string(r.l) +
       " c=" + std::to_string(r.c) + " a=" + std::to_string(r.a) +
       " k=" + std::to_string(r.k) + "\n";
  s += "rate pair: (" + r.rate.str() + ", " + r.entanglement.str() + ")\n";
  s += "ebits per original frame: " + r.ebits_per_frame.str() +
       " (lower bound ceil(rank(Omega)/2) = " + std::to_string(r.ebit_lower_bound) + ")\n";
  s += "encoder gates: " + std::to_string(r.encoder_gates) + " (" +
       std::to_string(r.encoder_infinite) + " infinite-depth)\n";
  s += "decoder gates: " + std::to_string(r.decoder_gates) + " (" +
       std::to_string(r.decoder_infinite) + " infinite-depth)\n";
  s += "encoder: " + verdict(r.encoder) + "\n";
  s += "decoder: " + verdict(r.decoder) + "\n";
  s += std::string("verdict: ") + (r.pass() ? "PASS" : "FAIL") + "\n";
  return s;
}

Json report_json(const PipelineReport& r) {
  auto verdict = [](const Verdict& v) {
    return Json{{"ok", v.ok}, {"failing_stage", v.stage}, {"detail", v.detail}};
  };
  return Json{{"kind", "report"},
              {"frames", r.frames},
              {"l", r.l},
              {"c", r.c},
              {"a", r.a},
              {"k", r.k},
              {"rate", r.rate.str()},
              {"entanglement", r.entanglement.str()},
              {"ebits_per_frame", r.ebits_per_frame.str()},
              {"ebit_lower_bound", r.ebit_lower_bound},
              {"encoder_gates", r.encoder_gates},
              {"encoder_infinite", r.encoder_infinite},
              {"decoder_gates", r.decoder_gates},
              {"decoder_infinite", r.decoder_infinite},
              {"encoder", verdict(r.encoder)},
              {"decoder", verdict(r.decoder)},
              {"verdict", r.pass() ? "PASS" : "FAIL"}};
}

PipelineReport encode_and_verify(const GSResult& gs, Circuit& enc, Circuit& dec) {
  auto [e, plan] = synthesize_encoder(gs);
  enc = std::move(e);
  dec = synthesize_decoder(gs, plan);
  PipelineReport r;
  r.frames = gs.n();
  r.l = gs.l;
  r.c = gs.c;
  r.a = gs.a;
  r.k = gs.k;
  std::tie(r.rate, r.entanglement) = rate_report(gs);
  r.ebits_per_frame = make_fraction(gs.c, gs.l);
  r.encoder_gates = enc.gates.size();
  r.encoder_infinite = enc.infinite_count();
  r.decoder_gates = dec.gates.size();
  r.decoder_infinite = dec.infinite_count();
  r.encoder = verify_encoder(enc, gs.h_std, gs.c, gs.a, gs.k);
  r.decoder = verify_decoder(enc, dec, gs.c, gs.a, gs.k, gs.n());
  return r;
}

PipelineResult run_pipeline(const CheckMatrix& h, int l_max) {
  PipelineResult res;
  auto add = [&](std::string name, std::string stage, std::string text, Json json) {
    json["stage"] = stage;
    res.artifacts.push_back({std::move(name), stage_header(stage) + text, std::move(json)});
  };
  res.stage = "import";
  try {
    if (l_max < 1) throw DimensionError("--lmax must be at least 1");
    add("01_import", "import", format_check_matrix(h), check_matrix_json(h));
    res.stage = "omega";
    const OmegaMatrix om = omega_matrix(h);
    add("02_omega", "omega", format_omega(om), omega_json(om));
    res.stage = "gs";
    GSResult gs = gram_schmidt(h, l_max);
    const std::string ls = "l=" + std::to_string(gs.l);
    res.stage = "expand";
    const CheckMatrix hl = expand(h, gs.l);
    add("03_expand", "expand " + ls, format_check_matrix(hl), check_matrix_json(hl));
    const OmegaMatrix oml = omega_matrix(hl);
    add("04_omega_expanded", "omega " + ls, format_omega(oml), omega_json(oml));
    res.stage = "gs";
    if (!row_space_equal(gs.h_std, hl) || !standard_form_check(omega_matrix(gs.h_std)))
      throw ReductionFailure("standard form is not row-space-equal to the expansion");
    add("05_gs", "gs " + ls, format_gs_result(gs), gs_result_json(gs));
    res.stage = "encode";
    res.report = encode_and_verify(gs, res.encoder, res.decoder);
    res.report.ebit_lower_bound = ebit_lower_bound(h);
    res.gs = std::move(gs);
    add("06_encoder", "encode", format_circuit(res.encoder), circuit_json(res.encoder));
    add("07_decoder", "decode", format_circuit(res.decoder), circuit_json(res.decoder));
    add("08_report", "report", format_report(res.report), report_json(res.report));
    if (!res.report.pass()) {
      res.stage = res.report.encoder.ok ? "verify decoder" : "verify encoder";
      res.message = res.report.encoder.ok ? res.report.decoder.detail
                                          : res.report.encoder.detail;
      res.exit_code = kVerificationFailure;
      return res;
    }
    res.stage.clear();
  } catch (const std::exception& e) {
    res.exit_code = exit_code_for(e);
    res.message = e.what();
  }
  return res;
}

}  // namespace eaqcc
