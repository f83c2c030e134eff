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

// Command-line front end: import, omega, expand, gs, encode, verify,
// pipeline and report.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eaqcc/errors.hpp"
#include "eaqcc/pipeline.hpp"

namespace fs = std::filesystem;
using namespace eaqcc;

namespace {

struct Options {
  bool json = false;
  std::string out;
  std::string input;
  std::string kind = "auto";
  int lmax = 8;
  int l = 2;
  std::string batch;
  std::string encoder, decoder, target;
  bool roundtrip = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << body;
}

std::string render(const Options& o, const std::string& stage,
                   const std::string& text, Json json) {
  if (!o.json) return stage_header(stage) + text;
  json["stage"] = stage;
  return json.dump(2) + "\n";
}

void emit(const Options& o, const std::string& body) {
  if (o.out.empty())
    std::cout << body;
  else
    write_file(o.out, body);
}

GSResult load_gs(const std::string& path) {
  const std::string text = read_file(path);
  auto t = text.find_first_not_of(" \t\r\n");
  if (t != std::string::npos && text[t] == '{') {
    try {
      return gs_result_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("json: ") + e.what(), 1, 1);
    }
  }
  return parse_gs_result(text);
}

Circuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  auto t = text.find_first_not_of(" \t\r\n");
  if (t != std::string::npos && text[t] == '{') {
    try {
      return circuit_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("json: ") + e.what(), 1, 1);
    }
  }
  return parse_circuit(text);
}

int cmd_import(const Options& o) {
  const CheckMatrix h = load_code(read_file(o.input), o.kind);
  emit(o, render(o, "import", format_check_matrix(h), check_matrix_json(h)));
  return kPass;
}

int cmd_omega(const Options& o) {
  const OmegaMatrix om = omega_matrix(load_code(read_file(o.input)));
  emit(o, render(o, "omega", format_omega(om), omega_json(om)));
  return kPass;
}

int cmd_expand(const Options& o) {
  const CheckMatrix h = expand(load_code(read_file(o.input)), o.l);
  emit(o, render(o, "expand l=" + std::to_string(o.l), format_check_matrix(h),
                 check_matrix_json(h)));
  return kPass;
}

int cmd_gs(const Options& o) {
  const GSResult gs = gram_schmidt(load_code(read_file(o.input)), o.lmax);
  emit(o, render(o, "gs l=" + std::to_string(gs.l), format_gs_result(gs),
                 gs_result_json(gs)));
  return kPass;
}

int cmd_encode(const Options& o) {
  const GSResult gs = load_gs(o.input);
  Circuit enc, dec;
  const PipelineReport r = encode_and_verify(gs, enc, dec);
  const std::string ext = o.json ? ".json" : ".txt";
  const std::string e = render(o, "encode", format_circuit(enc), circuit_json(enc));
  const std::string d = render(o, "decode", format_circuit(dec), circuit_json(dec));
  const std::string rep = render(o, "report", format_report(r), report_json(r));
  if (o.out.empty()) {
    std::cout << e << d << rep;
  } else {
    write_file(fs::path(o.out) / ("encoder" + ext), e);
    write_file(fs::path(o.out) / ("decoder" + ext), d);
    write_file(fs::path(o.out) / ("report" + ext), rep);
    std::cout << format_report(r);
  }
  return r.pass() ? kPass : kVerificationFailure;
}

int cmd_verify(const Options& o) {
  if (o.encoder.empty() || o.target.empty())
    throw ParseError("verify needs --encoder and --target", 1, 1);
  const Circuit enc = load_circuit(o.encoder);
  const CheckMatrix target = load_code(read_file(o.target));
  const int c = enc.receivers;
  const int a = static_cast<int>(target.rows()) - 2 * c;
  const int n = static_cast<int>(target.frames());
  const int k = n - static_cast<int>(target.rows());
  if (a < 0 || k < 0 || enc.n != n)
    throw DimensionError("circuit and target dimensions disagree");
  Verdict v;
  std::string what;
  if (o.roundtrip) {
    if (o.decoder.empty()) throw ParseError("--roundtrip needs --decoder", 1, 1);
    what = "roundtrip";
    v = verify_decoder(enc, load_circuit(o.decoder), c, a, k, n);
  } else {
    what = "encoder";
    v = verify_encoder(enc, target, c, a, k);
  }
  Json j{{"kind", "verdict"}, {"check", what}, {"ok", v.ok}, {"failing_stage", v.stage},
         {"detail", v.detail}};
  std::string text = what + ": " + (v.ok ? "PASS" : "FAIL") + "\n";
  if (!v.ok) text += "failing stage: " + v.stage + "\n" + "detail: " + v.detail + "\n";
  emit(o, render(o, "verify " + what, text, j));
  return v.ok ? kPass : kVerificationFailure;
}

void write_artifacts(const PipelineResult& r, const fs::path& dir, bool json) {
  for (const auto& a : r.artifacts)
    write_file(dir / (a.name + (json ? ".json" : ".txt")),
               json ? a.json.dump(2) + "\n" : a.text);
}

std::string status_line(const PipelineResult& r) {
  if (r.exit_code == kPass) {
    const auto& rep = r.report;
    return "PASS l=" + std::to_string(rep.l) + " c=" + std::to_string(rep.c) +
           " a=" + std::to_string(rep.a) + " rate=(" + rep.rate.str() + ", " +
           rep.entanglement.str() + ")";
  }
  return "FAIL exit=" + std::to_string(r.exit_code) + " stage=" + r.stage +
         ": " + r.message;
}

int cmd_pipeline(const Options& o) {
  if (o.lmax < 1) throw DimensionError("--lmax must be at least 1");
  if (!o.batch.empty()) {
    if (!fs::is_directory(o.batch))
      throw IoError("'" + o.batch + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(o.batch))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<std::future<PipelineResult>> jobs;
    for (const auto& f : files)
      jobs.push_back(std::async(std::launch::async, [f, &o] {
        try {
          return run_pipeline(load_code(read_file(f.string())), o.lmax);
        } catch (const std::exception& e) {
          PipelineResult r;
          r.exit_code = exit_code_for(e);
          r.stage = "import";
          r.message = e.what();
          return r;
        }
      }));
    int worst = kPass;
    for (std::size_t i = 0; i < files.size(); ++i) {
      PipelineResult r = jobs[i].get();
      if (!o.out.empty())
        write_artifacts(r, fs::path(o.out) / files[i].stem(), o.json);
      std::cout << files[i].filename().string() << ": " << status_line(r) << "\n";
      worst = std::max(worst, r.exit_code);
    }
    return worst;
  }
  const PipelineResult r = run_pipeline(load_code(read_file(o.input), o.kind), o.lmax);
  if (!o.out.empty()) {
    write_artifacts(r, o.out, o.json);
  } else {
    for (const auto& a : r.artifacts)
      std::cout << (o.json ? a.json.dump(2) + "\n" : a.text);
  }
  if (r.exit_code != kPass)
    std::cerr << "error: stage " << r.stage << ": " << r.message << "\n";
  else if (!o.out.empty())
    std::cout << format_report(r.report);
  return r.exit_code;
}

int cmd_report(const Options& o) {
  const GSResult gs = load_gs(o.input);
  Circuit enc, dec;
  const PipelineReport r = encode_and_verify(gs, enc, dec);
  emit(o, render(o, "report", format_report(r), report_json(r)));
  return r.pass() ? kPass : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-assisted quantum convolutional code compiler"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Write the JSON mirror of each artifact");
  app.add_option("--out", o.out, "Output file (or directory for encode/pipeline)");

  auto input = [&](CLI::App* s, const std::string& what) {
    s->add_option("input", o.input, what)->required();
  };
  auto* imp = app.add_subcommand("import", "Convert a code to a check matrix");
  input(imp, "pauli, gf4 or check matrix file");
  imp->add_option("--kind", o.kind, "Input kind")
      ->check(CLI::IsMember({"auto", "pauli", "gf4", "checkmatrix"}));
  auto* om = app.add_subcommand("omega", "Shifted symplectic product matrix");
  input(om, "code file");
  auto* ex = app.add_subcommand("expand", "l-expansion of a check matrix");
  input(ex, "code file");
  ex->add_option("-l", o.l, "Expansion factor")->check(CLI::PositiveNumber);
  auto* gs = app.add_subcommand("gs", "Symplectic Gram-Schmidt to standard form");
  input(gs, "code file");
  gs->add_option("--lmax", o.lmax, "Largest expansion factor");
  auto* enc = app.add_subcommand("encode", "Synthesize encoder and decoder");
  input(enc, "Gram-Schmidt result file");
  auto* ver = app.add_subcommand("verify", "Verify circuits symbolically");
  ver->add_option("--encoder", o.encoder, "Encoder circuit file");
  ver->add_option("--decoder", o.decoder, "Decoder circuit file");
  ver->add_option("--target", o.target, "Target code file");
  ver->add_flag("--roundtrip", o.roundtrip, "Check encoder then decoder restores the information qubits");
  auto* pipe = app.add_subcommand("pipeline", "Run every stage and verify");
  pipe->add_option("input", o.input, "code file");
  pipe->add_option("--lmax", o.lmax, "Largest expansion factor");
  pipe->add_option("--batch", o.batch, "Process every file in a directory");
  pipe->add_option("--kind", o.kind, "Input kind")
      ->check(CLI::IsMember({"auto", "pauli", "gf4", "checkmatrix"}));
  auto* rep = app.add_subcommand("report", "Rate pair and verdicts for a result");
  input(rep, "Gram-Schmidt result file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kParseError;
  }
  std::string stage = app.get_subcommands().front()->get_name();
  try {
    if (stage == "pipeline" && o.batch.empty() && o.input.empty())
      throw ParseError("pipeline needs an input file or --batch", 1, 1);
    if (o.lmax < 1) throw DimensionError("--lmax must be at least 1");
    if (stage == "import") return cmd_import(o);
    if (stage == "omega") return cmd_omega(o);
    if (stage == "expand") return cmd_expand(o);
    if (stage == "gs") return cmd_gs(o);
    if (stage == "encode") return cmd_encode(o);
    if (stage == "verify") return cmd_verify(o);
    if (stage == "pipeline") return cmd_pipeline(o);
    return cmd_report(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << stage << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
}
