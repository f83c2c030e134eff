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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eaqcc/io.hpp"

namespace eaqcc {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kConvergenceFailure = 2,
  kParseError = 3,
};

// Maps an exception to the exit-code contract.
int exit_code_for(const std::exception& e);

// Reads a code in any input format (check matrix, gf4, pauli or the JSON
// mirror of one of them). `kind` is "auto" or one of the format names.
CheckMatrix load_code(std::string_view text, std::string_view kind = "auto");

struct Artifact {
  std::string name;  // file stem, e.g. "03_expand"
  std::string text;  // stage header included
  Json json;
};

struct PipelineReport {
  int frames = 0;
  int l = 1;
  int c = 0;
  int a = 0;
  int k = 0;
  Fraction rate;
  Fraction entanglement;
  int ebit_lower_bound = 0;   // per original frame
  Fraction ebits_per_frame;   // achieved c / l
  std::size_t encoder_gates = 0;
  std::size_t encoder_infinite = 0;
  std::size_t decoder_gates = 0;
  std::size_t decoder_infinite = 0;
  Verdict encoder;
  Verdict decoder;
  bool pass() const { return encoder.ok && decoder.ok && decoder_infinite == 0; }
};

std::string format_report(const PipelineReport& r);
Json report_json(const PipelineReport& r);

struct PipelineResult {
  int exit_code = kPass;
  std::string stage;    // failing stage, empty on success
  std::string message;
  std::vector<Artifact> artifacts;
  std::optional<GSResult> gs;
  Circuit encoder;
  Circuit decoder;
  PipelineReport report;
};

// Import, Omega, expansion, Gram-Schmidt, synthesis, verification, report.
// Never throws on code-dependent failures; the stage is named instead.
PipelineResult run_pipeline(const CheckMatrix& h, int l_max);

// Synthesis, verification and report for a finished Gram-Schmidt result.
PipelineReport encode_and_verify(const GSResult& gs, Circuit& enc, Circuit& dec);

}  // namespace eaqcc
