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
#include <utility>

#include "eaqcc/symplectic.hpp"

namespace eaqcc {

struct GSResult {
  CheckMatrix h_std;  // ebit pairs first (adjacent rows), ancillas last
  RowOpRecord ops;    // replays expand(h, l) into h_std
  int l = 1;
  int c = 0;
  int a = 0;
  int k = 0;  // frames of the expanded code minus its generator count
  int n() const { return static_cast<int>(h_std.frames()); }
};

// (c, a) iff om is c diagonal J blocks followed by an a x a zero block.
std::optional<std::pair<int, int>> standard_form_check(const OmegaMatrix& om);

// Symplectic Gram-Schmidt on expand(h, l) for l = 1..l_max. Throws
// NoConvergence when no factor reaches the standard form.
GSResult gram_schmidt(const CheckMatrix& h, int l_max = 8);

// Steps 1-3 at a fixed expansion factor; empty if rows remain.
std::optional<GSResult> gram_schmidt_at(const CheckMatrix& h, int l);

// Clear denominators row by row (scale by the lcm of the row's denominators).
std::pair<CheckMatrix, RowOpRecord> to_finite_weight(const CheckMatrix& h);

// Conjectured optimal ebit count: ceil(rank(Omega) / 2). Diagnostic only.
int ebit_lower_bound(const CheckMatrix& h);

}  // namespace eaqcc
