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

#include "eaqcc/gram_schmidt.hpp"

#include "eaqcc/errors.hpp"

namespace eaqcc {

std::optional<std::pair<int, int>> standard_form_check(const OmegaMatrix& om) {
  if (om.rows() != om.cols()) return std::nullopt;
  const Eigen::Index r = om.rows();
  Eigen::Index c = 0;
  while (2 * c + 1 < r && om(2 * c, 2 * c + 1).is_one()) ++c;
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) {
      const bool pair = i < 2 * c && j < 2 * c && i / 2 == j / 2 && i != j;
      if (pair ? !om(i, j).is_one() : !om(i, j).is_zero()) return std::nullopt;
    }
  return std::make_pair(static_cast<int>(c), static_cast<int>(r - 2 * c));
}

namespace {

RationalPoly product(const CheckMatrix& w, Eigen::Index i, Eigen::Index j) {
  return shifted_symplectic_product(w, i, w, j);
}

void record(CheckMatrix& w, RowOpRecord& ops, RowOp op) {
  apply_row_op(w, op);
  ops.push_back(std::move(op));
}

}  // namespace

std::optional<GSResult> gram_schmidt_at(const CheckMatrix& h, int l) {
  CheckMatrix w = expand(h, l);
  const Eigen::Index r = w.rows();
  RowOpRecord ops;
  std::vector<bool> active(static_cast<std::size_t>(r), true);
  std::vector<Eigen::Index> pairs, ancillas;
  auto is_active = [&](Eigen::Index i) { return active[static_cast<std::size_t>(i)]; };

  for (;;) {
    std::vector<Eigen::Index> live;
    for (Eigen::Index i = 0; i < r; ++i)
      if (is_active(i)) live.push_back(i);
    if (live.empty()) break;
    const CheckMatrix sub = w.rows_subset(live);
    const OmegaMatrix om = omega_matrix(sub);
    const auto m = static_cast<Eigen::Index>(live.size());

    // Step 1: a row commuting with everything, itself included.
    bool progressed = false;
    for (Eigen::Index s = 0; s < m && !progressed; ++s) {
      bool free = true;
      for (Eigen::Index t = 0; t < m && free; ++t) free = om(s, t).is_zero();
      if (free) {
        ancillas.push_back(live[s]);
        active[static_cast<std::size_t>(live[s])] = false;
        progressed = true;
      }
    }
    if (progressed) continue;

    // Steps 2 then 3: a pair of self-commuting rows with a nonzero product,
    // monomial products first.
    Eigen::Index ps = -1, pt = -1;
    for (int pass = 0; pass < 2 && ps < 0; ++pass)
      for (Eigen::Index s = 0; s < m && ps < 0; ++s) {
        if (!om(s, s).is_zero()) continue;
        for (Eigen::Index t = s + 1; t < m; ++t) {
          if (!om(t, t).is_zero() || om(s, t).is_zero()) continue;
          if (pass == 0 && !om(s, t).is_monomial()) continue;
          ps = s;
          pt = t;
          break;
        }
      }
    if (ps < 0) return std::nullopt;  // step 4

    const Eigen::Index i = live[ps], j = live[pt];
    // h_i . (c h_j) = c(D^-1) (h_i . h_j) = 1 for c = 1 / (h_j . h_i).
    const RationalPoly c = om(pt, ps).inverse();
    if (!c.is_one()) record(w, ops, ScaleOp{j, c});
    for (Eigen::Index k : live) {
      if (k == i || k == j) continue;
      const RationalPoly a = product(w, k, j);
      const RationalPoly b = product(w, k, i);
      if (!a.is_zero()) record(w, ops, AddOp{k, i, a});
      if (!b.is_zero()) record(w, ops, AddOp{k, j, b});
    }
    pairs.push_back(i);
    pairs.push_back(j);
    active[static_cast<std::size_t>(i)] = false;
    active[static_cast<std::size_t>(j)] = false;
  }

  // Physically reorder: pairs first, then ancillas.
  std::vector<Eigen::Index> order = pairs;
  order.insert(order.end(), ancillas.begin(), ancillas.end());
  std::vector<Eigen::Index> at(static_cast<std::size_t>(r)), pos(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) at[i] = pos[i] = i;  // at[slot] = row
  for (Eigen::Index t = 0; t < r; ++t) {
    const Eigen::Index want = order[static_cast<std::size_t>(t)];
    const Eigen::Index cur = pos[static_cast<std::size_t>(want)];
    if (cur == t) continue;
    record(w, ops, SwapOp{t, cur});
    const Eigen::Index displaced = at[static_cast<std::size_t>(t)];
    std::swap(at[static_cast<std::size_t>(t)], at[static_cast<std::size_t>(cur)]);
    pos[static_cast<std::size_t>(want)] = t;
    pos[static_cast<std::size_t>(displaced)] = cur;
  }

  GSResult res;
  res.h_std = std::move(w);
  res.ops = std::move(ops);
  res.l = l;
  res.c = static_cast<int>(pairs.size() / 2);
  res.a = static_cast<int>(ancillas.size());
  res.k = static_cast<int>(l * (h.frames() - h.rows()));
  auto sf = standard_form_check(omega_matrix(res.h_std));
  if (!sf || sf->first != res.c || sf->second != res.a)
    throw Error("internal: Gram-Schmidt output is not in standard form");
  return res;
}

GSResult gram_schmidt(const CheckMatrix& h, int l_max) {
  if (l_max < 1) throw DimensionError("l_max must be at least 1");
  if (!h.is_polynomial())
    throw RationalEntry("gram_schmidt requires a polynomial check matrix");
  for (int l = 1; l <= l_max; ++l)
    if (auto res = gram_schmidt_at(h, l)) return *res;
  throw NoConvergence(l_max);
}

std::pair<CheckMatrix, RowOpRecord> to_finite_weight(const CheckMatrix& h) {
  CheckMatrix out = h;
  RowOpRecord ops;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    LaurentPoly lcm(1);
    for (Eigen::Index q = 0; q < h.frames(); ++q)
      for (const auto* e : {&h.z(i, q), &h.x(i, q)}) {
        const LaurentPoly& d = e->den();
        if (d.is_one()) continue;
        lcm = (lcm * d).div_exact(gcd(lcm, d));
      }
    if (lcm.is_one()) continue;
    ScaleOp op{i, RationalPoly(lcm)};
    apply_row_op(out, op);
    ops.push_back(op);
  }
  return {out, ops};
}

int ebit_lower_bound(const CheckMatrix& h) {
  const auto rk = rank(omega_matrix(h));
  return static_cast<int>((rk + 1) / 2);
}

}  // namespace eaqcc
