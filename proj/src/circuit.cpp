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

#include "eaqcc/circuit.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>

#include "eaqcc/errors.hpp"

namespace eaqcc {

void validate_gate(const Gate& g, int total_qubits) {
  for (int q : gate_qubits(g))
    if (q < 0 || q >= total_qubits)
      throw DimensionError("gate qubit index out of range");
  if (auto* c = std::get_if<FiniteCnot>(&g)) {
    if (c->src == c->dst) throw Error("CNOT with equal source and target");
    if (c->f.is_zero()) throw Error("CNOT with zero polynomial");
  } else if (auto* z = std::get_if<ControlledZ>(&g)) {
    if (z->f.is_zero()) throw Error("CZ with zero polynomial");
    if (z->q1 == z->q2 && (z->f + z->f.time_reverse()).is_zero())
      throw Error("self CZ needs a non-palindromic polynomial");
  } else if (auto* ic = std::get_if<InfiniteCnot>(&g)) {
    if (ic->g.is_zero()) throw Error("ICNOT with zero transfer function");
    if (!ic->g.den().coeff(0))
      throw Error("ICNOT denominator needs a nonzero constant term");
  }
}

std::vector<int> gate_qubits(const Gate& g) {
  return std::visit(
      [](const auto& v) -> std::vector<int> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteCnot>) return {v.src, v.dst};
        else if constexpr (std::is_same_v<T, ControlledZ>) return {v.q1, v.q2};
        else return {v.q};
      },
      g);
}

bool is_infinite_depth(const Gate& g) {
  return std::holds_alternative<InfiniteCnot>(g);
}

std::size_t Circuit::infinite_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), is_infinite_depth));
}

bool Circuit::touches_receiver() const {
  for (const auto& g : gates)
    for (int q : gate_qubits(g))
      if (q < receivers) return true;
  return false;
}

Circuit Circuit::reversed() const {
  Circuit r = *this;
  std::reverse(r.gates.begin(), r.gates.end());
  for (auto& g : r.gates)
    if (auto* ic = std::get_if<InfiniteCnot>(&g)) ic->g = ic->g.inverse();
  return r;
}

void Circuit::append(const Circuit& o) {
  gates.insert(gates.end(), o.gates.begin(), o.gates.end());
}

void apply_gate_inplace(CheckMatrix& m, const Gate& g) {
  validate_gate(g, static_cast<int>(m.frames()));
  const Eigen::Index r = m.rows();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Hadamard>) {
          m.z.col(v.q).swap(m.x.col(v.q));
        } else if constexpr (std::is_same_v<T, Phase>) {
          for (Eigen::Index i = 0; i < r; ++i) m.z(i, v.q) += m.x(i, v.q);
        } else if constexpr (std::is_same_v<T, FiniteCnot>) {
          const RationalPoly f(v.f), fr(v.f.time_reverse());
          for (Eigen::Index i = 0; i < r; ++i) {
            if (!m.x(i, v.src).is_zero()) m.x(i, v.dst) += f * m.x(i, v.src);
            if (!m.z(i, v.dst).is_zero()) m.z(i, v.src) += fr * m.z(i, v.dst);
          }
        } else if constexpr (std::is_same_v<T, ControlledZ>) {
          const RationalPoly f(v.f), fr(v.f.time_reverse());
          for (Eigen::Index i = 0; i < r; ++i) {
            if (v.q1 == v.q2) {
              if (!m.x(i, v.q1).is_zero()) m.z(i, v.q1) += (f + fr) * m.x(i, v.q1);
              continue;
            }
            const RationalPoly x1 = m.x(i, v.q1), x2 = m.x(i, v.q2);
            if (!x2.is_zero()) m.z(i, v.q1) += fr * x2;
            if (!x1.is_zero()) m.z(i, v.q2) += f * x1;
          }
        } else {
          const RationalPoly gr = v.g.time_reverse();
          for (Eigen::Index i = 0; i < r; ++i) {
            if (!m.x(i, v.q).is_zero()) m.x(i, v.q) *= v.g;
            if (!m.z(i, v.q).is_zero()) m.z(i, v.q) /= gr;
          }
        }
      },
      g);
}

bool commutation_invariant(const StabilizerState& s) {
  return is_zero_matrix(omega_matrix(s.stab)) &&
         is_zero_matrix(cross_omega(s.stab, s.logical));
}

StabilizerState apply_gate(StabilizerState s, const Gate& g) {
  apply_gate_inplace(s.stab, g);
  apply_gate_inplace(s.logical, g);
#ifndef NDEBUG
  assert(commutation_invariant(s));
#endif
  return s;
}

StabilizerState apply_circuit(StabilizerState s, const Circuit& c) {
  if (c.total() != s.receivers + s.n)
    throw DimensionError("circuit and state sizes differ");
  for (const auto& g : c.gates) s = apply_gate(std::move(s), g);
  return s;
}

StabilizerState initial_state(int c, int a, int k, int n) {
  if (c < 0 || a < 0 || k < 0 || n != a + 2 * c + k)
    throw DimensionError("initial_state: need n = a + 2c + k");
  StabilizerState s;
  s.receivers = c;
  s.n = n;
  const int t = c + n;
  s.stab = CheckMatrix(2 * c + a, t);
  for (int i = 0; i < c; ++i) {
    s.stab.z(i, i) = 1;
    s.stab.z(i, c + a + i) = 1;
    s.stab.x(c + i, i) = 1;
    s.stab.x(c + i, c + a + i) = 1;
  }
  for (int i = 0; i < a; ++i) s.stab.z(2 * c + i, c + i) = 1;
  const int m = k + c;
  s.logical = CheckMatrix(2 * m, t);
  for (int j = 0; j < m; ++j) {
    s.logical.z(j, c + a + c + j) = 1;
    s.logical.x(m + j, c + a + c + j) = 1;
  }
  return s;
}

namespace {

// Applies gates to a sender-only matrix while recording them.
class Reducer {
 public:
  Reducer(CheckMatrix& m, Circuit& circ) : m_(m), circ_(circ) {}

  void gate(Gate g) {
    apply_gate_inplace(m_, g);
    circ_.gates.push_back(std::move(g));
  }

  // Turn row ri into a multiple of Z on qubit t using gates on qubits >= lo
  // only. Entries on qubits < lo keep their z part; their x part must vanish.
  void reduce_row(Eigen::Index ri, int lo, int t) {
    const int n = static_cast<int>(m_.frames());
    for (int q = 0; q < lo; ++q)
      if (!m_.x(ri, q).is_zero())
        throw ReductionFailure("row has X support on a reduced qubit");
    for (int guard = 0;; ++guard) {
      if (guard > 100000) throw ReductionFailure("reduction did not terminate");
      Row w = primitive(ri, lo);
      std::vector<int> xs, zs;
      for (int q = lo; q < n; ++q) {
        if (!w.x[q].is_zero()) xs.push_back(q);
        if (!w.z[q].is_zero()) zs.push_back(q);
      }
      if (xs.empty() && zs.empty())
        throw ReductionFailure("row vanishes on the remaining qubits");
      if (xs.empty()) {
        if (zs.size() == 1) return move_to(zs[0], t);
        for (int q : zs) gate(Hadamard{q});
        const int p = gather_x(ri, lo, t);
        gate(Hadamard{p});
        return move_to(p, t);
      }
      const int p = gather_x(ri, lo, t);
      w = primitive(ri, lo);
      const LaurentPoly g = w.x[p];
      for (int q = lo; q < n; ++q) {
        if (q == p || w.z[q].is_zero()) continue;
        auto [f, rem] = LaurentPoly::divmod(w.z[q], g);
        if (!f.is_zero()) gate(ControlledZ{p, q, f});
      }
      w = primitive(ri, lo);
      int best = -1;
      for (int q = lo; q < n; ++q)
        if (q != p && !w.z[q].is_zero() &&
            (best < 0 || w.z[q].span() < w.z[best].span()))
          best = q;
      if (best >= 0) {
        gate(Hadamard{best});
        continue;
      }
      single_qubit(ri, lo, p);
      return move_to(p, t);
    }
  }

 private:
  struct Row {
    std::vector<LaurentPoly> z, x;
  };

  CheckMatrix& m_;
  Circuit& circ_;

  // Row restricted to qubits >= lo, denominators cleared, content removed.
  Row primitive(Eigen::Index ri, int lo) const {
    const int n = static_cast<int>(m_.frames());
    LaurentPoly lcm(1);
    for (int q = lo; q < n; ++q)
      for (const auto* e : {&m_.z(ri, q), &m_.x(ri, q)})
        if (!e->den().is_one()) lcm = (lcm * e->den()).div_exact(gcd(lcm, e->den()));
    Row w;
    w.z.resize(n);
    w.x.resize(n);
    LaurentPoly content;
    std::optional<std::int64_t> low;
    for (int q = lo; q < n; ++q) {
      w.z[q] = (m_.z(ri, q) * RationalPoly(lcm)).to_laurent();
      w.x[q] = (m_.x(ri, q) * RationalPoly(lcm)).to_laurent();
      for (const auto* p : {&w.z[q], &w.x[q]})
        if (!p->is_zero()) {
          content = gcd(content, *p);
          low = low ? std::min(*low, p->low()) : p->low();
        }
    }
    if (!low) return w;
    for (int q = lo; q < n; ++q) {
      if (!w.z[q].is_zero()) w.z[q] = w.z[q].div_exact(content).shifted(-*low);
      if (!w.x[q].is_zero()) w.x[q] = w.x[q].div_exact(content).shifted(-*low);
    }
    return w;
  }

  // Euclid on the X entries with CNOTs until one nonzero x remains.
  int gather_x(Eigen::Index ri, int lo, int prefer) {
    const int n = static_cast<int>(m_.frames());
    for (;;) {
      Row w = primitive(ri, lo);
      int p = -1, count = 0;
      for (int q = lo; q < n; ++q) {
        if (w.x[q].is_zero()) continue;
        ++count;
        if (p < 0 || w.x[q].span() < w.x[p].span() ||
            (w.x[q].span() == w.x[p].span() && q == prefer))
          p = q;
      }
      if (count <= 1) return p;
      for (int q = lo; q < n; ++q) {
        if (q == p || w.x[q].is_zero()) continue;
        auto [f, rem] = LaurentPoly::divmod(w.x[q], w.x[p]);
        gate(FiniteCnot{p, q, f});
      }
    }
  }

  // Row supported on qubit p alone: (z | x) palindromic about a common
  // centre; Euclid with symmetric quotients until it is pure Z.
  void single_qubit(Eigen::Index ri, int lo, int p) {
    for (int guard = 0;; ++guard) {
      if (guard > 100000) throw ReductionFailure("single-qubit step did not terminate");
      Row w = primitive(ri, lo);
      const LaurentPoly &z = w.z[p], &x = w.x[p];
      if (x.is_zero()) return;
      if (z.is_zero()) {
        gate(Hadamard{p});
        return;
      }
      if (z.span() < x.span()) {
        gate(Hadamard{p});
        continue;
      }
      const std::int64_t j = z.high() - x.high();
      if (z.low() - x.low() != -j)
        throw ReductionFailure("isotropic single-qubit row is not palindromic");
      if (j == 0)
        gate(Phase{p});
      else
        gate(ControlledZ{p, p, LaurentPoly::monomial(j)});
    }
  }

  void move_to(int p, int t) {
    if (p == t) return;
    const LaurentPoly one(1);
    gate(FiniteCnot{p, t, one});
    gate(FiniteCnot{t, p, one});
    gate(FiniteCnot{p, t, one});
  }
};

void add_row_multiple(CheckMatrix& m, Eigen::Index dst, Eigen::Index src,
                      const RationalPoly& c) {
  if (c.is_zero()) return;
  apply_row_op(m, AddOp{dst, src, c});
}

// rows <- T * rows for the listed row indices.
void transform_rows(CheckMatrix& m, const std::vector<Eigen::Index>& rows,
                    const PolyMatrix& t) {
  CheckMatrix sub = m.rows_subset(rows);
  PolyMatrix z = multiply(t, sub.z), x = multiply(t, sub.x);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.z.row(rows[i]) = z.row(static_cast<Eigen::Index>(i));
    m.x.row(rows[i]) = x.row(static_cast<Eigen::Index>(i));
  }
}

Gate shift_gate(Gate g, int by) {
  std::visit(
      [&](auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteCnot>) {
          v.src += by;
          v.dst += by;
        } else if constexpr (std::is_same_v<T, ControlledZ>) {
          v.q1 += by;
          v.q2 += by;
        } else {
          v.q += by;
        }
      },
      g);
  return g;
}

Circuit globalize(const Circuit& local, int c) {
  Circuit out;
  out.n = local.n;
  out.receivers = c;
  for (const auto& g : local.gates) out.gates.push_back(shift_gate(g, c));
  return out;
}

// Information qubits that receive X from a Z'2N CNOT; only these need the
// Hadamard between the two CNOT layers.
std::vector<int> hadamard_columns(const EncoderPlan& plan) {
  std::vector<int> cols;
  for (Eigen::Index j = 0; j < plan.z2n.cols(); ++j)
    for (Eigen::Index i = 0; i < plan.z2n.rows(); ++i)
      if (!plan.z2n(i, j).is_zero()) {
        cols.push_back(static_cast<int>(j));
        break;
      }
  return cols;
}

}  // namespace

std::pair<Circuit, CheckMatrix> ancilla_block_reduce(
    const CheckMatrix& h_std, int c, int a) {
  if (h_std.rows() != 2 * c + a) throw DimensionError("row count is not 2c + a");
  CheckMatrix m = h_std;
  Circuit circ;
  circ.n = static_cast<int>(m.frames());
  Reducer red(m, circ);
  for (int i = 0; i < a; ++i) red.reduce_row(2 * c + i, i, i);
  if (a == 0) return {circ, m};
  std::vector<Eigen::Index> anc(static_cast<std::size_t>(a));
  std::iota(anc.begin(), anc.end(), 2 * c);
  // Gamma -> I, then clear Z'' in the ebit rows.
  PolyMatrix gamma = m.rows_subset(anc).z.leftCols(a);
  transform_rows(m, anc, inverse_matrix(gamma));
  for (Eigen::Index e = 0; e < 2 * c; ++e)
    for (int i = 0; i < a; ++i) {
      const RationalPoly f = m.z(e, i);
      add_row_multiple(m, e, 2 * c + i, f);
    }
  for (Eigen::Index row = 0; row < m.rows(); ++row)
    for (int q = 0; q < a; ++q) {
      const bool anc_row = row >= 2 * c;
      const bool want_one = anc_row && row - 2 * c == q;
      if (!m.x(row, q).is_zero() || (want_one ? !m.z(row, q).is_one() : !m.z(row, q).is_zero()))
        throw ReductionFailure("ancilla block did not reach [I 0 | 0 0]");
      if (anc_row)
        for (Eigen::Index q2 = a; q2 < m.frames(); ++q2)
          if (!m.z(row, q2).is_zero() || !m.x(row, q2).is_zero())
            throw ReductionFailure("ancilla row has support outside its block");
    }
  return {circ, m};
}

EbitReduction ebit_block_reduce(const CheckMatrix& h, int c, int a) {
  const auto n = static_cast<int>(h.frames());
  if (h.rows() < 2 * c + a || n < a + c)
    throw DimensionError("ebit_block_reduce: inconsistent dimensions");
  CheckMatrix m = h;
  EbitReduction out;
  out.circuit.n = n;
  Reducer red(m, out.circuit);
  for (int i = 0; i < c; ++i) red.reduce_row(2 * i, a + i, a + i);

  std::vector<Eigen::Index> first, second, order;
  for (int i = 0; i < c; ++i) {
    first.push_back(2 * i);
    second.push_back(2 * i + 1);
  }
  EncoderPlan& plan = out.plan;
  plan.c = c;
  plan.a = a;
  plan.n = n;
  plan.k = n - a - 2 * c;
  for (auto i : first) plan.permutation.push_back(static_cast<int>(i));
  for (auto i : second) plan.permutation.push_back(static_cast<int>(i));
  plan.l_mat = m.rows_subset(first).z.middleCols(a, c);
  plan.u_mat = m.rows_subset(second).x.middleCols(a, c);
  for (int i = 0; i < c; ++i)
    if (!(plan.u_mat(i, i) * plan.l_mat(i, i).time_reverse()).is_one())
      throw ReductionFailure("u_ii l_ii(D^-1) != 1");
  if (c > 0) {
    transform_rows(m, first, inverse_matrix(plan.l_mat));
    transform_rows(m, second, inverse_matrix(plan.u_mat));
  }
  for (auto i : first) order.push_back(i);
  for (auto i : second) order.push_back(i);
  for (Eigen::Index i = 2 * c; i < h.rows(); ++i) order.push_back(i);
  out.reduced = m.rows_subset(order);

  // Pattern: first halves [0 I 0 | 0 0 0]; second halves X = [0 I X2'] and
  // Z = [0 X1' Z2'].
  const CheckMatrix& r = out.reduced;
  for (int i = 0; i < c; ++i) {
    for (int q = 0; q < n; ++q) {
      const bool diag = q == a + i;
      if (!r.x(i, q).is_zero() || (diag ? !r.z(i, q).is_one() : !r.z(i, q).is_zero()))
        throw ReductionFailure("first ebit block is not [0 I 0 | 0 0 0]");
      if (q < a + c) {
        const bool d2 = q == a + i;
        if (d2 ? !r.x(c + i, q).is_one() : !r.x(c + i, q).is_zero())
          throw ReductionFailure("second ebit block X part is not [0 I *]");
      }
      if (q < a && !r.z(c + i, q).is_zero())
        throw ReductionFailure("second ebit block touches ancilla Z columns");
    }
  }
  plan.reduced = out.reduced;

  // Gamma_i = common denominator of row i of [Z2' X2'].
  const int m_info = n - a - c;
  plan.z2n = zero_matrix(c, m_info);
  plan.x2n = zero_matrix(c, m_info);
  for (int i = 0; i < c; ++i) {
    LaurentPoly g(1);
    for (int j = 0; j < m_info; ++j)
      for (const auto* e : {&r.z(c + i, a + c + j), &r.x(c + i, a + c + j)})
        if (!e->den().is_one()) g = (g * e->den()).div_exact(gcd(g, e->den()));
    plan.gamma.push_back(RationalPoly(g));
    for (int j = 0; j < m_info; ++j) {
      plan.z2n(i, j) = r.z(c + i, a + c + j) * RationalPoly(g);
      plan.x2n(i, j) = r.x(c + i, a + c + j) * RationalPoly(g);
    }
  }
  plan.a_mat = multiply(plan.z2n, time_reverse(plan.x2n).transpose());
  plan.b_mat = multiply(plan.x2n, time_reverse(plan.z2n).transpose());
  return out;
}

std::pair<Circuit, EncoderPlan> synthesize_encoder(const GSResult& gs) {
  const int c = gs.c, a = gs.a, n = gs.n();
  auto [anc_circ, h1] = ancilla_block_reduce(gs.h_std, c, a);
  EbitReduction eb = ebit_block_reduce(h1, c, a);
  EncoderPlan plan = eb.plan;
  Circuit reduction = anc_circ;
  reduction.append(eb.circuit);
  plan.finite_depth = globalize(reduction, c);
  plan.finite_depth.n = n;

  Circuit enc;
  enc.n = n;
  enc.receivers = c;
  const int m_info = n - a - c;
  auto ebit = [&](int i) { return c + a + i; };
  auto info = [&](int j) { return c + a + c + j; };
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < m_info; ++j)
      if (!plan.z2n(i, j).is_zero())
        enc.gates.push_back(FiniteCnot{ebit(i), info(j), plan.z2n(i, j).to_laurent()});
  for (int j : hadamard_columns(plan)) enc.gates.push_back(Hadamard{info(j)});
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < m_info; ++j)
      if (!plan.x2n(i, j).is_zero())
        enc.gates.push_back(FiniteCnot{ebit(i), info(j), plan.x2n(i, j).to_laurent()});
  std::vector<int> inf;
  for (int i = 0; i < c; ++i)
    if (!plan.gamma[static_cast<std::size_t>(i)].is_one()) inf.push_back(i);
  for (int i : inf) enc.gates.push_back(Hadamard{ebit(i)});
  for (int i : inf)
    enc.gates.push_back(InfiniteCnot{
        ebit(i), plan.gamma[static_cast<std::size_t>(i)].time_reverse().inverse()});
  for (int i : inf) enc.gates.push_back(Hadamard{ebit(i)});
  enc.append(plan.finite_depth.reversed());
  return {enc, plan};
}

Circuit synthesize_decoder(const GSResult& gs, const EncoderPlan& plan) {
  const int c = gs.c, a = gs.a, n = gs.n();
  Circuit dec;
  dec.n = n;
  dec.receivers = c;
  dec.append(plan.finite_depth);
  const int m_info = n - a - c;
  auto info = [&](int j) { return c + a + c + j; };
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < m_info; ++j)
      if (!plan.x2n(i, j).is_zero())
        dec.gates.push_back(FiniteCnot{i, info(j), plan.x2n(i, j).to_laurent()});
  for (int j : hadamard_columns(plan)) dec.gates.push_back(Hadamard{info(j)});
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < m_info; ++j)
      if (!plan.z2n(i, j).is_zero())
        dec.gates.push_back(FiniteCnot{i, info(j), plan.z2n(i, j).to_laurent()});
  return dec;
}

namespace {

CheckMatrix sender_part(const CheckMatrix& m, int c) {
  const Eigen::Index n = m.frames() - c;
  return CheckMatrix(m.z.rightCols(n), m.x.rightCols(n));
}

std::string first_pivot_mismatch(const CheckMatrix& a, const CheckMatrix& b) {
  auto ra = rref(a.stacked()), rb = rref(b.stacked());
  const Eigen::Index n = std::max(ra.rank, rb.rank);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i >= ra.rank || i >= rb.rank || ra.pivots[i] != rb.pivots[i] ||
        ra.matrix.row(i) != rb.matrix.row(i))
      return "first mismatching pivot row " + std::to_string(i + 1) +
             " (ranks " + std::to_string(ra.rank) + " vs " +
             std::to_string(rb.rank) + ", joint rank " +
             std::to_string(rank(CheckMatrix(
                 (PolyMatrix(a.rows() + b.rows(), a.frames()) << a.z, b.z).finished(),
                 (PolyMatrix(a.rows() + b.rows(), a.frames()) << a.x, b.x).finished()))) +
             ")";
  }
  return "row spaces differ";
}

Verdict fail(std::string stage, std::string detail) {
  Verdict v;
  v.stage = std::move(stage);
  v.detail = std::move(detail);
  return v;
}

}  // namespace

Verdict verify_encoder(
    const Circuit& enc, const CheckMatrix& target, int c, int a, int k) {
  const int n = static_cast<int>(target.frames());
  if (target.rows() != 2 * c + a || n != a + 2 * c + k || enc.n != n ||
      enc.receivers != c)
    return fail("dimensions", "circuit, target and (c, a, k) disagree");
  if (enc.touches_receiver())
    return fail("receiver", "encoder acts on a receiver qubit");
  StabilizerState s = initial_state(c, a, k, n);
  try {
    s = apply_circuit(std::move(s), enc);
  } catch (const Error& e) {
    return fail("gates", e.what());
  }
  if (!commutation_invariant(s))
    return fail("commutation", "encoded stabilizer does not commute");
  const CheckMatrix alice = sender_part(s.stab, c);
  if (rank(alice) != alice.rows())
    return fail("rank", "sender restriction of the stabilizer is rank deficient");
  if (!row_space_equal(alice, target))
    return fail("row-space", first_pivot_mismatch(alice, target));
  Verdict v;
  v.ok = true;
  PolyMatrix r;
  solve_left(alice.stacked(), target.stacked(), r);
  v.receiver_z = multiply(r, PolyMatrix(s.stab.z.leftCols(c)));
  v.receiver_x = multiply(r, PolyMatrix(s.stab.x.leftCols(c)));
  return v;
}

Verdict verify_decoder(
    const Circuit& enc, const Circuit& dec, int c, int a, int k, int n) {
  if (dec.infinite_count() != 0)
    return fail("structure", "decoder contains an infinite-depth gate");
  StabilizerState s0 = initial_state(c, a, k, n);
  StabilizerState s = s0;
  try {
    s = apply_circuit(std::move(s), enc);
  } catch (const Error& e) {
    return fail("encoder", e.what());
  }
  try {
    s = apply_circuit(std::move(s), dec);
  } catch (const Error& e) {
    return fail("decoder", e.what());
  }
  const PolyMatrix stab = s.stab.stacked();
  const Eigen::Index rs = rank(stab);
  const PolyMatrix lg = s.logical.stacked(), lg0 = s0.logical.stacked();
  for (Eigen::Index i = 0; i < lg.rows(); ++i) {
    PolyMatrix aug(stab.rows() + 1, stab.cols());
    aug << stab, lg.row(i) - lg0.row(i);
    if (rank(aug) != rs)
      return fail("logical", "information row " + std::to_string(i + 1) +
                                 " is not restored modulo the stabilizer");
  }
  Verdict v;
  v.ok = true;
  return v;
}

std::string Fraction::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Fraction make_fraction(long long num, long long den) {
  if (den == 0) throw Error("zero denominator");
  const long long g = std::gcd(num, den);
  Fraction f{num / (g ? g : 1), den / (g ? g : 1)};
  if (f.den < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  if (f.num == 0) f.den = 1;
  return f;
}

std::pair<Fraction, Fraction> rate_report(const GSResult& gs) {
  return {make_fraction(gs.k + gs.c, gs.n()), make_fraction(gs.c, gs.n())};
}

Fraction classical_rate_bound(int n_cl, int k_cl) {
  return make_fraction(2LL * k_cl - n_cl, n_cl);
}

}  // namespace eaqcc
