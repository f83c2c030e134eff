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

#include "eaqcc/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "eaqcc/errors.hpp"

namespace eaqcc {
namespace {

struct Line {
  std::string_view text;
  int number = 0;
};

class LineCursor {
 public:
  explicit LineCursor(std::string_view text) {
    int no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view l = text.substr(start, end - start);
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      lines_.push_back({l, ++no});
      start = end + 1;
    }
  }

  // Next meaningful line; `keep` lets a specific comment through.
  std::optional<Line> next(std::string_view keep = {}) {
    while (pos_ < lines_.size()) {
      Line l = lines_[pos_++];
      std::string_view t = trim(l.text);
      if (t.empty()) continue;
      if (t.front() == '#' && (keep.empty() || t != keep)) continue;
      return l;
    }
    return std::nullopt;
  }

  Line expect(std::string_view what, std::string_view keep = {}) {
    auto l = next(keep);
    if (!l) {
      const int last = lines_.empty() ? 1 : lines_.back().number;
      throw ParseError("unexpected end of input, expected " + std::string(what), last, 1);
    }
    return *l;
  }

  void expect_end() {
    if (auto l = next())
      throw ParseError("unexpected trailing content", l->number, 1);
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

int column_of(const Line& l, std::string_view part) {
  return static_cast<int>(part.data() - l.text.data()) + 1;
}

// Parses `word key1=v1 key2=v2` (word may be empty).
std::vector<long long> parse_header(
    const Line& l, std::string_view word, const std::vector<std::string>& keys) {
  std::string_view t = LineCursor::trim(l.text);
  if (!word.empty()) {
    if (t.substr(0, word.size()) != word)
      throw ParseError("expected header '" + std::string(word) + "'", l.number,
                       column_of(l, t));
    t = LineCursor::trim(t.substr(word.size()));
  }
  std::vector<long long> vals;
  for (const auto& key : keys) {
    const std::string want = key + "=";
    if (t.substr(0, want.size()) != want)
      throw ParseError("expected '" + want + "'", l.number, column_of(l, t));
    t.remove_prefix(want.size());
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || v < 0)
      throw ParseError("expected a non-negative integer after '" + want + "'",
                       l.number, column_of(l, t));
    t = LineCursor::trim(t.substr(static_cast<std::size_t>(ptr - t.data())));
    vals.push_back(v);
  }
  if (!t.empty())
    throw ParseError("unexpected text in header", l.number, column_of(l, t));
  return vals;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

std::vector<RationalPoly> parse_entries(const Line& l, std::string_view s,
                                        std::size_t count) {
  auto parts = split(s, ',');
  if (parts.size() != count)
    throw ParseError("expected " + std::to_string(count) + " entries, found " +
                         std::to_string(parts.size()),
                     l.number, column_of(l, s));
  std::vector<RationalPoly> out;
  for (auto p : parts) {
    if (LineCursor::trim(p).empty())
      throw ParseError("empty entry", l.number, column_of(l, p));
    out.push_back(parse_rational(p, l.number, column_of(l, p)));
  }
  return out;
}

std::string join_row(const PolyMatrix& m, Eigen::Index i) {
  std::string s;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j) s += ", ";
    s += m(i, j).str();
  }
  return s;
}

CheckMatrix read_check_matrix(LineCursor& cur) {
  const Line head = cur.expect("check matrix header");
  auto hv = parse_header(head, "", {"frames", "generators"});
  const auto n = static_cast<Eigen::Index>(hv[0]);
  const auto r = static_cast<Eigen::Index>(hv[1]);
  if (n == 0 || r == 0)
    throw ParseError("empty check matrix", head.number, 1);
  CheckMatrix h(r, n);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Line l = cur.expect("generator row");
    std::string_view t = LineCursor::trim(l.text);
    const std::size_t bar = t.find('|');
    if (t.substr(0, 2) != "z:" || bar == std::string_view::npos)
      throw ParseError("expected 'z: ... | x: ...'", l.number, column_of(l, t));
    std::string_view xs = LineCursor::trim(t.substr(bar + 1));
    if (xs.substr(0, 2) != "x:")
      throw ParseError("expected 'x:'", l.number, column_of(l, xs));
    auto z = parse_entries(l, t.substr(2, bar - 2), static_cast<std::size_t>(n));
    auto x = parse_entries(l, xs.substr(2), static_cast<std::size_t>(n));
    for (Eigen::Index q = 0; q < n; ++q) {
      h.z(i, q) = z[static_cast<std::size_t>(q)];
      h.x(i, q) = x[static_cast<std::size_t>(q)];
    }
  }
  return h;
}

// Qubit label: 1-based sender index or B<i> receiver index.
int parse_qubit(const Line& l, std::string_view tok, int n, int c) {
  const int col = column_of(l, tok);
  bool recv = !tok.empty() && tok.front() == 'B';
  if (recv) tok.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
    throw ParseError("bad qubit label", l.number, col);
  if (recv) {
    if (v > c) throw ParseError("receiver qubit out of range", l.number, col);
    return v - 1;
  }
  if (v > n) throw ParseError("qubit out of range", l.number, col);
  return c + v - 1;
}

std::string qubit_label(int q, int c) {
  return q < c ? "B" + std::to_string(q + 1) : std::to_string(q - c + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string icnot_param(const RationalPoly& g) {
  return "(" + g.num().str() + ")/(" + g.den().str() + ")";
}

Circuit read_circuit(LineCursor& cur) {
  const Line head = cur.expect("circuit header");
  auto hv = parse_header(head, "circuit", {"frames", "receivers"});
  Circuit c;
  c.n = static_cast<int>(hv[0]);
  c.receivers = static_cast<int>(hv[1]);
  if (c.n == 0) throw ParseError("circuit without frame qubits", head.number, 1);
  while (auto l = cur.next()) {
    std::string_view t = LineCursor::trim(l->text);
    auto tok = tokens(t);
    const std::string_view op = tok[0];
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (tok.size() < lo || tok.size() > hi)
        throw ParseError("wrong operand count for " + std::string(op),
                         l->number, column_of(*l, t));
    };
    auto q = [&](std::size_t i) {
      return parse_qubit(*l, tok[i], c.n, c.receivers);
    };
    // Polynomial operand: everything after token i, whitespace included.
    auto rest = [&](std::size_t i) {
      return t.substr(static_cast<std::size_t>(tok[i].data() - t.data()));
    };
    try {
      if (op == "H") {
        need(2, 2);
        const std::size_t dots = tok[1].find("..");
        if (dots == std::string_view::npos) {
          c.gates.push_back(Hadamard{q(1)});
        } else {
          const int a = parse_qubit(*l, tok[1].substr(0, dots), c.n, c.receivers);
          const int b = parse_qubit(*l, tok[1].substr(dots + 2), c.n, c.receivers);
          if (b < a) throw ParseError("empty Hadamard range", l->number, column_of(*l, tok[1]));
          for (int k = a; k <= b; ++k) c.gates.push_back(Hadamard{k});
        }
      } else if (op == "P") {
        need(2, 2);
        c.gates.push_back(Phase{q(1)});
      } else if (op == "CNOT") {
        if (tok.size() < 4) need(4, 4);
        c.gates.push_back(FiniteCnot{
            q(1), q(2), parse_laurent(rest(3), l->number, column_of(*l, tok[3]))});
      } else if (op == "CZ") {
        if (tok.size() < 3) need(3, 3);
        ControlledZ g{q(1), q(2)};
        if (tok.size() > 3)
          g.f = parse_laurent(rest(3), l->number, column_of(*l, tok[3]));
        c.gates.push_back(g);
      } else if (op == "ICNOT") {
        if (tok.size() < 3) need(3, 3);
        c.gates.push_back(InfiniteCnot{
            q(1), parse_rational(rest(2), l->number, column_of(*l, tok[2]))});
      } else {
        throw ParseError("unknown gate '" + std::string(op) + "'", l->number,
                         column_of(*l, t));
      }
      validate_gate(c.gates.back(), c.total());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), l->number, column_of(*l, t));
    }
  }
  return c;
}

std::string format_row_block(const CheckMatrix& h) {
  std::string s = "frames=" + std::to_string(h.frames()) +
                  " generators=" + std::to_string(h.rows()) + "\n";
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    s += "z: " + join_row(h.z, i) + " | x: " + join_row(h.x, i) + "\n";
  return s;
}

}  // namespace

std::string stage_header(std::string_view stage) {
  return "# stage: " + std::string(stage) + "\n";
}

std::string format_check_matrix(const CheckMatrix& h) {
  return format_row_block(h);
}

CheckMatrix parse_check_matrix(std::string_view text) {
  LineCursor cur(text);
  CheckMatrix h = read_check_matrix(cur);
  cur.expect_end();
  return h;
}

std::string format_gf4(const Gf4Matrix& g) {
  std::string s = "gf4 cols=" + std::to_string(g.cols) +
                  " rows=" + std::to_string(g.rows) + "\n";
  for (Eigen::Index i = 0; i < g.rows; ++i) {
    for (Eigen::Index j = 0; j < g.cols; ++j) {
      if (j) s += ", ";
      s += g(i, j).str();
    }
    s += "\n";
  }
  return s;
}

Gf4Matrix parse_gf4(std::string_view text) {
  LineCursor cur(text);
  const Line head = cur.expect("gf4 header");
  auto hv = parse_header(head, "gf4", {"cols", "rows"});
  if (hv[0] == 0 || hv[1] == 0)
    throw ParseError("empty generator list", head.number, 1);
  Gf4Matrix g(static_cast<Eigen::Index>(hv[1]), static_cast<Eigen::Index>(hv[0]));
  for (Eigen::Index i = 0; i < g.rows; ++i) {
    const Line l = cur.expect("gf4 row");
    auto parts = split(l.text, ',');
    if (static_cast<Eigen::Index>(parts.size()) != g.cols)
      throw ParseError("expected " + std::to_string(g.cols) + " entries", l.number, 1);
    for (Eigen::Index j = 0; j < g.cols; ++j) {
      auto p = parts[static_cast<std::size_t>(j)];
      g(i, j) = Gf4Poly::parse(p, l.number, column_of(l, p));
    }
  }
  cur.expect_end();
  return g;
}

std::string format_pauli(const std::vector<PauliFrameSeq>& seqs) {
  const int n = seqs.empty() ? 0 : seqs.front().frame_size;
  std::string s = "pauli frames=" + std::to_string(n) +
                  " generators=" + std::to_string(seqs.size()) + "\n";
  for (const auto& q : seqs) s += q.str() + "\n";
  return s;
}

std::vector<PauliFrameSeq> parse_pauli(std::string_view text) {
  LineCursor cur(text);
  const Line head = cur.expect("pauli header");
  auto hv = parse_header(head, "pauli", {"frames", "generators"});
  if (hv[1] == 0) throw ParseError("empty generator list", head.number, 1);
  std::vector<PauliFrameSeq> out;
  for (long long i = 0; i < hv[1]; ++i) {
    const Line l = cur.expect("pauli sequence");
    PauliFrameSeq s = PauliFrameSeq::parse(l.text, l.number);
    if (s.frame_size != hv[0])
      throw InconsistentFrameSize("line " + std::to_string(l.number) +
                                  ": frame size " + std::to_string(s.frame_size) +
                                  " differs from header " + std::to_string(hv[0]));
    out.push_back(std::move(s));
  }
  cur.expect_end();
  return out;
}

std::string format_omega(const OmegaMatrix& om) {
  std::string s = "omega size=" + std::to_string(om.rows()) + "\n";
  for (Eigen::Index i = 0; i < om.rows(); ++i) s += join_row(om, i) + "\n";
  return s;
}

OmegaMatrix parse_omega(std::string_view text) {
  LineCursor cur(text);
  const Line head = cur.expect("omega header");
  const auto r = static_cast<Eigen::Index>(parse_header(head, "omega", {"size"})[0]);
  OmegaMatrix om = zero_matrix(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Line l = cur.expect("omega row");
    auto e = parse_entries(l, l.text, static_cast<std::size_t>(r));
    for (Eigen::Index j = 0; j < r; ++j) om(i, j) = e[static_cast<std::size_t>(j)];
  }
  cur.expect_end();
  return om;
}

std::string format_gs_result(const GSResult& gs) {
  std::string s = format_row_block(gs.h_std);
  s += "# ops:\n";
  for (const auto& op : gs.ops) s += row_op_str(op) + "\n";
  s += "l=" + std::to_string(gs.l) + " c=" + std::to_string(gs.c) +
       " a=" + std::to_string(gs.a) + "\n";
  return s;
}

GSResult parse_gs_result(std::string_view text) {
  LineCursor cur(text);
  GSResult gs;
  gs.h_std = read_check_matrix(cur);
  const Line marker = cur.expect("'# ops:'", "# ops:");
  if (LineCursor::trim(marker.text) != "# ops:")
    throw ParseError("expected '# ops:'", marker.number, 1);
  for (;;) {
    const Line l = cur.expect("trailer 'l= c= a='");
    std::string_view t = LineCursor::trim(l.text);
    if (t.substr(0, 2) == "l=") {
      auto v = parse_header(l, "", {"l", "c", "a"});
      gs.l = static_cast<int>(v[0]);
      gs.c = static_cast<int>(v[1]);
      gs.a = static_cast<int>(v[2]);
      break;
    }
    gs.ops.push_back(parse_row_op(std::string(t), l.number));
  }
  cur.expect_end();
  if (gs.l < 1) throw ParseError("expansion factor must be positive", 1, 1);
  if (2 * gs.c + gs.a != gs.h_std.rows())
    throw ParseError("trailer disagrees with the generator count", 1, 1);
  gs.k = gs.n() - static_cast<int>(gs.h_std.rows());
  return gs;
}

std::string format_gate(const Gate& g, int c) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteCnot>)
          return "CNOT " + qubit_label(v.src, c) + " " + qubit_label(v.dst, c) +
                 " " + v.f.str();
        else if constexpr (std::is_same_v<T, Hadamard>)
          return "H " + qubit_label(v.q, c);
        else if constexpr (std::is_same_v<T, Phase>)
          return "P " + qubit_label(v.q, c);
        else if constexpr (std::is_same_v<T, ControlledZ>)
          return "CZ " + qubit_label(v.q1, c) + " " + qubit_label(v.q2, c) +
                 (v.f.is_one() ? "" : " " + v.f.str());
        else
          return "ICNOT " + qubit_label(v.q, c) + " " + icnot_param(v.g);
      },
      g);
}

std::string format_circuit(const Circuit& c) {
  std::string s = "circuit frames=" + std::to_string(c.n) +
                  " receivers=" + std::to_string(c.receivers) + "\n";
  for (std::size_t i = 0; i < c.gates.size();) {
    // Collapse runs of Hadamards on consecutive qubits into a range.
    if (auto* h = std::get_if<Hadamard>(&c.gates[i])) {
      std::size_t j = i + 1;
      while (j < c.gates.size()) {
        auto* h2 = std::get_if<Hadamard>(&c.gates[j]);
        if (!h2 || h2->q != h->q + static_cast<int>(j - i) ||
            (h->q < c.receivers) != (h2->q < c.receivers))
          break;
        ++j;
      }
      if (j - i > 1) {
        s += "H " + qubit_label(h->q, c.receivers) + ".." +
             qubit_label(h->q + static_cast<int>(j - i) - 1, c.receivers) + "\n";
        i = j;
        continue;
      }
    }
    s += format_gate(c.gates[i], c.receivers) + "\n";
    ++i;
  }
  return s;
}

Circuit parse_circuit(std::string_view text) {
  LineCursor cur(text);
  return read_circuit(cur);
}

std::string detect_kind(std::string_view text) {
  LineCursor cur(text);
  auto l = cur.next();
  if (!l) throw ParseError("empty input", 1, 1);
  std::string_view t = LineCursor::trim(l->text);
  if (t.substr(0, 4) == "gf4 ") return "gf4";
  if (t.substr(0, 6) == "pauli ") return "pauli";
  if (t.substr(0, 6) == "omega ") return "omega";
  if (t.substr(0, 8) == "circuit ") return "circuit";
  if (t.substr(0, 7) == "frames=") {
    if (text.find("# ops:") != std::string_view::npos) return "gsresult";
    return "checkmatrix";
  }
  throw ParseError("unrecognized artifact header", l->number, 1);
}

namespace {

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

PolyMatrix matrix_from_json(const Json& j, Eigen::Index r, Eigen::Index c) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != r)
    throw ParseError("json: wrong row count", 1, 1);
  PolyMatrix m = zero_matrix(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c)
      throw ParseError("json: wrong column count in row " + std::to_string(i + 1), 1, 1);
    for (Eigen::Index k = 0; k < c; ++k)
      m(i, k) = parse_rational(row[static_cast<std::size_t>(k)].get<std::string>());
  }
  return m;
}

template <class F>
auto json_guard(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("json: ") + e.what(), 1, 1);
  }
}

}  // namespace

Json check_matrix_json(const CheckMatrix& h) {
  return Json{{"kind", "checkmatrix"},
              {"frames", h.frames()},
              {"generators", h.rows()},
              {"z", matrix_json(h.z)},
              {"x", matrix_json(h.x)}};
}

CheckMatrix check_matrix_from_json(const Json& j) {
  return json_guard([&] {
    const auto n = j.at("frames").get<Eigen::Index>();
    const auto r = j.at("generators").get<Eigen::Index>();
    if (n <= 0 || r <= 0) throw ParseError("json: empty check matrix", 1, 1);
    return CheckMatrix(matrix_from_json(j.at("z"), r, n),
                       matrix_from_json(j.at("x"), r, n));
  });
}

Json gf4_json(const Gf4Matrix& g) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < g.rows; ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < g.cols; ++k) row.push_back(g(i, k).str());
    rows.push_back(row);
  }
  return Json{{"kind", "gf4"}, {"cols", g.cols}, {"rows", g.rows}, {"entries", rows}};
}

Gf4Matrix gf4_from_json(const Json& j) {
  return json_guard([&] {
    Gf4Matrix g(j.at("rows").get<Eigen::Index>(), j.at("cols").get<Eigen::Index>());
    if (g.rows <= 0 || g.cols <= 0) throw ParseError("json: empty generator list", 1, 1);
    const Json& e = j.at("entries");
    for (Eigen::Index i = 0; i < g.rows; ++i)
      for (Eigen::Index k = 0; k < g.cols; ++k)
        g(i, k) = Gf4Poly::parse(e.at(static_cast<std::size_t>(i))
                                     .at(static_cast<std::size_t>(k))
                                     .get<std::string>());
    return g;
  });
}

Json pauli_json(const std::vector<PauliFrameSeq>& seqs) {
  Json gens = Json::array();
  for (const auto& s : seqs) gens.push_back(s.str());
  return Json{{"kind", "pauli"},
              {"frames", seqs.empty() ? 0 : seqs.front().frame_size},
              {"generators", gens}};
}

std::vector<PauliFrameSeq> pauli_from_json(const Json& j) {
  return json_guard([&] {
    const int n = j.at("frames").get<int>();
    std::vector<PauliFrameSeq> out;
    for (const auto& g : j.at("generators")) {
      out.push_back(PauliFrameSeq::parse(g.get<std::string>()));
      if (out.back().frame_size != n)
        throw InconsistentFrameSize("json: frame size differs from header");
    }
    if (out.empty()) throw ParseError("json: empty generator list", 1, 1);
    return out;
  });
}

Json omega_json(const OmegaMatrix& om) {
  return Json{{"kind", "omega"}, {"size", om.rows()}, {"omega", matrix_json(om)}};
}

OmegaMatrix omega_from_json(const Json& j) {
  return json_guard([&] {
    const auto r = j.at("size").get<Eigen::Index>();
    return matrix_from_json(j.at("omega"), r, r);
  });
}

Json gs_result_json(const GSResult& gs) {
  Json ops = Json::array();
  for (const auto& op : gs.ops) ops.push_back(row_op_str(op));
  return Json{{"kind", "gsresult"}, {"l", gs.l}, {"c", gs.c}, {"a", gs.a},
              {"k", gs.k}, {"matrix", check_matrix_json(gs.h_std)}, {"ops", ops}};
}

GSResult gs_result_from_json(const Json& j) {
  return json_guard([&] {
    GSResult gs;
    gs.h_std = check_matrix_from_json(j.at("matrix"));
    gs.l = j.at("l").get<int>();
    gs.c = j.at("c").get<int>();
    gs.a = j.at("a").get<int>();
    if (gs.l < 1 || 2 * gs.c + gs.a != gs.h_std.rows())
      throw ParseError("json: inconsistent l, c, a", 1, 1);
    int line = 0;
    for (const auto& op : j.at("ops"))
      gs.ops.push_back(parse_row_op(op.get<std::string>(), ++line));
    gs.k = gs.n() - static_cast<int>(gs.h_std.rows());
    return gs;
  });
}

Json circuit_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates) gates.push_back(format_gate(g, c.receivers));
  return Json{{"kind", "circuit"}, {"frames", c.n}, {"receivers", c.receivers},
              {"gates", gates}};
}

Circuit circuit_from_json(const Json& j) {
  return json_guard([&] {
    std::string text = "circuit frames=" + std::to_string(j.at("frames").get<int>()) +
                       " receivers=" + std::to_string(j.at("receivers").get<int>()) + "\n";
    for (const auto& g : j.at("gates")) text += g.get<std::string>() + "\n";
    return parse_circuit(text);
  });
}

}  // namespace eaqcc
