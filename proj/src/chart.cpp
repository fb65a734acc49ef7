#include "agr/chart.hpp"

#include <map>

namespace agr::grass {

std::vector<TriIndex> adjacent_triples(const TriIndex& I) {
  std::vector<TriIndex> out;
  for (const TriIndex& J : TriIndex::all()) {
    int common = 0;
    for (int a : {J.i, J.j, J.k})
      if (a == I.i || a == I.j || a == I.k) ++common;
    if (common == 2) out.push_back(J);
  }
  return out;  // 12 triples, lex order
}

ChartPoint chart_coords(const TriVector& w, const TriIndex& I) {
  const GaussQ& pI = w.c[I.rank()];
  if (pI.is_zero()) throw std::domain_error("chart_coords: not in chart (p_I = 0)");
  ChartPoint pt;
  pt.chart = I;
  std::vector<TriIndex> adj = adjacent_triples(I);
  for (int n = 0; n < 12; ++n) pt.q[n] = w.c[adj[n].rank()] / pI;
  return pt;
}

namespace {

ChartParam build_chart_param(const TriIndex& I) {
  ChartParam cp;
  cp.chart = I;
  std::vector<TriIndex> adj = adjacent_triples(I);
  std::vector<std::string> names;
  names.reserve(12);
  for (const TriIndex& J : adj) names.push_back("q" + J.str());
  cp.ring = PolyRing::make(names);

  const int icols[3] = {I.i - 1, I.j - 1, I.k - 1};
  auto row_of = [&](int col) {
    for (int r = 0; r < 3; ++r)
      if (icols[r] == col) return r;
    return -1;
  };

  cp.section = Matrix<MPoly>(3, 7, MPoly(cp.ring));
  for (int r = 0; r < 3; ++r) cp.section.at(r, icols[r]) = MPoly::constant(cp.ring, GaussQ(1));

  for (int c = 0; c < 7; ++c) {
    if (row_of(c) >= 0) continue;
    for (int r = 0; r < 3; ++r) {
      // J = (I minus i_r) + column; sign chosen so that the minor at J equals
      // the chart variable q_J exactly.
      int a = icols[(r + 1) % 3] + 1, b = icols[(r + 2) % 3] + 1, v = c + 1;
      if (TriIndex::sort_sign(a, b, v) == 0) continue;
      TriIndex J = TriIndex::of(a, b, v);
      // Probe the sign numerically: identity block plus a single 1 at (r, c).
      Matrix<GaussQ> probe(3, 7);
      for (int s = 0; s < 3; ++s) probe.at(s, icols[s]) = GaussQ(1);
      probe.at(r, c) = GaussQ(1);
      GaussQ minor = det3(probe.at(0, J.i - 1), probe.at(0, J.j - 1), probe.at(0, J.k - 1),
                          probe.at(1, J.i - 1), probe.at(1, J.j - 1), probe.at(1, J.k - 1),
                          probe.at(2, J.i - 1), probe.at(2, J.j - 1), probe.at(2, J.k - 1));
      int var = -1;
      for (int n = 0; n < 12; ++n)
        if (adj[n] == J) var = n;
      MPoly q = MPoly::variable(cp.ring, static_cast<std::size_t>(var));
      cp.section.at(r, c) = minor == GaussQ(1) ? q : GaussQ(1) / minor * q;
    }
  }

  for (const TriIndex& J : TriIndex::all()) {
    cp.minors[J.rank()] =
        det3(cp.section.at(0, J.i - 1), cp.section.at(0, J.j - 1), cp.section.at(0, J.k - 1),
             cp.section.at(1, J.i - 1), cp.section.at(1, J.j - 1), cp.section.at(1, J.k - 1),
             cp.section.at(2, J.i - 1), cp.section.at(2, J.j - 1), cp.section.at(2, J.k - 1));
  }
  return cp;
}

}  // namespace

const ChartParam& chart_param(const TriIndex& I) {
  static std::map<int, ChartParam> cache;
  auto it = cache.find(I.rank());
  if (it == cache.end()) it = cache.emplace(I.rank(), build_chart_param(I)).first;
  return it->second;
}

std::array<GaussQ, 35> minors_at(const ChartParam& cp, const ChartPoint& pt) {
  std::vector<GaussQ> point(pt.q.begin(), pt.q.end());
  std::array<GaussQ, 35> out;
  for (int n = 0; n < 35; ++n) out[n] = cp.minors[n].eval(point);
  return out;
}

namespace {

using Mono = ChartIdentity::Monomial;

TriIndex T(int i, int j, int k) { return TriIndex::of(i, j, k); }

// The printed quadratic identity table on U_123: q_target = c1*qA*qB + c2*qC*qD.
struct QuadLine {
  int t[3];
  long c1;
  int a[3], b[3];
  long c2;
  int c[3], d[3];
};

const QuadLine kQuadratics[] = {
    {{1, 4, 5}, -1, {1, 2, 4}, {1, 3, 5}, -1, {1, 3, 4}, {1, 2, 5}},
    {{1, 4, 6}, -1, {1, 2, 4}, {1, 3, 6}, -1, {1, 3, 4}, {1, 2, 6}},
    {{1, 4, 7}, -1, {1, 2, 4}, {1, 3, 7}, -1, {1, 3, 4}, {1, 2, 7}},
    {{1, 5, 6}, -1, {1, 2, 5}, {1, 3, 6}, -1, {1, 3, 5}, {1, 2, 6}},
    {{1, 5, 7}, -1, {1, 2, 5}, {1, 3, 7}, -1, {1, 3, 5}, {1, 2, 7}},
    {{1, 6, 7}, -1, {1, 2, 6}, {1, 3, 7}, -1, {1, 3, 6}, {1, 2, 7}},
    {{2, 4, 5}, +1, {1, 2, 4}, {2, 3, 5}, -1, {2, 3, 4}, {1, 2, 5}},
    {{2, 4, 6}, +1, {1, 2, 4}, {2, 3, 6}, -1, {2, 3, 4}, {1, 2, 6}},
    {{2, 4, 7}, +1, {1, 2, 4}, {2, 3, 7}, -1, {2, 3, 4}, {1, 2, 7}},
    {{2, 5, 6}, +1, {1, 2, 5}, {2, 3, 6}, -1, {2, 3, 5}, {1, 2, 6}},
    {{2, 5, 7}, +1, {1, 2, 5}, {2, 3, 7}, -1, {2, 3, 5}, {1, 2, 7}},
    {{2, 6, 7}, +1, {1, 2, 6}, {2, 3, 7}, -1, {2, 3, 6}, {1, 2, 7}},
    {{3, 4, 5}, +1, {1, 3, 4}, {2, 3, 5}, +1, {2, 3, 4}, {1, 3, 5}},
    {{3, 4, 6}, +1, {1, 3, 4}, {2, 3, 6}, +1, {2, 3, 4}, {1, 3, 6}},
    {{3, 4, 7}, +1, {1, 3, 4}, {2, 3, 7}, +1, {2, 3, 4}, {1, 3, 7}},
    {{3, 5, 6}, +1, {1, 3, 5}, {2, 3, 6}, +1, {2, 3, 5}, {1, 3, 6}},
    {{3, 5, 7}, +1, {1, 3, 5}, {2, 3, 7}, +1, {2, 3, 5}, {1, 3, 7}},
    {{3, 6, 7}, +1, {1, 3, 6}, {2, 3, 7}, +1, {2, 3, 6}, {1, 3, 7}},
};

std::vector<ChartIdentity> build_printed_identities() {
  std::vector<ChartIdentity> out;
  for (const QuadLine& q : kQuadratics) {
    ChartIdentity id;
    id.name = "q" + T(q.t[0], q.t[1], q.t[2]).str();
    id.target = T(q.t[0], q.t[1], q.t[2]);
    id.rhs.push_back(Mono{GaussQ(q.c1), {T(q.a[0], q.a[1], q.a[2]), T(q.b[0], q.b[1], q.b[2])}});
    id.rhs.push_back(Mono{GaussQ(q.c2), {T(q.c[0], q.c[1], q.c[2]), T(q.d[0], q.d[1], q.d[2])}});
    out.push_back(std::move(id));
  }

  // The four printed cubic identities: each expands
  //   q_{abc} = (printed q_{1..} line) q_{23x} + (printed q_{2..} line) q_{13x}
  //           + (printed q_{3..} line) q_{12x}
  const int cubics[4][3] = {{4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}};
  for (const auto& cs : cubics) {
    int p = cs[0], q = cs[1], r = cs[2];
    // (-q_{12p} q_{13q} - q_{13p} q_{12q}) q_{23r}
    // (+q_{12p} q_{23q} - q_{23p} q_{12q}) q_{13r}
    // (+q_{13p} q_{23q} + q_{23p} q_{13q}) q_{12r}
    ChartIdentity id;
    id.name = "q" + T(p, q, r).str() + " (cubic)";
    id.target = T(p, q, r);
    id.rhs = {
        Mono{GaussQ(-1), {T(1, 2, p), T(1, 3, q), T(2, 3, r)}},
        Mono{GaussQ(-1), {T(1, 3, p), T(1, 2, q), T(2, 3, r)}},
        Mono{GaussQ(1), {T(1, 2, p), T(2, 3, q), T(1, 3, r)}},
        Mono{GaussQ(-1), {T(2, 3, p), T(1, 2, q), T(1, 3, r)}},
        Mono{GaussQ(1), {T(1, 3, p), T(2, 3, q), T(1, 2, r)}},
        Mono{GaussQ(1), {T(2, 3, p), T(1, 3, q), T(1, 2, r)}},
    };
    out.push_back(std::move(id));
  }

  // The worked ratio example: q456 = q145 q236 + q245 q136 + q345 q126,
  // with level-2 ratios on the right-hand side.
  ChartIdentity ex;
  ex.name = "q456 via level-2 ratios";
  ex.target = T(4, 5, 6);
  ex.rhs = {Mono{GaussQ(1), {T(1, 4, 5), T(2, 3, 6)}},
            Mono{GaussQ(1), {T(2, 4, 5), T(1, 3, 6)}},
            Mono{GaussQ(1), {T(3, 4, 5), T(1, 2, 6)}}};
  out.push_back(std::move(ex));
  return out;
}

std::string mono_str(const Mono& m) {
  std::string s = m.coeff.str();
  if (s == "1")
    s = "";
  else if (s == "-1")
    s = "-";
  for (const TriIndex& f : m.factors) {
    if (!s.empty() && s != "-") s += "*";
    s += "q" + f.str();
  }
  return s;
}

}  // namespace

const std::vector<ChartIdentity>& printed_chart_identities() {
  static const std::vector<ChartIdentity> ids = build_printed_identities();
  return ids;
}

std::vector<ChartAuditLine> chart_identity_audit() {
  const ChartParam& cp = chart_param(TriIndex::of(1, 2, 3));
  std::vector<ChartAuditLine> out;
  for (const ChartIdentity& id : printed_chart_identities()) {
    MPoly rhs(cp.ring);
    for (const Mono& m : id.rhs) {
      MPoly term = MPoly::constant(cp.ring, m.coeff);
      for (const TriIndex& f : m.factors) term *= cp.minors[f.rank()];
      rhs += term;
    }
    const MPoly& oracle = cp.minors[id.target.rank()];
    ChartAuditLine line;
    line.name = id.name;
    line.matches = rhs == oracle;
    std::string printed;
    for (std::size_t n = 0; n < id.rhs.size(); ++n) {
      std::string t = mono_str(id.rhs[n]);
      if (n && t[0] != '-') printed += " + ";
      if (n && t[0] == '-') printed += " - ", t = t.substr(1);
      printed += t;
    }
    line.printed = printed;
    line.corrected = line.matches ? "" : oracle.str();
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace agr::grass
