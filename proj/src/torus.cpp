#include "agr/torus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "agr/fixtures.hpp"
#include "agr/octonion.hpp"
#include "agr/xmin.hpp"

namespace agr {

Character tilde_unit_character(int k) {
  // Eigenvalues of t_{lambda,mu} on t_1..t_7: 1, 1/l^2, l^2, l/m, m/l,
  // 1/(lm), lm.
  static const Character table[8] = {{0, 0}, {0, 0},  {-2, 0}, {2, 0},
                                     {1, -1}, {-1, 1}, {-1, -1}, {1, 1}};
  if (k < 1 || k > 7) throw std::invalid_argument("tilde_unit_character: index");
  return table[k];
}

Character tilde_tri_character(const grass::TriIndex& t) {
  return tilde_unit_character(t.i) + tilde_unit_character(t.j) + tilde_unit_character(t.k);
}

}  // namespace agr

namespace agr::torus {

RingPtr torus_ring() {
  static const RingPtr r = PolyRing::make({"lambda", "mu"}, /*laurent=*/true);
  return r;
}

namespace {

MPoly lm(int a, int b) {
  RingPtr r = torus_ring();
  MPoly p = MPoly::constant(r, GaussQ(1));
  if (a != 0) p *= MPoly::variable(r, 0, a);
  if (b != 0) p *= MPoly::variable(r, 1, b);
  return p;
}

}  // namespace

Matrix<MPoly> torus_matrix_e() {
  RingPtr r = torus_ring();
  // Diagonal MatrixPair action: (x, y) -> (c_l x c_l^-1, c_m y c_l^-1).
  Matrix<MPoly> d(8, 8, MPoly(r));
  d.at(0, 0) = lm(0, 0);
  d.at(1, 1) = lm(2, 0);
  d.at(2, 2) = lm(-2, 0);
  d.at(3, 3) = lm(0, 0);
  d.at(4, 4) = lm(-1, 1);
  d.at(5, 5) = lm(1, 1);
  d.at(6, 6) = lm(-1, -1);
  d.at(7, 7) = lm(1, -1);
  Matrix<MPoly> t8 = lift(octo::e_from_mp8(), r) * d * lift(octo::mp_from_e8(), r);
  // The unit row/column stays trivial; keep the 7x7 imaginary block.
  Matrix<MPoly> t7(7, 7, MPoly(r));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) t7.at(i, j) = t8.at(i + 1, j + 1);
  return t7;
}

std::array<MPoly, 7> torus_eigenvalues_tilde() {
  RingPtr r = torus_ring();
  Matrix<MPoly> conj = lift(octo::tilde_from_e7(), r) * torus_matrix_e() *
                       lift(octo::e_from_tilde7(), r);
  std::array<MPoly, 7> diag;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (i == j) {
        diag[i] = conj.at(i, j);
      } else if (!conj.at(i, j).is_zero()) {
        throw std::logic_error("torus_eigenvalues_tilde: conjugated matrix not diagonal");
      }
    }
  return diag;
}

Character weight_of(const TriIndex& t) { return tilde_tri_character(t); }

std::vector<WeightGroup> weight_table() {
  std::map<Character, std::vector<TriIndex>> groups;
  for (const TriIndex& t : TriIndex::all()) groups[weight_of(t)].push_back(t);
  std::vector<WeightGroup> out;
  for (auto& [ch, ts] : groups) out.push_back({ch, std::move(ts)});
  return out;
}

const std::vector<FixedPoint>& fixed_points() {
  static const std::vector<FixedPoint> pts = [] {
    for (int a = 1; a <= 7; ++a)
      for (int b = a + 1; b <= 7; ++b)
        if (tilde_unit_character(a) == tilde_unit_character(b))
          throw std::logic_error("fixed_points: coordinate characters not distinct");
    std::vector<FixedPoint> out;
    for (const TriIndex& t : TriIndex::all()) {
      grass::TriVector w;
      w.basis = octo::Basis::Tilde;
      w.c[t.rank()] = GaussQ(1);
      if (xmin::member(w)) out.push_back({t, weight_of(t)});
    }
    return out;
  }();
  return pts;
}

DeepCheckResult eigenspace_deep_check(Character ch) {
  // Coordinates of the eigenspace.
  std::vector<TriIndex> basis;
  for (const TriIndex& t : TriIndex::all())
    if (weight_of(t) == ch) basis.push_back(t);
  const std::size_t k = basis.size();
  if (k < 2)
    throw std::invalid_argument("eigenspace_deep_check: multiplicity below 2 for " + ch.str());

  std::vector<int> class_index(35, -1);
  for (std::size_t n = 0; n < k; ++n) class_index[basis[n].rank()] = static_cast<int>(n);

  // Linear constraints: the seven tilde covectors restricted to the class.
  const auto& cov = xmin::model().covectors_tilde;
  std::vector<std::vector<GaussQ>> linear(7, std::vector<GaussQ>(k, GaussQ(0)));
  for (int f = 0; f < 7; ++f)
    for (std::size_t n = 0; n < k; ++n) linear[f][n] = cov[f].c[basis[n].rank()];

  // Restricted Plucker quadrics: monomial lists (x, y, coeff).
  struct Quadric {
    std::vector<std::tuple<int, int, GaussQ>> monos;
  };
  std::vector<Quadric> quadrics;
  for (const grass::PluckerRelation& rel : grass::plucker_relations()) {
    Quadric q;
    bool nonzero = false;
    for (int s = 0; s < 4; ++s) {
      int a1 = rel.i1, a2 = rel.i2, a3 = rel.j[s];
      int sign1 = grass::TriIndex::sort_sign(a1, a2, a3);
      if (sign1 == 0) continue;
      int others[3], n = 0;
      for (int t = 0; t < 4; ++t)
        if (t != s) others[n++] = rel.j[t];
      int b1 = others[0], b2 = others[1], b3 = others[2];
      int sign2 = grass::TriIndex::sort_sign(b1, b2, b3);
      if (sign2 == 0) continue;
      int x = class_index[grass::TriIndex::rank_of(a1, a2, a3)];
      int y = class_index[grass::TriIndex::rank_of(b1, b2, b3)];
      if (x < 0 || y < 0) continue;
      GaussQ c = GaussQ((s % 2 == 0 ? 1 : -1) * sign1 * sign2);
      q.monos.emplace_back(std::min(x, y), std::max(x, y), c);
      nonzero = true;
    }
    if (!nonzero) continue;
    // Collect monomials; drop quadrics that cancel to zero on the class.
    std::map<std::pair<int, int>, GaussQ> acc;
    for (auto& [x, y, c] : q.monos) acc[{x, y}] += c;
    Quadric red;
    for (auto& [xy, c] : acc)
      if (!c.is_zero()) red.monos.emplace_back(xy.first, xy.second, c);
    if (!red.monos.empty()) quadrics.push_back(std::move(red));
  }

  DeepCheckResult res;

  // Single supports: coordinate candidates; they lie on X_min iff no linear
  // form touches them.
  const std::vector<FixedPoint>& fps = fixed_points();
  for (std::size_t n = 0; n < k; ++n) {
    bool touched = false;
    for (int f = 0; f < 7; ++f)
      if (!linear[f][n].is_zero()) touched = true;
    if (touched) continue;
    res.surviving_coordinates.push_back(basis[n]);
    bool is_fixed = std::any_of(fps.begin(), fps.end(), [&](const FixedPoint& p) {
      return p.index == basis[n];
    });
    if (!is_fixed) {
      res.status = DeepCheckStatus::Counterexample;
      res.detail = "surviving coordinate " + basis[n].str() + " is not a listed fixed point";
      return res;
    }
  }

  // Support patterns of size >= 2: assume every coefficient in S nonzero and
  // look for a constraint that collapses to a single term (a forced zero).
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    bool eliminated = false;
    for (int f = 0; f < 7 && !eliminated; ++f) {
      int terms = 0;
      for (std::size_t n = 0; n < k; ++n)
        if ((mask >> n & 1u) && !linear[f][n].is_zero()) ++terms;
      if (terms == 1) eliminated = true;
    }
    for (std::size_t qn = 0; qn < quadrics.size() && !eliminated; ++qn) {
      int monos = 0;
      for (auto& [x, y, c] : quadrics[qn].monos)
        if ((mask >> x & 1u) && (mask >> y & 1u)) ++monos;
      if (monos == 1) eliminated = true;
    }
    if (!eliminated) {
      res.status = DeepCheckStatus::Undecided;
      std::string pat;
      for (std::size_t n = 0; n < k; ++n)
        if (mask >> n & 1u) pat += (pat.empty() ? "" : ",") + basis[n].str();
      res.detail = "support pattern {" + pat + "} not eliminated";
      return res;
    }
  }

  res.status = DeepCheckStatus::Confirmed;
  return res;
}

namespace {

std::vector<Character> all_tangent_characters() {
  std::vector<Character> out;
  for (const FixedPoint& p : fixed_points())
    for (const xmin::TangentVector& v : xmin::tangent_frame(p.index).basis)
      out.push_back(v.character);
  return out;
}

}  // namespace

std::optional<Character> vanishing_character(OneParamSubgroup g) {
  static const std::vector<Character> chars = all_tangent_characters();
  for (Character ch : chars)
    if (g.pair(ch) == 0) return ch;
  return std::nullopt;
}

bool is_regular(OneParamSubgroup g) { return !vanishing_character(g).has_value(); }

std::vector<BBCell> bb_decomposition(OneParamSubgroup g) {
  if (auto ch = vanishing_character(g))
    throw std::domain_error("bb_decomposition: subgroup " + g.str() +
                            " is not regular; character " + ch->str() + " pairs to zero");
  std::vector<BBCell> cells;
  for (const FixedPoint& p : fixed_points()) {
    BBCell cell;
    cell.point = p;
    for (const xmin::TangentVector& v : xmin::tangent_frame(p.index).basis) {
      long w = g.pair(v.character);
      cell.weights.push_back(w);
      if (w > 0) ++cell.plus_dim;
      if (w < 0) ++cell.minus_dim;
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<long> poincare(OneParamSubgroup g) {
  std::vector<long> coeff(9, 0);
  for (const BBCell& c : bb_decomposition(g)) ++coeff[c.plus_dim];
  return coeff;
}

WonderfulComparison wonderful_compare() {
  WonderfulComparison wc;
  wc.wonderful = fixtures::wonderful_coefficients();
  wc.x_min = poincare(OneParamSubgroup{10, 1});
  wc.all_nonnegative = true;
  for (std::size_t d = 0; d < wc.wonderful.size() && d < wc.x_min.size(); ++d) {
    wc.difference.push_back(wc.wonderful[d] - wc.x_min[d]);
    if (wc.difference.back() < 0) wc.all_nonnegative = false;
  }
  return wc;
}

OrbitCount special_orbit_count() {
  // Restricted diagram: two nodes joined by an edge; node 0 carries the
  // support I.  Delta_I(J) = union of components of (diagram minus J)
  // meeting I, encoded as a bitmask over {node0, node1}.
  OrbitCount oc;
  for (unsigned J = 0; J < 4; ++J) {
    unsigned alive = ~J & 3u;
    unsigned value = 0;
    if (alive == 3u) {
      value = 3u;  // connected, meets I
    } else if (alive & 1u) {
      value = 1u;  // component {node0} meets I
    } else {
      value = 0u;  // {node1} alone misses I, or nothing alive
    }
    oc.delta_values[J] = value;
  }
  std::set<unsigned> distinct(oc.delta_values.begin(), oc.delta_values.end());
  oc.distinct = static_cast<int>(distinct.size());
  return oc;
}

}  // namespace agr::torus
