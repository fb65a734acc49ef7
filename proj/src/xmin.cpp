#include "agr/xmin.hpp"

#include <map>

#include "agr/fixtures.hpp"
#include "agr/octonion.hpp"

namespace agr::xmin {

namespace {

XminModel build_model() {
  XminModel m;
  auto tables = octo::chi_component_expansion();
  for (int k = 0; k < 7; ++k) {
    m.covectors_e[k].basis = Basis::E;
    for (const octo::TriTerm& t : tables[k])
      m.covectors_e[k].c[TriIndex::rank_of(t.i, t.j, t.k)] = t.coeff;
    m.covectors_tilde[k] = grass::convert(m.covectors_e[k], Basis::Tilde);
  }
  auto pe = fixtures::linear_forms("reference_linear_forms_e.txt");
  auto pt = fixtures::linear_forms("reference_linear_forms_tilde.txt");
  for (int k = 0; k < 7; ++k) {
    m.printed_e[k].basis = Basis::E;
    m.printed_e[k].c = pe[k];
    m.printed_tilde[k].basis = Basis::Tilde;
    m.printed_tilde[k].c = pt[k];
  }
  return m;
}

Matrix<GaussQ> covector_matrix(const std::array<Covector3, 7>& f) {
  Matrix<GaussQ> m(7, 35);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 35; ++c) m.at(r, c) = f[r].c[c];
  return m;
}

}  // namespace

const XminModel& model() {
  static const XminModel m = build_model();
  return m;
}

std::vector<FormComparison> compare_printed(Basis basis) {
  const XminModel& m = model();
  const auto& derived = basis == Basis::E ? m.covectors_e : m.covectors_tilde;
  const auto& printed = basis == Basis::E ? m.printed_e : m.printed_tilde;
  Matrix<GaussQ> dm = covector_matrix(derived);
  std::size_t dr = rank(dm);
  std::vector<FormComparison> out;
  for (int k = 0; k < 7; ++k) {
    FormComparison fc;
    fc.index = k + 1;
    std::vector<GaussQ> row(printed[k].c.begin(), printed[k].c.end());
    fc.in_span = row_space_contains(dm, row);
    // proportionality against the derived form with the same index
    GaussQ factor;
    bool prop = true, have = false;
    for (int c = 0; c < 35; ++c) {
      const GaussQ& d = derived[k].c[c];
      const GaussQ& p = printed[k].c[c];
      if (d.is_zero() != p.is_zero()) {
        prop = false;
        break;
      }
      if (d.is_zero()) continue;
      GaussQ f = p / d;
      if (!have) {
        factor = f;
        have = true;
      } else if (f != factor) {
        prop = false;
        break;
      }
    }
    fc.proportional = prop && have;
    if (fc.proportional) fc.factor = factor;
    out.push_back(fc);
  }
  return out;
}

std::vector<FormComparison> compare_printed_tilde_adjusted() {
  const XminModel& m = model();
  Matrix<GaussQ> dm = covector_matrix(m.covectors_tilde);
  std::vector<FormComparison> out;
  for (int k = 0; k < 7; ++k) {
    Covector3 adj = m.printed_tilde[k];
    for (const TriIndex& t : TriIndex::all())
      if (t.i == 1) adj.c[t.rank()] = adj.c[t.rank()] * GaussQ(1, 2);
    FormComparison fc;
    fc.index = k + 1;
    std::vector<GaussQ> row(adj.c.begin(), adj.c.end());
    fc.in_span = row_space_contains(dm, row);
    GaussQ factor;
    bool prop = true, have = false;
    for (int c = 0; c < 35; ++c) {
      const GaussQ& d = m.covectors_tilde[k].c[c];
      const GaussQ& p = adj.c[c];
      if (d.is_zero() != p.is_zero()) {
        prop = false;
        break;
      }
      if (d.is_zero()) continue;
      GaussQ f = p / d;
      if (!have) {
        factor = f;
        have = true;
      } else if (f != factor) {
        prop = false;
        break;
      }
    }
    fc.proportional = prop && have;
    if (fc.proportional) fc.factor = factor;
    out.push_back(fc);
  }
  return out;
}

bool member(const TriVector& w) {
  if (w.is_zero()) throw std::invalid_argument("xmin::member: zero trivector");
  const XminModel& m = model();
  const auto& cov = w.basis == Basis::Tilde ? m.covectors_tilde : m.covectors_e;
  for (const Covector3& f : cov)
    if (!f.pair(w).is_zero()) return false;
  return grass::is_decomposable(w).first;
}

std::array<MPoly, 7> chart_equations(const TriIndex& I, Basis basis) {
  const grass::ChartParam& cp = grass::chart_param(I);
  const XminModel& m = model();
  const auto& cov = basis == Basis::Tilde ? m.covectors_tilde : m.covectors_e;
  std::array<MPoly, 7> out;
  for (int k = 0; k < 7; ++k) {
    MPoly acc(cp.ring);
    for (int n = 0; n < 35; ++n)
      if (!cov[k].c[n].is_zero()) acc += cov[k].c[n] * cp.minors[n];
    out[k] = acc;
  }
  return out;
}

Matrix<GaussQ> jacobian_at(const TriIndex& I) {
  std::array<MPoly, 7> eqs = chart_equations(I, Basis::Tilde);
  std::vector<GaussQ> origin(12, GaussQ(0));
  Matrix<GaussQ> jac(7, 12);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 12; ++c) jac.at(r, c) = eqs[r].derivative(c).eval(origin);
  return jac;
}

std::size_t jacobian_rank_at(const TriIndex& I) { return rank(jacobian_at(I)); }

TangentFrame tangent_frame(const TriIndex& I) {
  TangentFrame tf;
  tf.point = I;
  tf.jacobian = jacobian_at(I);
  tf.rank = rank(tf.jacobian);

  const std::vector<TriIndex> adj = grass::adjacent_triples(I);
  const Character chI = tilde_tri_character(I);

  // Group chart columns by tangent character and intersect the kernel with
  // each character line; the kernel is torus stable, so the pieces fill it.
  std::map<Character, std::vector<int>> classes;
  for (int n = 0; n < 12; ++n)
    classes[tilde_tri_character(adj[n]) - chI].push_back(n);

  std::size_t full_dim = 12 - tf.rank;
  std::size_t found = 0;
  for (const auto& [ch, cols] : classes) {
    Matrix<GaussQ> sub(7, cols.size());
    for (int r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) sub.at(r, c) = tf.jacobian.at(r, cols[c]);
    for (const auto& v : kernel(sub)) {
      TangentVector tv;
      tv.coords.assign(12, GaussQ(0));
      for (std::size_t c = 0; c < cols.size(); ++c) tv.coords[cols[c]] = v[c];
      tv.character = ch;
      tf.basis.push_back(std::move(tv));
      ++found;
    }
  }
  if (found != full_dim)
    throw std::logic_error("tangent_frame: kernel is not a sum of character lines");
  return tf;
}

}  // namespace agr::xmin
