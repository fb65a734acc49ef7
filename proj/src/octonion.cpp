#include "agr/octonion.hpp"

namespace agr::octo {

namespace {

const GaussQ kI = GaussQ::i();

Matrix<GaussQ> build_mp_from_e8() {
  Matrix<GaussQ> m(8, 8);
  auto set_col = [&m](int col, std::array<GaussQ, 8> v) {
    for (int r = 0; r < 8; ++r) m.at(r, col) = v[r];
  };
  GaussQ o(1), z(0);
  set_col(0, {o, z, z, o, z, z, z, z});     // e = (1, 0)
  set_col(1, {kI, z, z, -kI, z, z, z, z});  // e1 = (i, 0)
  set_col(2, {z, o, -o, z, z, z, z, z});    // e2 = (j, 0)
  set_col(3, {z, kI, kI, z, z, z, z, z});   // e3 = (k, 0)
  set_col(4, {z, z, z, z, o, z, z, o});     // e4 = (0, 1)
  set_col(5, {z, z, z, z, kI, z, z, -kI});  // e5 = (0, i)
  set_col(6, {z, z, z, z, z, o, -o, z});    // e6 = (0, j)
  set_col(7, {z, z, z, z, z, kI, kI, z});   // e7 = (0, k)
  return m;
}

Matrix<GaussQ> build_e_from_tilde7() {
  Matrix<GaussQ> m(7, 7);
  auto set_col = [&m](int col, int ea, GaussQ ca, int eb, GaussQ cb) {
    m.at(ea - 1, col) = ca;
    if (eb > 0) m.at(eb - 1, col) = cb;
  };
  set_col(0, 1, GaussQ(1), 0, GaussQ(0));  // t1 = e1
  set_col(1, 2, -kI, 3, GaussQ(1));        // t2 = -i e2 + e3
  set_col(2, 2, kI, 3, GaussQ(1));         // t3 =  i e2 + e3
  set_col(3, 4, -kI, 5, GaussQ(1));        // t4 = -i e4 + e5
  set_col(4, 4, kI, 5, GaussQ(1));         // t5 =  i e4 + e5
  set_col(5, 6, -kI, 7, GaussQ(1));        // t6 = -i e6 + e7
  set_col(6, 6, kI, 7, GaussQ(1));         // t7 =  i e6 + e7
  return m;
}

// 8x8 extension of the tilde change (unit coordinate untouched).
const Matrix<GaussQ>& e_from_tilde8() {
  static const Matrix<GaussQ> m = [] {
    Matrix<GaussQ> x(8, 8);
    x.at(0, 0) = GaussQ(1);
    const Matrix<GaussQ>& t = e_from_tilde7();
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c) x.at(r + 1, c + 1) = t.at(r, c);
    return x;
  }();
  return m;
}

const Matrix<GaussQ>& tilde_from_e8() {
  static const Matrix<GaussQ> m = inverse(e_from_tilde8());
  return m;
}

std::array<GaussQ, 8> to_arr(const std::vector<GaussQ>& v) {
  std::array<GaussQ, 8> a;
  for (int k = 0; k < 8; ++k) a[k] = v[k];
  return a;
}

std::array<GaussQ, 8> mp_coords(const Octonion& x) {
  return convert(x, Basis::MatrixPair).c;
}

Octonion from_mp(const std::array<GaussQ, 8>& c, Basis target) {
  Octonion o;
  o.basis = Basis::MatrixPair;
  o.c = c;
  return convert(o, target);
}

}  // namespace

const Matrix<GaussQ>& mp_from_e8() {
  static const Matrix<GaussQ> m = build_mp_from_e8();
  return m;
}
const Matrix<GaussQ>& e_from_mp8() {
  static const Matrix<GaussQ> m = inverse(build_mp_from_e8());
  return m;
}
const Matrix<GaussQ>& e_from_tilde7() {
  static const Matrix<GaussQ> m = build_e_from_tilde7();
  return m;
}
const Matrix<GaussQ>& tilde_from_e7() {
  static const Matrix<GaussQ> m = inverse(build_e_from_tilde7());
  return m;
}

Octonion unit(Basis basis) {
  Octonion o;
  o.basis = Basis::E;
  o.c[0] = GaussQ(1);
  return convert(o, basis);
}

Octonion imag_unit(int k, Basis basis) {
  if (k < 1 || k > 7) throw std::invalid_argument("imag_unit: index out of range");
  Octonion o;
  o.basis = basis == Basis::MatrixPair ? Basis::E : basis;
  o.c[k] = GaussQ(1);
  return convert(o, basis);
}

Octonion from_imag(const std::array<GaussQ, 7>& v, Basis basis) {
  Octonion o;
  o.basis = basis;
  for (int k = 0; k < 7; ++k) o.c[k + 1] = v[k];
  return o;
}

std::array<GaussQ, 7> imag_part(const Octonion& x) {
  if (x.basis == Basis::MatrixPair)
    throw std::invalid_argument("imag_part: expects E or Tilde coordinates");
  std::array<GaussQ, 7> v;
  for (int k = 0; k < 7; ++k) v[k] = x.c[k + 1];
  return v;
}

Octonion convert(const Octonion& x, Basis target) {
  if (x.basis == target) return x;
  auto pass = [&x](const Matrix<GaussQ>& m, Basis to) {
    Octonion o;
    o.basis = to;
    o.c = to_arr(m.apply(std::vector<GaussQ>(x.c.begin(), x.c.end())));
    return o;
  };
  switch (x.basis) {
    case Basis::MatrixPair:
      if (target == Basis::E) return pass(e_from_mp8(), Basis::E);
      return convert(pass(e_from_mp8(), Basis::E), target);
    case Basis::E:
      if (target == Basis::MatrixPair) return pass(mp_from_e8(), Basis::MatrixPair);
      return pass(tilde_from_e8(), Basis::Tilde);
    case Basis::Tilde:
      if (target == Basis::E) return pass(e_from_tilde8(), Basis::E);
      return convert(pass(e_from_tilde8(), Basis::E), target);
  }
  throw std::logic_error("convert: unreachable");
}

Octonion add(const Octonion& x, const Octonion& y) {
  if (x.basis != y.basis) throw std::invalid_argument("octonion add: basis mismatch");
  Octonion o = x;
  for (int k = 0; k < 8; ++k) o.c[k] += y.c[k];
  return o;
}
Octonion sub(const Octonion& x, const Octonion& y) { return add(x, neg(y)); }
Octonion neg(const Octonion& x) {
  Octonion o = x;
  for (auto& v : o.c) v = -v;
  return o;
}
Octonion scale(const GaussQ& k, const Octonion& x) {
  Octonion o = x;
  for (auto& v : o.c) v *= k;
  return o;
}

Octonion mul(const Octonion& x, const Octonion& y) {
  if (x.basis != y.basis) throw std::invalid_argument("octonion mul: basis mismatch");
  Pair<GaussQ> p = pair_from_mp(mp_coords(x)) * pair_from_mp(mp_coords(y));
  return from_mp(mp_from_pair(p), x.basis);
}

Octonion conj(const Octonion& x) {
  return from_mp(mp_from_pair(pair_from_mp(mp_coords(x)).conj()), x.basis);
}

GaussQ norm(const Octonion& x) { return pair_from_mp(mp_coords(x)).norm(); }

GaussQ inner(const Octonion& x, const Octonion& y) {
  GaussQ half(1, 2);
  return half * (norm(add(convert(x, Basis::E), convert(y, Basis::E))) - norm(x) - norm(y));
}

bool is_imaginary(const Octonion& x) {
  if (x.basis == Basis::MatrixPair) return (x.c[0] + x.c[3]).is_zero();
  return x.c[0].is_zero();
}

Octonion cross(const Octonion& a, const Octonion& b) {
  if (!is_imaginary(a) || !is_imaginary(b))
    throw std::invalid_argument("cross: argument not in I");
  GaussQ half(1, 2);
  return scale(half, sub(mul(a, b), mul(b, a)));
}

GaussQ dot(const Octonion& a, const Octonion& b) {
  if (!is_imaginary(a) || !is_imaginary(b))
    throw std::invalid_argument("dot: argument not in I");
  GaussQ mhalf(-1, 2);
  Octonion s = convert(add(mul(a, b), mul(b, a)), Basis::E);
  return mhalf * s.c[0];
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
}

Octonion triple_cross(const Octonion& x, const Octonion& y, const Octonion& z) {
  GaussQ half(1, 2);
  Octonion yc = conj(y);
  return scale(half, sub(mul(x, mul(yc, z)), mul(z, mul(yc, x))));
}

GaussQ phi3(const Octonion& x, const Octonion& y, const Octonion& z) {
  if (!is_imaginary(x) || !is_imaginary(y) || !is_imaginary(z))
    throw std::invalid_argument("phi3: argument not in I");
  return inner(mul(x, y), z);
}

GaussQ star_phi4(const Octonion& u, const Octonion& v, const Octonion& w, const Octonion& z) {
  if (!is_imaginary(u) || !is_imaginary(v) || !is_imaginary(w) || !is_imaginary(z))
    throw std::invalid_argument("star_phi4: argument not in I");
  return inner(triple_cross(u, v, w), z);
}

Octonion chi3(const Octonion& u, const Octonion& v, const Octonion& w) {
  if (!is_imaginary(u) || !is_imaginary(v) || !is_imaginary(w))
    throw std::invalid_argument("chi3: argument not in I");
  Octonion t = convert(triple_cross(u, v, w), Basis::E);
  Octonion e = unit(Basis::E);
  return convert(sub(t, scale(inner(t, e), e)), u.basis);
}

std::vector<TriTerm> phi_expansion() {
  std::vector<TriTerm> out;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) {
        GaussQ v = phi3(imag_unit(i), imag_unit(j), imag_unit(k));
        if (!v.is_zero()) out.push_back({i, j, k, v});
      }
  return out;
}

std::vector<QuadTerm> star_phi_expansion() {
  std::vector<QuadTerm> out;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k)
        for (int l = k + 1; l <= 7; ++l) {
          GaussQ v = star_phi4(imag_unit(i), imag_unit(j), imag_unit(k), imag_unit(l));
          if (!v.is_zero()) out.push_back({i, j, k, l, v});
        }
  return out;
}

std::array<std::vector<TriTerm>, 7> chi_component_expansion() {
  std::array<std::vector<TriTerm>, 7> out;
  for (int m = 1; m <= 7; ++m) {
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) {
          GaussQ v = inner(chi3(imag_unit(i), imag_unit(j), imag_unit(k)), imag_unit(m));
          if (!v.is_zero()) out[m - 1].push_back({i, j, k, v});
        }
  }
  return out;
}

std::optional<GaussQ> calibration_constant() {
  std::optional<GaussQ> value;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) {
        Octonion x = imag_unit(i), y = imag_unit(j), z = imag_unit(k);
        Octonion assoc = associator(x, y, z);
        Octonion resid = sub(triple_cross(x, y, z), scale(phi3(x, y, z), unit()));
        if (assoc.is_zero()) {
          if (!resid.is_zero()) return std::nullopt;
          continue;
        }
        std::optional<GaussQ> here;
        for (int n = 0; n < 8; ++n) {
          if (assoc.c[n].is_zero()) {
            if (!resid.c[n].is_zero()) return std::nullopt;
            continue;
          }
          GaussQ q = resid.c[n] / assoc.c[n];
          if (!here)
            here = q;
          else if (*here != q)
            return std::nullopt;
        }
        if (!here) return std::nullopt;
        if (!value)
          value = *here;
        else if (*value != *here)
          return std::nullopt;
      }
  return value;
}

std::array<GaussQ, 8> gram_diagonal() {
  std::array<GaussQ, 8> g;
  g[0] = norm(unit());
  for (int k = 1; k <= 7; ++k) g[k] = norm(imag_unit(k));
  return g;
}

bool is_associative_plane(const Matrix<GaussQ>& rows, Basis basis) {
  if (rows.rows() != 3 || rows.cols() != 7)
    throw std::invalid_argument("is_associative_plane: expects a 3x7 matrix");
  if (rank(rows) < 3) throw std::invalid_argument("is_associative_plane: rank below 3");
  std::array<Octonion, 3> b;
  for (int r = 0; r < 3; ++r) {
    std::array<GaussQ, 7> v;
    for (int c = 0; c < 7; ++c) v[c] = rows.at(r, c);
    b[r] = from_imag(v, basis);
    if (!is_imaginary(b[r]))
      throw std::invalid_argument("is_associative_plane: row not in I");
  }
  return associator(b[0], b[1], b[2]).is_zero();
}

}  // namespace agr::octo
