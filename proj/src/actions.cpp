#include "agr/actions.hpp"

namespace agr::actions {

SL2 make_sl2(const GaussQ& a, const GaussQ& b, const GaussQ& c, const GaussQ& d) {
  if (a * d - b * c != GaussQ(1)) throw std::invalid_argument("make_sl2: determinant not 1");
  return {a, b, c, d};
}

SL2 random_sl2(Rng& rng) {
  GaussQ a = rng.gauss(2), b = rng.gauss(2), s = rng.nonzero_gauss(2);
  // (1 a; 0 1)(1 0; b 1)(s 0; 0 1/s) = (1+ab, a; b, 1)(s 0; 0 1/s)
  GaussQ one(1);
  return {(one + a * b) * s, a / s, b * s, one / s};
}

namespace {

template <class R>
octo::Pair<R> act_pair(UnipotentKind kind, const octo::Mat2<R>& g, const octo::Pair<R>& p) {
  octo::Mat2<R> ginv = g.conj();  // adjugate = inverse for det 1
  if (kind == UnipotentKind::Diag) return {g * p.x * ginv, g * p.y * ginv};
  return {p.x, g * p.y};
}

Octonion apply_action(UnipotentKind kind, const SL2& g, const Octonion& x) {
  octo::Mat2<GaussQ> gm{g.a, g.b, g.c, g.d};
  auto mp = octo::convert(x, octo::Basis::MatrixPair);
  octo::Pair<GaussQ> p = octo::pair_from_mp(mp.c);
  octo::Pair<GaussQ> q = act_pair(kind, gm, p);
  Octonion out;
  out.basis = octo::Basis::MatrixPair;
  out.c = octo::mp_from_pair(q);
  return octo::convert(out, x.basis);
}

}  // namespace

Octonion diag_act(const SL2& g, const Octonion& x) {
  return apply_action(UnipotentKind::Diag, g, x);
}
Octonion left_act(const SL2& g, const Octonion& x) {
  return apply_action(UnipotentKind::Left, g, x);
}

Matrix<MPoly> unipotent_matrix(UnipotentKind kind, const MPoly& u) {
  RingPtr ring = u.ring();
  if (!ring) throw std::invalid_argument("unipotent_matrix: parameter needs a ring");
  MPoly one = MPoly::constant(ring, GaussQ(1));
  MPoly zero(ring);
  octo::Mat2<MPoly> g{one, u, zero, one};

  Matrix<MPoly> out(7, 7, zero);
  for (int r = 1; r <= 7; ++r) {
    // MatrixPair coordinates of e_r, lifted to the polynomial ring.
    auto mp = octo::convert(octo::imag_unit(r), octo::Basis::MatrixPair);
    std::array<MPoly, 8> coords;
    for (int k = 0; k < 8; ++k) coords[k] = MPoly::constant(ring, mp.c[k]);
    octo::Pair<MPoly> p = octo::pair_from_mp(coords);
    octo::Pair<MPoly> q = act_pair(kind, g, p);
    std::array<MPoly, 8> back = octo::apply_q(octo::e_from_mp8(), octo::mp_from_pair(q));
    if (!back[0].is_zero())
      throw std::logic_error("unipotent_matrix: image left the imaginary part");
    for (int c = 1; c <= 7; ++c) out.at(r - 1, c - 1) = back[c];
  }
  return out;
}

Matrix<GaussQ> unipotent_matrix(UnipotentKind kind, const GaussQ& u) {
  static const RingPtr ring = PolyRing::make({"u"});
  static const Matrix<MPoly> sym_diag = unipotent_matrix(UnipotentKind::Diag,
                                                         MPoly::variable(ring, 0));
  static const Matrix<MPoly> sym_left = unipotent_matrix(UnipotentKind::Left,
                                                         MPoly::variable(ring, 0));
  const Matrix<MPoly>& sym = kind == UnipotentKind::Diag ? sym_diag : sym_left;
  Matrix<GaussQ> out(7, 7);
  std::vector<GaussQ> at{u};
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) out.at(r, c) = sym.at(r, c).eval(at);
  return out;
}

Matrix<GaussQ> unipotent_matrix_col(UnipotentKind kind, const GaussQ& u) {
  return unipotent_matrix(kind, u).transpose();
}

}  // namespace agr::actions
