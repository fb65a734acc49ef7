#include <doctest.h>

#include "agr/actions.hpp"
#include "agr/rng.hpp"
#include "agr/trivector.hpp"
#include "agr/xmin.hpp"

using namespace agr;
using namespace agr::actions;
using octo::Basis;
using octo::Octonion;

TEST_CASE("sl2 actions fix the identity element and preserve I") {
  SL2 id = make_sl2(GaussQ(1), GaussQ(0), GaussQ(0), GaussQ(1));
  Rng rng(41);
  for (int s = 0; s < 20; ++s) {
    Octonion x;
    x.basis = Basis::E;
    for (int k = 1; k < 8; ++k) x.c[k] = rng.gauss(2);
    CHECK(diag_act(id, x) == x);
    CHECK(left_act(id, x) == x);
    SL2 g = random_sl2(rng);
    CHECK(octo::is_imaginary(diag_act(g, x)));
    CHECK(octo::is_imaginary(left_act(g, x)));
  }
  CHECK_THROWS_AS(make_sl2(GaussQ(2), GaussQ(0), GaussQ(0), GaussQ(1)), std::invalid_argument);
}

TEST_CASE("diagonal torus factor scales the tilde eigenvector") {
  // g = diag(s, 1/s) under the conjugation action scales t2 by s^-2.
  GaussQ s(2);
  SL2 g = make_sl2(s, GaussQ(0), GaussQ(0), GaussQ(1) / s);
  Octonion t2 = octo::imag_unit(2, Basis::Tilde);
  Octonion img = octo::convert(diag_act(g, octo::convert(t2, Basis::E)), Basis::Tilde);
  CHECK(img == octo::scale(GaussQ(1, 4), t2));
  // the left action fixes the sl2 slot
  Octonion e1 = octo::imag_unit(1);
  CHECK(left_act(g, e1) == e1);
}

TEST_CASE("unipotent matrices") {
  Matrix<GaussQ> d0 = unipotent_matrix(UnipotentKind::Diag, GaussQ(0));
  CHECK(d0 == Matrix<GaussQ>::identity(7));
  Matrix<GaussQ> d1 = unipotent_matrix(UnipotentKind::Diag, GaussQ(1));
  CHECK(d1.at(1, 1) == GaussQ(3, 2));  // entry (2,2): u^2/2 + 1 at u = 1
  Matrix<GaussQ> l1 = unipotent_matrix(UnipotentKind::Left, GaussQ(1));
  CHECK(l1.at(3, 5) == GaussQ(1, 2));  // entry (4,6): u/2

  // one-parameter property at numeric values
  Matrix<GaussQ> a = unipotent_matrix(UnipotentKind::Left, GaussQ(1, 3));
  Matrix<GaussQ> b = unipotent_matrix(UnipotentKind::Left, GaussQ(1, 2));
  Matrix<GaussQ> ab = unipotent_matrix(UnipotentKind::Left, GaussQ(5, 6));
  CHECK(a * b == ab);
}

TEST_CASE("one-parameter property with symbolic parameters") {
  RingPtr ring = PolyRing::make({"u", "v"});
  MPoly u = MPoly::variable(ring, 0), v = MPoly::variable(ring, 1);
  for (auto kind : {UnipotentKind::Diag, UnipotentKind::Left}) {
    Matrix<MPoly> mu = unipotent_matrix(kind, u);
    Matrix<MPoly> mv = unipotent_matrix(kind, v);
    Matrix<MPoly> muv = unipotent_matrix(kind, u + v);
    CHECK(mu * mv == muv);
  }
}

TEST_CASE("multiplicativity of both actions") {
  Rng rng(43);
  for (int s = 0; s < 50; ++s) {
    SL2 g = random_sl2(rng);
    Octonion x, y;
    x.basis = y.basis = Basis::E;
    for (int k = 0; k < 8; ++k) x.c[k] = rng.gauss(2), y.c[k] = rng.gauss(2);
    CHECK(diag_act(g, octo::mul(x, y)) == octo::mul(diag_act(g, x), diag_act(g, y)));
    CHECK(left_act(g, octo::mul(x, y)) == octo::mul(left_act(g, x), left_act(g, y)));
    CHECK(octo::norm(left_act(g, x)) == octo::norm(x));
  }
  // sample identity: g.(e1 e1) = (g.e1)(g.e1) = -e
  SL2 g = random_sl2(rng);
  Octonion e1 = octo::imag_unit(1);
  CHECK(diag_act(g, octo::mul(e1, e1)) == octo::mul(diag_act(g, e1), diag_act(g, e1)));
  CHECK(octo::mul(diag_act(g, e1), diag_act(g, e1)) == octo::neg(octo::unit()));
}

TEST_CASE("images of associative planes stay associative and on X_min") {
  Rng rng(47);
  Matrix<GaussQ> w0(3, 7), u0(3, 7);
  w0.at(0, 0) = w0.at(1, 1) = w0.at(2, 2) = GaussQ(1);
  u0.at(0, 0) = u0.at(1, 5) = u0.at(2, 6) = GaussQ(1);
  for (int s = 0; s < 20; ++s) {
    auto kind = s % 2 == 0 ? UnipotentKind::Diag : UnipotentKind::Left;
    Matrix<GaussQ> m = unipotent_matrix_col(kind, rng.gauss(2));
    for (const Matrix<GaussQ>& base : {w0, u0}) {
      Matrix<GaussQ> img(3, 7);
      for (int r = 0; r < 3; ++r) {
        std::vector<GaussQ> row(7);
        for (int c = 0; c < 7; ++c) row[c] = base.at(r, c);
        auto out = m.apply(row);
        for (int c = 0; c < 7; ++c) img.at(r, c) = out[c];
      }
      CHECK(octo::is_associative_plane(img));
      grass::Plane3 p;
      p.basis = Basis::E;
      p.rows = img;
      CHECK(xmin::member(grass::plucker(p)));
    }
  }
}

TEST_CASE("unipotent fixed trivectors") {
  GaussQ i = GaussQ::i(), one(1);
  auto make = [](std::vector<std::pair<std::array<int, 3>, GaussQ>> terms) {
    grass::TriVector w;
    w.basis = Basis::E;
    for (auto& [t, c] : terms) w.c[grass::TriIndex::rank_of(t[0], t[1], t[2])] = c;
    return w;
  };
  GaussQ u(5, 3);
  auto apply_cube = [](const Matrix<GaussQ>& col, const grass::TriVector& w) {
    Matrix<GaussQ> cube = grass::exterior_cube(col);
    grass::TriVector out;
    out.basis = w.basis;
    for (int r = 0; r < 35; ++r) {
      GaussQ acc(0);
      for (int c = 0; c < 35; ++c)
        if (!w.c[c].is_zero()) acc += cube.at(r, c) * w.c[c];
      out.c[r] = acc;
    }
    return out;
  };

  grass::TriVector diag_fix =
      make({{{1, 2, 6}, -one}, {{1, 2, 7}, i}, {{1, 3, 6}, i}, {{1, 3, 7}, one}});
  CHECK(xmin::member(diag_fix));
  CHECK(apply_cube(unipotent_matrix_col(UnipotentKind::Diag, u), diag_fix) == diag_fix);

  grass::TriVector e123 = make({{{1, 2, 3}, one}});
  CHECK(apply_cube(unipotent_matrix_col(UnipotentKind::Diag, u), e123) == e123);
  CHECK(apply_cube(unipotent_matrix_col(UnipotentKind::Left, u), e123) == e123);

  // The printed second fixed point of the left action violates four Plucker
  // relations and moves; flipping the sign of its e356 term gives the
  // actual fixed point.
  grass::TriVector left_printed =
      make({{{3, 4, 6}, -one}, {{3, 4, 7}, i}, {{3, 5, 6}, -i}, {{3, 5, 7}, one}});
  CHECK_FALSE(grass::is_decomposable(left_printed).first);
  CHECK(grass::plucker_relation_check(left_printed).size() == 4);
  CHECK_FALSE(apply_cube(unipotent_matrix_col(UnipotentKind::Left, u), left_printed) ==
              left_printed);

  grass::TriVector left_fixed =
      make({{{3, 4, 6}, -one}, {{3, 4, 7}, i}, {{3, 5, 6}, i}, {{3, 5, 7}, one}});
  CHECK(xmin::member(left_fixed));
  CHECK(apply_cube(unipotent_matrix_col(UnipotentKind::Left, u), left_fixed) == left_fixed);
}
