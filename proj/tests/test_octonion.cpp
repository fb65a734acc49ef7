#include <doctest.h>

#include "agr/octonion.hpp"
#include "agr/rng.hpp"

using namespace agr;
using namespace agr::octo;

namespace {

Octonion random_oct(Rng& rng, bool imaginary) {
  Octonion o;
  o.basis = Basis::E;
  for (int k = imaginary ? 1 : 0; k < 8; ++k) o.c[k] = rng.gauss(2);
  return o;
}

}  // namespace

TEST_CASE("cayley-dickson product on basis vectors") {
  Octonion e = unit();
  CHECK(mul(e, imag_unit(5)) == imag_unit(5));
  CHECK(mul(imag_unit(5), e) == imag_unit(5));
  CHECK(mul(imag_unit(1), imag_unit(1)) == neg(e));
  CHECK(mul(imag_unit(4), imag_unit(4)) == e);
  CHECK(mul(imag_unit(1), imag_unit(2)) == imag_unit(3));

  Octonion tilde = imag_unit(2, Basis::Tilde);
  CHECK_THROWS_AS(mul(imag_unit(1), tilde), std::invalid_argument);
}

TEST_CASE("norm and inner product") {
  CHECK(norm(unit()) == GaussQ(1));
  CHECK(norm(imag_unit(4)) == GaussQ(-1));
  CHECK(norm(imag_unit(1)) == GaussQ(1));
  CHECK(inner(imag_unit(5), imag_unit(6)) == GaussQ(0));
  auto g = gram_diagonal();
  for (int k = 0; k < 4; ++k) CHECK(g[k] == GaussQ(1));
  for (int k = 4; k < 8; ++k) CHECK(g[k] == GaussQ(-1));
}

TEST_CASE("composition law") {
  std::vector<Octonion> basis{unit()};
  for (int k = 1; k <= 7; ++k) basis.push_back(imag_unit(k));
  for (const auto& x : basis)
    for (const auto& y : basis) CHECK(norm(mul(x, y)) == norm(x) * norm(y));
  Rng rng(3);
  for (int s = 0; s < 200; ++s) {
    Octonion x = random_oct(rng, false), y = random_oct(rng, false);
    CHECK(norm(mul(x, y)) == norm(x) * norm(y));
    CHECK(conj(mul(x, y)) == mul(conj(y), conj(x)));
  }
}

TEST_CASE("cross and dot products") {
  CHECK(cross(imag_unit(1), imag_unit(1)).is_zero());
  CHECK(cross(imag_unit(1), imag_unit(2)) == imag_unit(3));
  CHECK(dot(imag_unit(4), imag_unit(4)) == GaussQ(-1));
  CHECK_THROWS_AS(cross(unit(), imag_unit(1)), std::invalid_argument);

  Rng rng(5);
  Octonion e = unit();
  for (int s = 0; s < 100; ++s) {
    Octonion a = random_oct(rng, true), b = random_oct(rng, true);
    CHECK(mul(a, b) == add(scale(-dot(a, b), e), cross(a, b)));
    GaussQ d = dot(a, b);
    CHECK(norm(mul(a, b)) == d * d + norm(cross(a, b)));
    CHECK(d == inner(a, b));
  }
}

TEST_CASE("associator and triple cross") {
  Octonion e = unit();
  Rng rng(9);
  for (int s = 0; s < 50; ++s) {
    Octonion x = random_oct(rng, false), y = random_oct(rng, false);
    CHECK(associator(x, x, y).is_zero());
    CHECK(triple_cross(x, x, y).is_zero());
    CHECK(triple_cross(x, y, y).is_zero());
    CHECK(triple_cross(x, y, x).is_zero());
  }
  CHECK(associator(imag_unit(1), imag_unit(2), imag_unit(3)).is_zero());
  CHECK(associator(imag_unit(1), imag_unit(4), imag_unit(6)) == scale(GaussQ(2), imag_unit(3)));
  CHECK(triple_cross(imag_unit(1), imag_unit(2), imag_unit(3)) == e);
  CHECK(triple_cross(imag_unit(1), imag_unit(4), imag_unit(6)) == imag_unit(3));
}

TEST_CASE("calibration constant is one half") {
  auto c = calibration_constant();
  REQUIRE(c.has_value());
  CHECK(*c == GaussQ(1, 2));
}

TEST_CASE("forms on the imaginary part") {
  CHECK(phi3(imag_unit(1), imag_unit(2), imag_unit(3)) == GaussQ(1));
  CHECK(phi3(imag_unit(1), imag_unit(4), imag_unit(5)) == GaussQ(-1));
  CHECK(phi3(imag_unit(1), imag_unit(1), imag_unit(2)) == GaussQ(0));
  CHECK(star_phi4(imag_unit(4), imag_unit(5), imag_unit(6), imag_unit(7)) == GaussQ(-1));

  // phi(x,y,z) is the coefficient of e in the triple cross.
  Octonion t = triple_cross(imag_unit(1), imag_unit(2), imag_unit(3));
  CHECK(inner(t, unit()) == phi3(imag_unit(1), imag_unit(2), imag_unit(3)));

  // chi of a quaternionic triple vanishes; otherwise it is half the
  // associator.
  CHECK(chi3(imag_unit(1), imag_unit(2), imag_unit(3)).is_zero());
  CHECK(chi3(imag_unit(1), imag_unit(4), imag_unit(6)) == imag_unit(3));
}

TEST_CASE("form expansions have the printed shapes") {
  auto phi = phi_expansion();
  CHECK(phi.size() == 7);
  auto sphi = star_phi_expansion();
  CHECK(sphi.size() == 7);
  // complementary monomials: each *phi term is the complement of a phi term
  for (const auto& t : sphi) {
    bool used[8] = {};
    used[t.i] = used[t.j] = used[t.k] = used[t.l] = true;
    bool found = false;
    for (const auto& p : phi)
      if (!used[p.i] && !used[p.j] && !used[p.k]) found = true;
    CHECK(found);
  }
  auto chi = chi_component_expansion();
  std::size_t terms = 0;
  for (const auto& comp : chi) terms += comp.size();
  CHECK(terms == 28);
}

TEST_CASE("associative planes") {
  auto plane = [](int a, int b, int c) {
    Matrix<GaussQ> rows(3, 7);
    rows.at(0, a - 1) = GaussQ(1);
    rows.at(1, b - 1) = GaussQ(1);
    rows.at(2, c - 1) = GaussQ(1);
    return rows;
  };
  CHECK(is_associative_plane(plane(1, 2, 3)));
  CHECK(is_associative_plane(plane(1, 6, 7)));
  CHECK_FALSE(is_associative_plane(plane(1, 4, 6)));

  Matrix<GaussQ> degenerate(3, 7);
  degenerate.at(0, 0) = GaussQ(1);
  degenerate.at(1, 0) = GaussQ(1);
  degenerate.at(2, 1) = GaussQ(1);
  CHECK_THROWS_AS(is_associative_plane(degenerate), std::invalid_argument);
}

TEST_CASE("basis conversions round trip") {
  Rng rng(17);
  for (int s = 0; s < 50; ++s) {
    Octonion x = random_oct(rng, false);
    CHECK(convert(convert(x, Basis::MatrixPair), Basis::E) == x);
    CHECK(convert(convert(x, Basis::Tilde), Basis::E) == x);
    // multiplication is basis-independent
    Octonion y = random_oct(rng, false);
    Octonion via_tilde = convert(
        mul(convert(x, Basis::Tilde), convert(y, Basis::Tilde)), Basis::E);
    CHECK(via_tilde == mul(x, y));
  }
}
