#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "agr/gaussq.hpp"
#include "agr/matrix.hpp"

namespace agr::octo {

// Coordinate bases for the split octonions O = D (+) D, D = Mat2.
//   MatrixPair: (e11,0),(e12,0),(e21,0),(e22,0),(0,e11),(0,e12),(0,e21),(0,e22)
//   E:          e, e1..e7 with e1=(i,0), e2=(j,0), e3=(k,0), e4=(0,1),
//               e5=(0,i), e6=(0,j), e7=(0,k)
//   Tilde:      e, t1..t7 with t1=e1, t2=-i e2+e3, t3=i e2+e3, t4=-i e4+e5,
//               t5=i e4+e5, t6=-i e6+e7, t7=i e6+e7 (torus eigenbasis)
enum class Basis { MatrixPair, E, Tilde };

// --- generic 2x2 block algebra -------------------------------------------

template <class R>
struct Mat2 {
  R a, b, c, d;  // [[a, b], [c, d]]

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  R det() const { return a * d - b * c; }
  // Quaternion conjugation on Mat2 is the adjugate: tr(x) I - x.
  Mat2 conj() const { return {d, R() - b, R() - c, a}; }
};

// Octonion as a pair of 2x2 blocks; Cayley-Dickson product.
template <class R>
struct Pair {
  Mat2<R> x, y;

  friend Pair operator+(const Pair& u, const Pair& v) { return {u.x + v.x, u.y + v.y}; }
  friend Pair operator-(const Pair& u, const Pair& v) { return {u.x - v.x, u.y - v.y}; }
  // (a,b)(c,d) = (ac + conj(d) b, da + b conj(c))
  friend Pair operator*(const Pair& u, const Pair& v) {
    return {u.x * v.x + v.y.conj() * u.y, v.y * u.x + u.y * v.x.conj()};
  }
  Pair conj() const {
    Mat2<R> z{R(), R(), R(), R()};
    return {x.conj(), z - y};
  }
  R norm() const { return x.det() - y.det(); }
};

template <class R>
Pair<R> pair_from_mp(const std::array<R, 8>& c) {
  return {{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6], c[7]}};
}
template <class R>
std::array<R, 8> mp_from_pair(const Pair<R>& p) {
  return {p.x.a, p.x.b, p.x.c, p.x.d, p.y.a, p.y.b, p.y.c, p.y.d};
}

// Matrix over GaussQ applied to a coordinate vector over R.
template <class R, std::size_t N>
std::array<R, N> apply_q(const Matrix<GaussQ>& m, const std::array<R, N>& v) {
  std::array<R, N> out{};
  for (std::size_t r = 0; r < N; ++r) {
    R acc{};
    for (std::size_t c = 0; c < N; ++c)
      if (!m.at(r, c).is_zero()) acc += m.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

// --- fixed change-of-basis data -------------------------------------------

// Columns are MatrixPair coordinates of e, e1..e7.
const Matrix<GaussQ>& mp_from_e8();
const Matrix<GaussQ>& e_from_mp8();
// 7x7 change on the imaginary part; columns are E coordinates of t1..t7.
const Matrix<GaussQ>& e_from_tilde7();
const Matrix<GaussQ>& tilde_from_e7();

// --- octonion value type over GaussQ --------------------------------------

struct Octonion {
  Basis basis = Basis::E;
  // Meaning by tag: MatrixPair -> the 8 pair coordinates; E/Tilde -> c[0] is
  // the coefficient of the unit e, c[1..7] the imaginary coordinates.
  std::array<GaussQ, 8> c{};

  bool is_zero() const {
    for (const auto& v : c)
      if (!v.is_zero()) return false;
    return true;
  }
  friend bool operator==(const Octonion& x, const Octonion& y) {
    return x.basis == y.basis && x.c == y.c;
  }
  friend bool operator!=(const Octonion& x, const Octonion& y) { return !(x == y); }
};

Octonion unit(Basis basis = Basis::E);
// Basis vector e_k (k = 1..7) of the imaginary part, in the E basis;
// with Basis::Tilde, the eigenvector t_k.
Octonion imag_unit(int k, Basis basis = Basis::E);
Octonion from_imag(const std::array<GaussQ, 7>& v, Basis basis = Basis::E);
std::array<GaussQ, 7> imag_part(const Octonion& x);

Octonion convert(const Octonion& x, Basis target);

Octonion add(const Octonion& x, const Octonion& y);
Octonion sub(const Octonion& x, const Octonion& y);
Octonion neg(const Octonion& x);
Octonion scale(const GaussQ& k, const Octonion& x);
// Cayley-Dickson product; arguments must carry the same basis tag.
Octonion mul(const Octonion& x, const Octonion& y);
Octonion conj(const Octonion& x);

GaussQ norm(const Octonion& x);
GaussQ inner(const Octonion& x, const Octonion& y);

// x lies in I = e^perp  (first quaternion component trace-zero).
bool is_imaginary(const Octonion& x);

// cross/dot on the imaginary part: a x b = (ab - ba)/2, a.b = -(ab + ba)/2
// (dot returns the scalar slot, i.e. the coefficient of e).
Octonion cross(const Octonion& a, const Octonion& b);
GaussQ dot(const Octonion& a, const Octonion& b);

// [x,y,z] = (xy)z - x(yz)
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);
// x X y X z = ( x(conj(y) z) - z(conj(y) x) ) / 2
Octonion triple_cross(const Octonion& x, const Octonion& y, const Octonion& z);

// phi(x,y,z) = <xy, z> on I.
GaussQ phi3(const Octonion& x, const Octonion& y, const Octonion& z);
// *phi(u,v,w,z) = <u X v X w, z> on I.
GaussQ star_phi4(const Octonion& u, const Octonion& v, const Octonion& w, const Octonion& z);
// chi(u,v,w): the I-valued form with <chi(u,v,w), z> = *phi(u,v,w,z);
// equivalently the I-component of the triple cross.
Octonion chi3(const Octonion& u, const Octonion& v, const Octonion& w);

// --- closed-form coefficient tables (E basis) ------------------------------

struct TriTerm {
  int i, j, k;  // 1 <= i < j < k <= 7
  GaussQ coeff;
};
struct QuadTerm {
  int i, j, k, l;
  GaussQ coeff;
};

// Nonzero coefficients of phi on sorted basis triples (convention
// e^{ijk}(e_i,e_j,e_k) = 1, no 1/3! factor).
std::vector<TriTerm> phi_expansion();
std::vector<QuadTerm> star_phi_expansion();
// Component m (1..7): table of *phi(e_i,e_j,e_k,e_m), i.e. the pairing
// <chi(e_i,e_j,e_k), e_m>.  These are the seven defining covectors.
std::array<std::vector<TriTerm>, 7> chi_component_expansion();

// Diagonal of the inner product on the E basis (e, e1..e7).
std::array<GaussQ, 8> gram_diagonal();

// The unique constant c with x X y X z = phi(x,y,z) e + c [x,y,z] across
// all 35 sorted basis triples, when one exists (nullopt if no single
// constant fits).
std::optional<GaussQ> calibration_constant();

// True iff the rank-3 row span (rows = imaginary vectors in the E basis) is
// an associative plane: the associator of a basis vanishes.  Throws if the
// row rank is below 3.
bool is_associative_plane(const Matrix<GaussQ>& rows, Basis basis = Basis::E);

}  // namespace agr::octo
