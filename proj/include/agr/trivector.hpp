#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "agr/gaussq.hpp"
#include "agr/matrix.hpp"
#include "agr/octonion.hpp"

namespace agr::grass {

using octo::Basis;

// Sorted triple 1 <= i < j < k <= 7 with its lex rank in [0, 35).
struct TriIndex {
  int i, j, k;

  int rank() const;
  std::string str() const;  // "ijk"

  static const std::array<TriIndex, 35>& all();
  static TriIndex of(int i, int j, int k);      // requires i < j < k
  static int rank_of(int i, int j, int k);      // requires i < j < k
  // Sorts (a, b, c); returns the permutation sign, or 0 on a repeat.
  static int sort_sign(int& a, int& b, int& c);

  friend bool operator==(const TriIndex& x, const TriIndex& y) {
    return x.i == y.i && x.j == y.j && x.k == y.k;
  }
  friend bool operator<(const TriIndex& x, const TriIndex& y) {
    return x.rank() < y.rank();
  }
};

// Element of Lambda^3 C^7 in a tagged basis (E or Tilde), 35 coordinates
// indexed by TriIndex rank.
struct TriVector {
  Basis basis = Basis::E;
  std::array<GaussQ, 35> c{};

  bool is_zero() const {
    for (const auto& v : c)
      if (!v.is_zero()) return false;
    return true;
  }
  GaussQ& operator[](const TriIndex& t) { return c[t.rank()]; }
  const GaussQ& operator[](const TriIndex& t) const { return c[t.rank()]; }

  friend bool operator==(const TriVector& x, const TriVector& y) {
    return x.basis == y.basis && x.c == y.c;
  }
};

// Linear form on Lambda^3 C^7; pairing is the coordinate dot product in a
// matching basis.
struct Covector3 {
  Basis basis = Basis::E;
  std::array<GaussQ, 35> c{};

  GaussQ pair(const TriVector& w) const;
  bool is_zero() const {
    for (const auto& v : c)
      if (!v.is_zero()) return false;
    return true;
  }
};

// 3-plane in I given by a rank-3 matrix of spanning rows.
struct Plane3 {
  Basis basis = Basis::E;
  Matrix<GaussQ> rows;  // 3x7

  static Plane3 span(const std::array<std::array<GaussQ, 7>, 3>& v, Basis basis = Basis::E);
  static Plane3 coordinate(const TriIndex& t, Basis basis = Basis::E);
};

// Third exterior power of a 7x7 matrix: entry (K, J) is the 3x3 minor on
// rows K, columns J.  Trivector coordinates transform by this matrix.
Matrix<GaussQ> exterior_cube(const Matrix<GaussQ>& m);

template <class K>
Matrix<K> exterior_cube_t(const Matrix<K>& m) {
  if (m.rows() != 7 || m.cols() != 7)
    throw std::invalid_argument("exterior_cube: expects 7x7");
  Matrix<K> out(35, 35, K());
  const auto& T = TriIndex::all();
  for (int r = 0; r < 35; ++r)
    for (int c = 0; c < 35; ++c) {
      const TriIndex& K3 = T[r];
      const TriIndex& J = T[c];
      out.at(r, c) =
          det3(m.at(K3.i - 1, J.i - 1), m.at(K3.i - 1, J.j - 1), m.at(K3.i - 1, J.k - 1),
               m.at(K3.j - 1, J.i - 1), m.at(K3.j - 1, J.j - 1), m.at(K3.j - 1, J.k - 1),
               m.at(K3.k - 1, J.i - 1), m.at(K3.k - 1, J.j - 1), m.at(K3.k - 1, J.k - 1));
    }
  return out;
}

TriVector convert(const TriVector& w, Basis target);
Covector3 convert(const Covector3& f, Basis target);

// Wedge of three coordinate vectors (signed 3x3 minors in increasing
// column order).
TriVector wedge3(const std::array<GaussQ, 7>& u, const std::array<GaussQ, 7>& v,
                 const std::array<GaussQ, 7>& w, Basis basis = Basis::E);

// Plucker image of a plane: coordinate at (i,j,k) is the minor on columns
// i < j < k.  Throws on rank below 3.
TriVector plucker(const Plane3& p);

// Classical decomposability criterion: w is a wedge of three vectors iff
// {v : v ^ w = 0} is 3-dimensional; returns that kernel as the witness plane.
std::pair<bool, std::optional<Plane3>> is_decomposable(const TriVector& w);

// One straightening relation instance for d = 3, n = 7.
struct PluckerRelation {
  int i1, i2;             // fixed pair
  std::array<int, 4> j;   // exchanged indices j1 < j2 < j3 < j4
  std::string str() const;

  // sum_s (-1)^(s+1) p_{i1 i2 j_s} p_{j minus j_s}
  GaussQ eval(const TriVector& w) const;
};

const std::vector<PluckerRelation>& plucker_relations();

// Instances violated by w; empty iff w lies on the Grassmann cone.
std::vector<PluckerRelation> plucker_relation_check(const TriVector& w);

}  // namespace agr::grass
