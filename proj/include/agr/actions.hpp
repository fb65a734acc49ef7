#pragma once

#include "agr/matrix.hpp"
#include "agr/mpoly.hpp"
#include "agr/octonion.hpp"
#include "agr/rng.hpp"

namespace agr::actions {

using octo::Octonion;

// Element of SL2 over the Gaussian rationals.
struct SL2 {
  GaussQ a, b, c, d;  // [[a, b], [c, d]], det = 1

  SL2 inverse() const { return {d, -b, -c, a}; }
};

SL2 make_sl2(const GaussQ& a, const GaussQ& b, const GaussQ& c, const GaussQ& d);
// (1 a; 0 1)(1 0; b 1)(s 0; 0 1/s): exact determinant-1 sampling.
SL2 random_sl2(Rng& rng);

// Action (1): (x1, x2) -> (g x1 g^-1, g x2 g^-1); action (2): (x1, x2) ->
// (x1, g x2).  Both are defined on all of O and restrict to I.
Octonion diag_act(const SL2& g, const Octonion& x);
Octonion left_act(const SL2& g, const Octonion& x);

enum class UnipotentKind { Diag, Left };

// 7x7 matrix of the action of (1 u; 0 1) on the ordered basis e_1..e_7;
// row r holds the coefficients of the image of e_r (the layout of the
// reference tables).  The parameter may be any polynomial, so the
// one-parameter identity can be checked with symbolic u, v, u+v.
Matrix<MPoly> unipotent_matrix(UnipotentKind kind, const MPoly& u);
Matrix<GaussQ> unipotent_matrix(UnipotentKind kind, const GaussQ& u);

// Column-convention matrix (coordinates transform by it): the transpose.
Matrix<GaussQ> unipotent_matrix_col(UnipotentKind kind, const GaussQ& u);

}  // namespace agr::actions
