#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "agr/character.hpp"
#include "agr/matrix.hpp"
#include "agr/mpoly.hpp"
#include "agr/trivector.hpp"

namespace agr::torus {

using grass::TriIndex;

struct FixedPoint {
  TriIndex index;       // tilde coordinate plane
  Character character;  // sum of the three coordinate characters
};

struct BBCell {
  FixedPoint point;
  std::vector<long> weights;  // 8 tangent weights under the chosen subgroup
  int plus_dim = 0;
  int minus_dim = 0;
};

// Laurent ring in (lambda, mu).
RingPtr torus_ring();

// 7x7 matrix of t_{lambda,mu} on the E basis of I (column c = image of
// e_c), derived from the diagonal MatrixPair action by base change.
Matrix<MPoly> torus_matrix_e();

// Conjugation by the tilde base change; returns the diagonal (throws if the
// conjugated matrix is not diagonal).
std::array<MPoly, 7> torus_eigenvalues_tilde();

Character weight_of(const TriIndex& t);

struct WeightGroup {
  Character ch;
  std::vector<TriIndex> triples;  // lex order
};
// All 35 coordinate trivectors grouped by character, sorted by character.
std::vector<WeightGroup> weight_table();

// The torus-fixed points of X_min: coordinate planes surviving the seven
// linear forms.  Precondition (checked): the 7 coordinate characters are
// pairwise distinct, so invariant 3-planes are exactly coordinate planes.
const std::vector<FixedPoint>& fixed_points();

enum class DeepCheckStatus { Confirmed, Undecided, Counterexample };
struct DeepCheckResult {
  DeepCheckStatus status = DeepCheckStatus::Undecided;
  std::vector<TriIndex> surviving_coordinates;
  std::string detail;
};
// Bounded semi-decision procedure for "X_min meets the eigenspace of ch in
// coordinate points only": support-pattern elimination by single-term
// linear constraints and single-monomial restricted Plucker quadrics.
// Requires multiplicity >= 2.
DeepCheckResult eigenspace_deep_check(Character ch);

// Regular iff the subgroup pairs nonzero with every tangent character at
// every fixed point.
bool is_regular(OneParamSubgroup g);
std::optional<Character> vanishing_character(OneParamSubgroup g);

std::vector<BBCell> bb_decomposition(OneParamSubgroup g);  // throws if irregular
// Coefficient k at t^d counts plus-cells of complex dimension d (d = 0..8).
std::vector<long> poincare(OneParamSubgroup g);

struct WonderfulComparison {
  std::vector<long> wonderful;   // stored reference coefficients
  std::vector<long> x_min;       // poincare((10,1))
  std::vector<long> difference;  // wonderful - x_min
  bool all_nonnegative = false;
};
WonderfulComparison wonderful_compare();

// Orbit combinatorics of the restricted 2-node diagram {2a1, 2a2} with
// support I = {2a1}: Delta_I(J) for the four subsets J, and the number of
// distinct values (= orbit count).
struct OrbitCount {
  std::array<unsigned, 4> delta_values{};  // bitmask subsets of {2a1, 2a2}
  int distinct = 0;
};
OrbitCount special_orbit_count();

}  // namespace agr::torus
