#pragma once

#include <array>
#include <string>
#include <vector>

#include "agr/mpoly.hpp"
#include "agr/trivector.hpp"

namespace agr::grass {

// The 12 triples J with |J meet I| = 2, in lex order; these index the
// coordinates q_J = p_J / p_I of the affine chart U_I.
std::vector<TriIndex> adjacent_triples(const TriIndex& I);

struct ChartPoint {
  TriIndex chart;
  std::array<GaussQ, 12> q{};  // aligned with adjacent_triples(chart)
};

// Ratios p_J / p_I; throws "not in chart" when p_I vanishes.
ChartPoint chart_coords(const TriVector& w, const TriIndex& I);

// Canonical section of the chart: a 3x7 symbolic matrix with the identity
// block in the columns of I, whose 3x3 minors realize every Plucker ratio
// p_J / p_I as a polynomial in the 12 chart variables.
struct ChartParam {
  TriIndex chart;
  RingPtr ring;                   // variables named q_ijk, lex order
  Matrix<MPoly> section;          // 3x7
  std::array<MPoly, 35> minors;   // minor for every sorted triple; minor at I is 1
};

const ChartParam& chart_param(const TriIndex& I);

// Evaluate the 35 minors at a chart point (the Plucker ratios of the
// corresponding plane).
std::array<GaussQ, 35> minors_at(const ChartParam& cp, const ChartPoint& pt);

// One printed identity q_target = sum of monomials in q's; factor triples
// may be chart variables or higher Plucker ratios (substituted by minors).
struct ChartIdentity {
  std::string name;
  TriIndex target;
  struct Monomial {
    GaussQ coeff;
    std::vector<TriIndex> factors;
  };
  std::vector<Monomial> rhs;
};

struct ChartAuditLine {
  std::string name;
  bool matches;           // printed identity holds as exact polynomial identity
  std::string printed;    // the printed right-hand side
  std::string corrected;  // the oracle polynomial (minor expansion)
};

// The printed U_123 identity list (18 quadratic, 4 cubic, plus the ratio
// example), audited against the symbolic-minor oracle.
const std::vector<ChartIdentity>& printed_chart_identities();
std::vector<ChartAuditLine> chart_identity_audit();

}  // namespace agr::grass
