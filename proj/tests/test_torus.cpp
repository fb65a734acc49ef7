#include <doctest.h>

#include <map>
#include <set>

#include "agr/fixtures.hpp"
#include "agr/torus.hpp"

using namespace agr;
using namespace agr::torus;

TEST_CASE("torus matrix on the E basis") {
  Matrix<MPoly> t = torus_matrix_e();
  RingPtr ring = torus_ring();
  auto lam = [&](int a, int b) {
    MPoly p = MPoly::constant(ring, GaussQ(1));
    if (a) p *= MPoly::variable(ring, 0, a);
    if (b) p *= MPoly::variable(ring, 1, b);
    return p;
  };
  // column of e1 is e1
  CHECK(t.at(0, 0) == lam(0, 0));
  for (int r = 1; r < 7; ++r) CHECK(t.at(r, 0).is_zero());
  // column of e2: (l^2 + 1/l^2)/2 e2 + i(-l^2 + 1/l^2)/2 e3
  GaussQ half(1, 2);
  CHECK(t.at(1, 1) == half * lam(2, 0) + half * lam(-2, 0));
  CHECK(t.at(2, 1) == GaussQ::i() * half * (lam(-2, 0) - lam(2, 0)));
  CHECK(t.at(0, 1).is_zero());
  // column of e4: ((m/l + l/m)/2, i(-m/l + l/m)/2) in rows 4, 5
  CHECK(t.at(3, 3) == half * (lam(-1, 1) + lam(1, -1)));
  CHECK(t.at(4, 3) == GaussQ::i() * half * (lam(1, -1) - lam(-1, 1)));
}

TEST_CASE("tilde eigenbasis diagonalizes the torus") {
  auto diag = torus_eigenvalues_tilde();
  RingPtr ring = torus_ring();
  auto lam = [&](int a, int b) {
    MPoly p = MPoly::constant(ring, GaussQ(1));
    if (a) p *= MPoly::variable(ring, 0, a);
    if (b) p *= MPoly::variable(ring, 1, b);
    return p;
  };
  CHECK(diag[0] == lam(0, 0));
  CHECK(diag[1] == lam(-2, 0));
  CHECK(diag[2] == lam(2, 0));
  CHECK(diag[3] == lam(1, -1));
  CHECK(diag[4] == lam(-1, 1));
  CHECK(diag[5] == lam(-1, -1));
  CHECK(diag[6] == lam(1, 1));
}

TEST_CASE("weights of coordinate trivectors") {
  CHECK(weight_of(grass::TriIndex::of(1, 2, 3)) == Character{0, 0});
  CHECK(weight_of(grass::TriIndex::of(1, 2, 6)) == Character{-3, -1});
  CHECK(weight_of(grass::TriIndex::of(3, 5, 7)) == Character{2, 2});
}

TEST_CASE("weight table matches the reference grouping") {
  auto table = weight_table();
  CHECK(table.size() == 19);
  std::size_t total = 0;
  for (const auto& g : table) total += g.triples.size();
  CHECK(total == 35);

  auto ref = fixtures::weight_table();
  REQUIRE(ref.size() == 19);
  for (const auto& row : ref) {
    bool found = false;
    for (const auto& g : table) {
      if (!(g.ch == row.ch)) continue;
      found = true;
      REQUIRE(g.triples.size() == row.triples.size());
      for (const auto& t : row.triples) {
        bool in = false;
        for (const auto& s : g.triples)
          if (s == t) in = true;
        CHECK(in);
      }
    }
    CHECK(found);
  }
}

TEST_CASE("fixed point enumeration") {
  const auto& pts = fixed_points();
  CHECK(pts.size() == 15);
  bool has_123 = false, has_124 = false;
  for (const auto& p : pts) {
    if (p.index == grass::TriIndex::of(1, 2, 3)) {
      has_123 = true;
      CHECK(p.character == Character{0, 0});
    }
    if (p.index == grass::TriIndex::of(1, 2, 4)) has_124 = true;
  }
  CHECK(has_123);
  CHECK_FALSE(has_124);

  auto ref = fixtures::fixed_points();
  REQUIRE(ref.size() == 15);
  for (const auto& [t, ch] : ref) {
    bool found = false;
    for (const auto& p : pts)
      if (p.index == t && p.character == ch) found = true;
    CHECK(found);
  }
}

TEST_CASE("eigenspace deep check") {
  auto res11 = eigenspace_deep_check(Character{1, 1});
  CHECK(res11.status == DeepCheckStatus::Confirmed);
  CHECK(res11.surviving_coordinates.empty());

  auto res00 = eigenspace_deep_check(Character{0, 0});
  CHECK(res00.status == DeepCheckStatus::Confirmed);
  REQUIRE(res00.surviving_coordinates.size() == 3);
  std::set<int> surv;
  for (const auto& t : res00.surviving_coordinates) surv.insert(t.rank());
  std::set<int> want{grass::TriIndex::rank_of(1, 6, 7), grass::TriIndex::rank_of(1, 4, 5),
                     grass::TriIndex::rank_of(1, 2, 3)};
  CHECK(surv == want);

  CHECK_THROWS_AS(eigenspace_deep_check(Character{2, 2}), std::invalid_argument);

  for (const auto& g : weight_table()) {
    if (g.triples.size() < 2) continue;
    CHECK(eigenspace_deep_check(g.ch).status == DeepCheckStatus::Confirmed);
  }
}

TEST_CASE("regularity of one-parameter subgroups") {
  CHECK(is_regular({10, 1}));
  CHECK_FALSE(is_regular({1, 1}));
  CHECK_FALSE(is_regular({0, 0}));
  auto ch = vanishing_character({1, 1});
  REQUIRE(ch.has_value());
  CHECK(OneParamSubgroup{1, 1}.pair(*ch) == 0);
}

TEST_CASE("bb decomposition under (10,1)") {
  auto cells = bb_decomposition({10, 1});
  REQUIRE(cells.size() == 15);
  std::map<int, const BBCell*> by_rank;
  for (const auto& c : cells) by_rank[c.point.index.rank()] = &c;

  const BBCell* c123 = by_rank[grass::TriIndex::rank_of(1, 2, 3)];
  REQUIRE(c123 != nullptr);
  std::multiset<long> w123(c123->weights.begin(), c123->weights.end());
  CHECK(w123 == std::multiset<long>{11, -11, -9, 9, 31, 29, -31, -29});
  CHECK(c123->plus_dim == 4);

  const BBCell* c347 = by_rank[grass::TriIndex::rank_of(3, 4, 7)];
  REQUIRE(c347 != nullptr);
  CHECK(c347->plus_dim == 0);
  for (long w : c347->weights) CHECK(w < 0);

  for (const auto& c : cells) CHECK(c.plus_dim + c.minus_dim == 8);

  CHECK_THROWS_AS(bb_decomposition({1, 1}), std::domain_error);
}

TEST_CASE("poincare polynomial") {
  std::vector<long> want{1, 1, 2, 2, 3, 2, 2, 1, 1};
  CHECK(poincare({10, 1}) == want);
  CHECK(poincare({100, 1}) == want);
  CHECK(poincare({7, 3}) == want);
  long euler = 0;
  for (long c : want) euler += c;
  CHECK(euler == 15);
}

TEST_CASE("wonderful comparison") {
  auto wc = wonderful_compare();
  CHECK(wc.wonderful == std::vector<long>{1, 2, 4, 4, 5, 4, 4, 2, 1});
  CHECK(wc.difference == std::vector<long>{0, 1, 2, 2, 2, 2, 2, 1, 0});
  CHECK(wc.all_nonnegative);
}

TEST_CASE("orbit count") {
  auto oc = special_orbit_count();
  CHECK(oc.distinct == 3);
  CHECK(oc.delta_values[0] == 3u);  // {2a1, 2a2}
  CHECK(oc.delta_values[1] == 0u);  // {}
  CHECK(oc.delta_values[2] == 1u);  // {2a1}
  CHECK(oc.delta_values[3] == 0u);  // {}
}
