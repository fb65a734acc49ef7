#include "agr/trivector.hpp"

#include <algorithm>

namespace agr::grass {

namespace {

std::array<TriIndex, 35> build_triples() {
  std::array<TriIndex, 35> out;
  int n = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) out[n++] = TriIndex{i, j, k};
  return out;
}

// rank lookup by (i,j,k), 1-based strictly increasing
int rank_table[8][8][8];
bool rank_table_ready = [] {
  int n = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k) rank_table[i][j][k] = n++;
  return true;
}();

// 4-subsets of {1..7} for Lambda^4 coordinates (decomposability test).
struct QuadIndex {
  int a, b, c, d;
};
std::array<QuadIndex, 35> build_quads() {
  std::array<QuadIndex, 35> out;
  int n = 0;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      for (int c = b + 1; c <= 7; ++c)
        for (int d = c + 1; d <= 7; ++d) out[n++] = {a, b, c, d};
  return out;
}
int quad_rank[8][8][8][8];
bool quad_rank_ready = [] {
  int n = 0;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      for (int c = b + 1; c <= 7; ++c)
        for (int d = c + 1; d <= 7; ++d) quad_rank[a][b][c][d] = n++;
  return true;
}();

}  // namespace

const std::array<TriIndex, 35>& TriIndex::all() {
  static const std::array<TriIndex, 35> t = build_triples();
  return t;
}

int TriIndex::rank() const { return rank_table[i][j][k]; }

TriIndex TriIndex::of(int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= 7))
    throw std::invalid_argument("TriIndex: indices must be strictly increasing in 1..7");
  return TriIndex{i, j, k};
}

int TriIndex::rank_of(int i, int j, int k) { return of(i, j, k).rank(); }

int TriIndex::sort_sign(int& a, int& b, int& c) {
  int sign = 1;
  if (a > b) std::swap(a, b), sign = -sign;
  if (b > c) std::swap(b, c), sign = -sign;
  if (a > b) std::swap(a, b), sign = -sign;
  if (a == b || b == c) return 0;
  return sign;
}

std::string TriIndex::str() const {
  return std::to_string(i) + std::to_string(j) + std::to_string(k);
}

GaussQ Covector3::pair(const TriVector& w) const {
  if (basis != w.basis) throw std::invalid_argument("Covector3: basis mismatch");
  GaussQ acc(0);
  for (int n = 0; n < 35; ++n) acc += c[n] * w.c[n];
  return acc;
}

Plane3 Plane3::span(const std::array<std::array<GaussQ, 7>, 3>& v, Basis basis) {
  Plane3 p;
  p.basis = basis;
  p.rows = Matrix<GaussQ>(3, 7);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) p.rows.at(r, c) = v[r][c];
  return p;
}

Plane3 Plane3::coordinate(const TriIndex& t, Basis basis) {
  Plane3 p;
  p.basis = basis;
  p.rows = Matrix<GaussQ>(3, 7);
  p.rows.at(0, t.i - 1) = GaussQ(1);
  p.rows.at(1, t.j - 1) = GaussQ(1);
  p.rows.at(2, t.k - 1) = GaussQ(1);
  return p;
}

Matrix<GaussQ> exterior_cube(const Matrix<GaussQ>& m) {
  if (m.rows() != 7 || m.cols() != 7) throw std::invalid_argument("exterior_cube: expects 7x7");
  Matrix<GaussQ> out(35, 35);
  const auto& T = TriIndex::all();
  for (int r = 0; r < 35; ++r)
    for (int c = 0; c < 35; ++c) {
      const TriIndex& K = T[r];
      const TriIndex& J = T[c];
      out.at(r, c) =
          det3(m.at(K.i - 1, J.i - 1), m.at(K.i - 1, J.j - 1), m.at(K.i - 1, J.k - 1),
               m.at(K.j - 1, J.i - 1), m.at(K.j - 1, J.j - 1), m.at(K.j - 1, J.k - 1),
               m.at(K.k - 1, J.i - 1), m.at(K.k - 1, J.j - 1), m.at(K.k - 1, J.k - 1));
    }
  return out;
}

namespace {

const Matrix<GaussQ>& cube_e_from_tilde() {
  static const Matrix<GaussQ> m = exterior_cube(octo::e_from_tilde7());
  return m;
}
const Matrix<GaussQ>& cube_tilde_from_e() {
  static const Matrix<GaussQ> m = exterior_cube(octo::tilde_from_e7());
  return m;
}

std::array<GaussQ, 35> apply35(const Matrix<GaussQ>& m, const std::array<GaussQ, 35>& v) {
  std::array<GaussQ, 35> out{};
  for (int r = 0; r < 35; ++r) {
    GaussQ acc(0);
    for (int c = 0; c < 35; ++c)
      if (!m.at(r, c).is_zero()) acc += m.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace

TriVector convert(const TriVector& w, Basis target) {
  if (w.basis == target) return w;
  if (w.basis == Basis::MatrixPair || target == Basis::MatrixPair)
    throw std::invalid_argument("TriVector: only E and Tilde coordinates");
  TriVector out;
  out.basis = target;
  out.c = apply35(target == Basis::E ? cube_e_from_tilde() : cube_tilde_from_e(), w.c);
  return out;
}

Covector3 convert(const Covector3& f, Basis target) {
  if (f.basis == target) return f;
  if (f.basis == Basis::MatrixPair || target == Basis::MatrixPair)
    throw std::invalid_argument("Covector3: only E and Tilde coordinates");
  // Pre-compose with the coordinate change of the opposite direction:
  // (f o A)(w) = f(A w), coordinates A^T f.
  const Matrix<GaussQ>& a = target == Basis::Tilde ? cube_e_from_tilde() : cube_tilde_from_e();
  Covector3 out;
  out.basis = target;
  for (int c = 0; c < 35; ++c) {
    GaussQ acc(0);
    for (int r = 0; r < 35; ++r)
      if (!a.at(r, c).is_zero()) acc += a.at(r, c) * f.c[r];
    out.c[c] = acc;
  }
  return out;
}

TriVector wedge3(const std::array<GaussQ, 7>& u, const std::array<GaussQ, 7>& v,
                 const std::array<GaussQ, 7>& w, Basis basis) {
  TriVector out;
  out.basis = basis;
  for (const TriIndex& t : TriIndex::all())
    out.c[t.rank()] = det3(u[t.i - 1], u[t.j - 1], u[t.k - 1],
                           v[t.i - 1], v[t.j - 1], v[t.k - 1],
                           w[t.i - 1], w[t.j - 1], w[t.k - 1]);
  return out;
}

TriVector plucker(const Plane3& p) {
  if (rank(p.rows) < 3) throw std::invalid_argument("plucker: rank below 3");
  std::array<std::array<GaussQ, 7>, 3> rows;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) rows[r][c] = p.rows.at(r, c);
  return wedge3(rows[0], rows[1], rows[2], p.basis);
}

std::pair<bool, std::optional<Plane3>> is_decomposable(const TriVector& w) {
  if (w.is_zero()) throw std::invalid_argument("is_decomposable: zero trivector");
  static const std::array<QuadIndex, 35> quads = build_quads();
  (void)quads;
  // Matrix of v -> v ^ w from C^7 to Lambda^4.
  Matrix<GaussQ> m(35, 7);
  for (const TriIndex& t : TriIndex::all()) {
    const GaussQ& coef = w.c[t.rank()];
    if (coef.is_zero()) continue;
    for (int v = 1; v <= 7; ++v) {
      if (v == t.i || v == t.j || v == t.k) continue;
      // e_v ^ e_t: insertion sign of v into the sorted triple.
      int pos = (v < t.i) ? 0 : (v < t.j) ? 1 : (v < t.k) ? 2 : 3;
      int sign = pos % 2 == 0 ? 1 : -1;
      int q[4] = {t.i, t.j, t.k, 0};
      for (int s = 2; s >= pos; --s) q[s + 1] = q[s];
      q[pos] = v;
      m.at(quad_rank[q[0]][q[1]][q[2]][q[3]], v - 1) += sign * coef;
    }
  }
  auto ker = kernel(m);
  if (ker.size() != 3) return {false, std::nullopt};
  Plane3 p;
  p.basis = w.basis;
  p.rows = Matrix<GaussQ>(3, 7);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 7; ++c) p.rows.at(r, c) = ker[r][c];
  return {true, p};
}

std::string PluckerRelation::str() const {
  auto seq = [](std::initializer_list<int> v) {
    std::string s;
    for (int x : v) s += std::to_string(x);
    return s;
  };
  return "p" + seq({i1, i2, j[0]}) + "*p" + seq({j[1], j[2], j[3]}) + " - p" +
         seq({i1, i2, j[1]}) + "*p" + seq({j[0], j[2], j[3]}) + " + p" +
         seq({i1, i2, j[2]}) + "*p" + seq({j[0], j[1], j[3]}) + " - p" +
         seq({i1, i2, j[3]}) + "*p" + seq({j[0], j[1], j[2]});
}

namespace {

// Signed lookup p_{a,b,c} for arbitrary index order (0 on repeats).
GaussQ signed_coord(const TriVector& w, int a, int b, int c) {
  int sign = TriIndex::sort_sign(a, b, c);
  if (sign == 0) return GaussQ(0);
  return GaussQ(sign) * w.c[rank_table[a][b][c]];
}

}  // namespace

GaussQ PluckerRelation::eval(const TriVector& w) const {
  GaussQ acc(0);
  for (int s = 0; s < 4; ++s) {
    int others[3];
    int n = 0;
    for (int t = 0; t < 4; ++t)
      if (t != s) others[n++] = j[t];
    GaussQ term = signed_coord(w, i1, i2, j[s]) *
                  signed_coord(w, others[0], others[1], others[2]);
    acc += s % 2 == 0 ? term : -term;
  }
  return acc;
}

const std::vector<PluckerRelation>& plucker_relations() {
  static const std::vector<PluckerRelation> rels = [] {
    std::vector<PluckerRelation> out;
    for (int i1 = 1; i1 <= 7; ++i1)
      for (int i2 = i1 + 1; i2 <= 7; ++i2)
        for (int a = 1; a <= 7; ++a)
          for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 7; ++c)
              for (int d = c + 1; d <= 7; ++d)
                out.push_back({i1, i2, {a, b, c, d}});
    return out;
  }();
  return rels;
}

std::vector<PluckerRelation> plucker_relation_check(const TriVector& w) {
  std::vector<PluckerRelation> bad;
  for (const PluckerRelation& r : plucker_relations())
    if (!r.eval(w).is_zero()) bad.push_back(r);
  return bad;
}

}  // namespace agr::grass
