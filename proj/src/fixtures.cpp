#include "agr/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "agr/chart.hpp"

namespace agr::fixtures {

namespace {

std::string g_data_dir = AGR_DATA_DIR;

std::vector<std::vector<std::string>> read_rows(const std::string& file) {
  std::ifstream in(data_dir() + "/" + file);
  if (!in) throw std::runtime_error("fixtures: cannot open " + data_dir() + "/" + file);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  return rows;
}

mpq_class rat(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

GaussQ gauss(const std::string& re, const std::string& im) { return GaussQ(rat(re), rat(im)); }

grass::TriIndex triple(const std::string& s) {
  if (s.size() != 3) throw std::runtime_error("fixtures: bad triple " + s);
  return grass::TriIndex::of(s[0] - '0', s[1] - '0', s[2] - '0');
}

}  // namespace

std::string data_dir() { return g_data_dir; }
void set_data_dir(const std::string& path) { g_data_dir = path; }

std::array<std::array<GaussQ, 35>, 7> linear_forms(const std::string& file) {
  std::array<std::array<GaussQ, 35>, 7> out{};
  for (const auto& r : read_rows(file)) {
    if (r.size() != 4) throw std::runtime_error("fixtures: bad linear form row in " + file);
    int form = std::stoi(r[0]);
    if (form < 1 || form > 7) throw std::runtime_error("fixtures: form index out of range");
    out[form - 1][triple(r[1]).rank()] = gauss(r[2], r[3]);
  }
  return out;
}

std::vector<WeightRow> weight_table() {
  std::vector<WeightRow> rows;
  for (const auto& r : read_rows("reference_weight_table.txt")) {
    if (r.size() < 3) throw std::runtime_error("fixtures: bad weight table row");
    WeightRow w;
    w.ch = Character{std::stol(r[0]), std::stol(r[1])};
    for (std::size_t k = 2; k < r.size(); ++k) w.triples.push_back(triple(r[k]));
    rows.push_back(std::move(w));
  }
  return rows;
}

std::vector<std::pair<grass::TriIndex, Character>> fixed_points() {
  std::vector<std::pair<grass::TriIndex, Character>> out;
  for (const auto& r : read_rows("reference_fixed_points.txt")) {
    if (r.size() != 3) throw std::runtime_error("fixtures: bad fixed point row");
    out.emplace_back(triple(r[0]), Character{std::stol(r[1]), std::stol(r[2])});
  }
  return out;
}

std::map<int, std::vector<long>> tangent_weights() {
  std::map<int, std::vector<long>> out;
  for (const auto& r : read_rows("reference_tangent_weights.txt")) {
    if (r.size() < 2) throw std::runtime_error("fixtures: bad tangent weight row");
    std::vector<long> w;
    for (std::size_t k = 1; k < r.size(); ++k) w.push_back(std::stol(r[k]));
    out[triple(r[0]).rank()] = std::move(w);
  }
  return out;
}

Matrix<GaussQ> jacobian_123() {
  Matrix<GaussQ> m(7, 12);
  for (const auto& r : read_rows("reference_jacobian_123.txt")) {
    if (r.size() != 4) throw std::runtime_error("fixtures: bad jacobian row");
    m.at(std::stoul(r[0]) - 1, std::stoul(r[1]) - 1) = gauss(r[2], r[3]);
  }
  return m;
}

std::vector<std::vector<GaussQ>> kernel_123() {
  std::vector<std::vector<GaussQ>> out;
  const std::vector<grass::TriIndex> adj = grass::adjacent_triples(grass::TriIndex::of(1, 2, 3));
  for (const auto& r : read_rows("reference_kernel_123.txt")) {
    if (r.size() != 4) throw std::runtime_error("fixtures: bad kernel row");
    std::size_t vec = std::stoul(r[0]) - 1;
    if (out.size() <= vec) out.resize(vec + 1, std::vector<GaussQ>(12, GaussQ(0)));
    int col = -1;
    grass::TriIndex t = triple(r[3]);
    for (int n = 0; n < 12; ++n)
      if (adj[n] == t) col = n;
    if (col < 0) throw std::runtime_error("fixtures: kernel triple not a chart coordinate");
    out[vec][col] = gauss(r[1], r[2]);
  }
  return out;
}

std::array<std::array<std::array<GaussQ, 3>, 7>, 7> unipotent_matrix(const std::string& file) {
  std::array<std::array<std::array<GaussQ, 3>, 7>, 7> out{};
  for (const auto& r : read_rows(file)) {
    if (r.size() != 5) throw std::runtime_error("fixtures: bad unipotent row in " + file);
    int row = std::stoi(r[0]), col = std::stoi(r[1]), pw = std::stoi(r[2]);
    if (row < 1 || row > 7 || col < 1 || col > 7 || pw < 0 || pw > 2)
      throw std::runtime_error("fixtures: unipotent index out of range");
    out[row - 1][col - 1][pw] = gauss(r[3], r[4]);
  }
  return out;
}

std::vector<long> wonderful_coefficients() {
  std::vector<long> out;
  for (const auto& r : read_rows("reference_wonderful_poincare.txt"))
    for (const auto& t : r) out.push_back(std::stol(t));
  return out;
}

std::set<std::string> known_discrepancies() {
  std::set<std::string> out;
  for (const auto& r : read_rows("known_discrepancies.txt")) {
    std::string name;
    for (const auto& t : r) name += (name.empty() ? "" : " ") + t;
    out.insert(name);
  }
  return out;
}

}  // namespace agr::fixtures
