#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "agr/character.hpp"
#include "agr/gaussq.hpp"
#include "agr/matrix.hpp"
#include "agr/trivector.hpp"

namespace agr::fixtures {

// Plain-text reference tables (one coefficient entry per line, '#' comments).
// Path resolution: AGR_DATA_DIR unless overridden.
std::string data_dir();
void set_data_dir(const std::string& path);

// form_index -> covector coordinate table (35 entries).
std::array<std::array<GaussQ, 35>, 7> linear_forms(const std::string& file);

struct WeightRow {
  Character ch;
  std::vector<grass::TriIndex> triples;
};
std::vector<WeightRow> weight_table();

std::vector<std::pair<grass::TriIndex, Character>> fixed_points();

// Printed tangent-weight lists for the subgroup (10, 1); the list for one
// point may carry a stray extra entry, so sizes are kept as printed.
std::map<int, std::vector<long>> tangent_weights();  // key: TriIndex rank

Matrix<GaussQ> jacobian_123();          // 7x12, columns in lex chart order
std::vector<std::vector<GaussQ>> kernel_123();  // 8 vectors of length 12

// Unipotent action matrix as polynomial entries: (row, col) -> coefficients
// of u^0, u^1, u^2.
std::array<std::array<std::array<GaussQ, 3>, 7>, 7> unipotent_matrix(const std::string& file);

std::vector<long> wonderful_coefficients();

// Names of checks whose discrepancy status is a documented typo in the
// reference material (does not fail the run).
std::set<std::string> known_discrepancies();

}  // namespace agr::fixtures
