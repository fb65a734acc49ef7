// Command-line front end: verification suites, fixed-point and smoothness
// tables, Bialynicki-Birula cells, Poincare polynomial, orbit count, and
// machine-readable reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "agr/character.hpp"
#include "agr/fixtures.hpp"
#include "agr/report.hpp"
#include "agr/torus.hpp"
#include "agr/verify.hpp"
#include "agr/xmin.hpp"

namespace {

using agr::Character;
using agr::OneParamSubgroup;

bool parse_ops(const std::string& s, OneParamSubgroup& g) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return false;
  try {
    g.c = std::stol(s.substr(0, comma));
    g.d = std::stol(s.substr(comma + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

int finish_report(const agr::report::Report& rep, bool json) {
  if (json)
    std::cout << rep.to_json();
  else
    std::cout << rep.to_text();
  auto unexpected = rep.unexpected_discrepancies(agr::fixtures::known_discrepancies());
  if (unexpected.empty()) return 0;
  std::cerr << "unexpected discrepancies:";
  for (const auto& n : unexpected) std::cerr << " " << n;
  std::cerr << "\n";
  return 1;
}

nlohmann::ordered_json cell_json(const agr::torus::BBCell& cell) {
  nlohmann::ordered_json jc;
  jc["point"] = cell.point.index.str();
  jc["character"] = {{"a", cell.point.character.a}, {"b", cell.point.character.b}};
  jc["weights"] = cell.weights;
  jc["plus_dim"] = cell.plus_dim;
  jc["minus_dim"] = cell.minus_dim;
  return jc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"agr: exact verification engine for the split octonion algebra "
               "and the associative Grassmannian in Gr(3,7)"};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t seed = 2024;
  long samples = 100;
  std::string data_dir;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--seed", seed, "seed for deterministic random sampling");
  app.add_option("--samples", samples, "base sample count for randomized checks");
  app.add_option("--data-dir", data_dir, "override the reference-table directory");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "algebra|forms|grassmann|xmin|actions|all");

  auto* fp_cmd = app.add_subcommand("fixed-points", "list the torus-fixed points");
  auto* smooth_cmd = app.add_subcommand("smoothness", "Jacobian rank at every fixed point");

  std::string ops_bb = "10,1", ops_poincare = "10,1";
  auto* bb_cmd = app.add_subcommand("bb", "Bialynicki-Birula cells for a subgroup");
  bb_cmd->add_option("--ops", ops_bb, "one-parameter subgroup C,D");
  auto* poin_cmd = app.add_subcommand("poincare", "Poincare polynomial coefficients");
  poin_cmd->add_option("--ops", ops_poincare, "one-parameter subgroup C,D");

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit count of the minimal compactification");

  auto* report_cmd = app.add_subcommand("report", "run all suites and write a JSON report");
  std::string out_path;
  report_cmd->add_option("--out", out_path, "output path for the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!data_dir.empty()) agr::fixtures::set_data_dir(data_dir);

  agr::verify::Options opt;
  opt.seed = seed;
  opt.samples = samples;

  try {
    if (*verify_cmd) {
      agr::report::Report rep = agr::verify::run({suite}, opt);
      return finish_report(rep, json);
    }

    if (*fp_cmd) {
      const auto& pts = agr::torus::fixed_points();
      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& p : pts) {
          nlohmann::ordered_json jp;
          jp["point"] = p.index.str();
          jp["character"] = {{"a", p.character.a}, {"b", p.character.b}};
          j.push_back(jp);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& p : pts)
          std::cout << p.index.str() << "  character " << p.character.str() << "\n";
        std::cout << pts.size() << " fixed points\n";
      }
      return 0;
    }

    if (*smooth_cmd) {
      bool all4 = true;
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& p : agr::torus::fixed_points()) {
        auto tf = agr::xmin::tangent_frame(p.index);
        all4 = all4 && tf.rank == 4 && tf.basis.size() == 8;
        if (json) {
          nlohmann::ordered_json jp;
          jp["point"] = p.index.str();
          jp["jacobian_rank"] = tf.rank;
          jp["tangent_dimension"] = tf.basis.size();
          j.push_back(jp);
        } else {
          std::cout << p.index.str() << "  jacobian rank " << tf.rank
                    << ", tangent dimension " << tf.basis.size() << "\n";
        }
      }
      if (json) std::cout << j.dump(2) << "\n";
      if (!json)
        std::cout << (all4 ? "smooth at every fixed point" : "rank defect found") << "\n";
      return all4 ? 0 : 1;
    }

    if (*bb_cmd || *poin_cmd) {
      OneParamSubgroup g;
      if (!parse_ops(*bb_cmd ? ops_bb : ops_poincare, g)) {
        std::cerr << "bad --ops value (expected C,D)\n";
        return 2;
      }
      if (auto ch = agr::torus::vanishing_character(g)) {
        std::cerr << "subgroup " << g.str() << " is not regular: character " << ch->str()
                  << " pairs to zero\n";
        return 2;
      }
      if (*bb_cmd) {
        auto cells = agr::torus::bb_decomposition(g);
        if (json) {
          nlohmann::ordered_json j = nlohmann::ordered_json::array();
          for (const auto& cell : cells) j.push_back(cell_json(cell));
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& cell : cells) {
            std::cout << cell.point.index.str() << "  plus " << cell.plus_dim << "  minus "
                      << cell.minus_dim << "  weights";
            for (long w : cell.weights) std::cout << " " << w;
            std::cout << "\n";
          }
        }
        return 0;
      }
      auto coeff = agr::torus::poincare(g);
      if (json) {
        nlohmann::ordered_json j;
        j["ops"] = {g.c, g.d};
        j["coefficients"] = coeff;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "P(t) coefficients (t^0..t^8):";
        for (long c : coeff) std::cout << " " << c;
        std::cout << "\n";
      }
      return 0;
    }

    if (*orbits_cmd) {
      auto oc = agr::torus::special_orbit_count();
      if (json) {
        nlohmann::ordered_json j;
        j["delta_values"] = oc.delta_values;
        j["orbit_count"] = oc.distinct;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "orbit count " << oc.distinct << "\n";
      }
      return 0;
    }

    if (*report_cmd) {
      agr::report::Report rep = agr::verify::run({"all"}, opt);
      std::string payload = rep.to_json();
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
          std::cerr << "cannot open " << out_path << "\n";
          return 2;
        }
        out << payload;
        std::cout << "report written to " << out_path << "\n";
      } else {
        std::cout << payload;
      }
      auto unexpected = rep.unexpected_discrepancies(agr::fixtures::known_discrepancies());
      return unexpected.empty() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
