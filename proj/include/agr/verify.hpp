#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agr/report.hpp"

namespace agr::verify {

struct Options {
  std::uint64_t seed = 2024;
  long samples = 100;  // base sample count; heavier checks use multiples
};

void suite_algebra(report::Report& r, const Options& opt);
void suite_forms(report::Report& r);
void suite_grassmann(report::Report& r, const Options& opt);
void suite_xmin(report::Report& r, const Options& opt);
void suite_actions(report::Report& r, const Options& opt);

// suites: subset of {"algebra", "forms", "grassmann", "xmin", "actions"} or
// {"all"}; unknown names throw.
report::Report run(const std::vector<std::string>& suites, const Options& opt);

}  // namespace agr::verify
