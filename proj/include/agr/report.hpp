#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace agr::report {

enum class Status { Pass, Discrepancy, Undecided };

std::string status_str(Status s);

// One verified claim: pass only when expected equals computed exactly.
struct Check {
  std::string name;
  std::string anchor;  // identifier of the printed claim, or "plumbing"
  Status status = Status::Undecided;
  std::string expected;
  std::string computed;
};

struct Report {
  std::string tool_version;
  std::uint64_t seed = 0;
  long samples = 0;
  std::vector<Check> checks;

  void add(const std::string& name, const std::string& anchor, bool pass,
           const std::string& expected, const std::string& computed);
  void add_status(const std::string& name, const std::string& anchor, Status st,
                  const std::string& expected, const std::string& computed);

  std::size_t count(Status s) const;
  // Discrepancies outside the allowlist (documented reference typos).
  std::vector<std::string> unexpected_discrepancies(const std::set<std::string>& allow) const;

  // Deterministic JSON (snake_case fields, rationals as "num/den" strings).
  std::string to_json() const;
  std::string to_text() const;
};

extern const char* kToolVersion;

}  // namespace agr::report
