#include "agr/report.hpp"

#include <json.hpp>

namespace agr::report {

const char* kToolVersion = "1.0.0";

std::string status_str(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Discrepancy:
      return "discrepancy";
    case Status::Undecided:
      return "undecided";
  }
  return "?";
}

void Report::add(const std::string& name, const std::string& anchor, bool pass,
                 const std::string& expected, const std::string& computed) {
  add_status(name, anchor, pass ? Status::Pass : Status::Discrepancy, expected, computed);
}

void Report::add_status(const std::string& name, const std::string& anchor, Status st,
                        const std::string& expected, const std::string& computed) {
  checks.push_back({name, anchor, st, expected, computed});
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const Check& c : checks)
    if (c.status == s) ++n;
  return n;
}

std::vector<std::string> Report::unexpected_discrepancies(
    const std::set<std::string>& allow) const {
  std::vector<std::string> out;
  for (const Check& c : checks)
    if (c.status == Status::Discrepancy && !allow.count(c.name)) out.push_back(c.name);
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool_version"] = tool_version;
  j["seed"] = seed;
  j["samples"] = samples;
  j["summary"] = {{"pass", count(Status::Pass)},
                  {"discrepancy", count(Status::Discrepancy)},
                  {"undecided", count(Status::Undecided)}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["paper_anchor"] = c.anchor;
    jc["status"] = status_str(c.status);
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  for (const Check& c : checks) {
    out += "[" + status_str(c.status) + "] " + c.name;
    if (c.status != Status::Pass)
      out += "\n    expected: " + c.expected + "\n    computed: " + c.computed;
    out += "\n";
  }
  out += "pass " + std::to_string(count(Status::Pass)) + ", discrepancy " +
         std::to_string(count(Status::Discrepancy)) + ", undecided " +
         std::to_string(count(Status::Undecided)) + "\n";
  return out;
}

}  // namespace agr::report
