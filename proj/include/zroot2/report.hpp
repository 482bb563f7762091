#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zroot2/checks.hpp"
#include "zroot2/json_io.hpp"

namespace zroot2 {

// Machine-readable command report. Rendering is deterministic: insertion-
// ordered keys, no timestamps, seeds recorded explicitly.
struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<CheckResult> checks;
  Json data = Json::object();
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  Json to_json() const {
    Json jchecks = Json::array();
    for (const CheckResult& c : checks)
      jchecks.push_back(Json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"data", c.data}});
    return Json{{"command", command}, {"params", params},   {"checks", jchecks},
                {"data", data},       {"notes", notes},     {"status", all_pass() ? "pass" : "fail"}};
  }

  void print_text(std::ostream& os) const {
    os << "command: " << command << "\n";
    if (!params.empty()) os << "params: " << params.dump() << "\n";
    if (!data.empty()) os << "data: " << data.dump(2) << "\n";
    for (const CheckResult& c : checks) {
      os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
      if (!c.data.empty()) os << "  " << c.data.dump();
      os << "\n";
    }
    for (const std::string& n : notes) os << "note: " << n << "\n";
    os << "status: " << (all_pass() ? "pass" : "fail") << "\n";
  }
};

}  // namespace zroot2
