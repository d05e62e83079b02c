#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ty/checks.hpp"

namespace ty {

using OrderedJson = nlohmann::ordered_json;

// Machine-readable run report: {"command", "params", "results",
// "checks":[{"name","paper_ref","pass","witness"?}], "elapsed_ms"}.
struct RunReport {
  std::string command;
  OrderedJson params = OrderedJson::object();
  OrderedJson results = OrderedJson::object();
  std::vector<CheckResult> checks;
  long elapsed_ms = 0;
  bool with_timing = true;

  void add(const CheckResult& c) { checks.push_back(c); }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  OrderedJson to_json() const {
    OrderedJson j;
    j["command"] = command;
    j["params"] = params;
    j["results"] = results;
    OrderedJson arr = OrderedJson::array();
    for (const auto& c : checks) {
      OrderedJson e;
      e["name"] = c.name;
      e["paper_ref"] = c.ref;
      e["pass"] = c.pass;
      if (!c.pass && !c.witness.empty()) e["witness"] = c.witness;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["elapsed_ms"] = with_timing ? elapsed_ms : 0;
    return j;
  }
};

}  // namespace ty
