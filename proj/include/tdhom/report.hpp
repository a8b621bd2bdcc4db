#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tdhom/multilinear_map.hpp"

namespace tdhom {

/// One line of a verification report.
struct ReportCheck {
  std::string subject;
  std::string name;
  std::string status;  // pass | fail | skipped
  std::string witness;
  std::string detail;
};

/// Dimensions of one complex. Empty vectors are omitted from renderings.
struct CohomologyTable {
  std::string title;
  std::string kind;  // classical | td
  std::vector<std::size_t> alt_dims;
  std::vector<std::size_t> iota_kernel_dims;
  std::vector<std::size_t> cochain_dims;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> h;
  std::vector<std::pair<std::string, std::string>> facts;
};

struct Report {
  std::string command;
  std::vector<ReportCheck> checks;
  std::vector<CohomologyTable> tables;
  bool refused = false;  // some check was refused by a guard

  void add(const CheckReport& r) {
    for (const auto& c : r.checks)
      checks.push_back({r.subject, c.name, c.passed ? "pass" : "fail", c.witness ? c.witness->describe() : "", c.detail});
  }
  void skip(const std::string& subject, const std::string& name, const std::string& why) {
    checks.push_back({subject, name, "skipped", "", why});
  }

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"command", command}, {"passed", passed()}, {"refused", refused}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json e{{"subject", c.subject}, {"name", c.name}, {"status", c.status}};
      if (!c.witness.empty()) e["witness"] = c.witness;
      if (!c.detail.empty()) e["detail"] = c.detail;
      j["checks"].push_back(std::move(e));
    }
    j["tables"] = nlohmann::json::array();
    for (const auto& t : tables) {
      nlohmann::json e{{"title", t.title}, {"kind", t.kind}, {"cochain_dims", t.cochain_dims},
                       {"ranks", t.ranks},   {"h", t.h}};
      if (!t.alt_dims.empty()) e["alt_dims"] = t.alt_dims;
      if (!t.iota_kernel_dims.empty()) e["iota_kernel_dims"] = t.iota_kernel_dims;
      if (!t.facts.empty()) {
        e["facts"] = nlohmann::json::object();
        for (const auto& [k, v] : t.facts) e["facts"][k] = v;
      }
      j["tables"].push_back(std::move(e));
    }
    return j;
  }
};

namespace detail {

inline std::string join_dims(const nlohmann::json& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::to_string(a[i].get<std::size_t>());
  return s;
}

}  // namespace detail

/// Human-readable rendering of a machine-readable report.
inline std::string render_text(const nlohmann::json& j) {
  std::string out;
  for (const auto& c : j["checks"]) {
    const auto status = c["status"].get<std::string>();
    out += (status == "pass" ? "PASS " : status == "fail" ? "FAIL " : "SKIP ") + c["subject"].get<std::string>() +
           ": " + c["name"].get<std::string>() + "\n";
    if (c.contains("witness")) out += "     witness " + c["witness"].get<std::string>() + "\n";
    if (c.contains("detail")) out += "     " + c["detail"].get<std::string>() + "\n";
  }
  for (const auto& t : j["tables"]) {
    out += t["title"].get<std::string>() + " (" + t["kind"].get<std::string>() + ")\n";
    if (t.contains("alt_dims")) out += "  alt dims      " + detail::join_dims(t["alt_dims"]) + "\n";
    if (t.contains("iota_kernel_dims")) out += "  ker iota dims " + detail::join_dims(t["iota_kernel_dims"]) + "\n";
    out += "  cochain dims  " + detail::join_dims(t["cochain_dims"]) + "\n";
    out += "  ranks         " + detail::join_dims(t["ranks"]) + "\n";
    out += "  H dims        " + detail::join_dims(t["h"]) + "\n";
    if (t.contains("facts"))
      for (const auto& [k, v] : t["facts"].items()) out += "  " + k + ": " + v.get<std::string>() + "\n";
  }
  out += j["passed"].get<bool>() ? "result: pass\n" : "result: fail\n";
  return out;
}

}  // namespace tdhom
