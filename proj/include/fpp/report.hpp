#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpp/claims.hpp"

namespace fpp {

struct Report {
  std::string schema_version = "1";
  std::string generated_at;     // informational only, excluded from determinism
  std::string case_selector;    // "I", "II", or "all"
  std::vector<Claim> claims;    // sorted by id on emission
};

namespace detail {

inline std::vector<Claim> sorted_claims(std::vector<Claim> claims) {
  std::sort(claims.begin(), claims.end(),
            [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return claims;
}

inline std::string group_of(const std::string& id) {
  const auto dot = id.find('.');
  return dot == std::string::npos ? id : id.substr(0, dot);
}

}  // namespace detail

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["schema_version"] = r.schema_version;
  j["generated_at"] = r.generated_at;
  j["case_selector"] = r.case_selector;
  std::size_t verified = 0, asserted = 0, failed = 0;
  nlohmann::json claims = nlohmann::json::array();
  for (const Claim& c : detail::sorted_claims(r.claims)) {
    nlohmann::json e;
    e["claim_id"] = c.id;
    e["statement"] = c.statement;
    e["status"] = status_name(c.status);
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    if (!c.trace.empty()) e["trace"] = c.trace;
    claims.push_back(std::move(e));
    if (c.status == ClaimStatus::Verified) ++verified;
    if (c.status == ClaimStatus::AssertedUnverified) ++asserted;
    if (c.status == ClaimStatus::Failed) ++failed;
  }
  j["claims"] = std::move(claims);
  j["summary"] = {{"verified", verified}, {"asserted-unverified", asserted}, {"failed", failed}};
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.generated_at = j.value("generated_at", std::string());
  r.case_selector = j.value("case_selector", std::string());
  for (const auto& e : j.at("claims")) {
    Claim c;
    c.id = e.at("claim_id").get<std::string>();
    c.statement = e.at("statement").get<std::string>();
    c.status = status_from_name(e.at("status").get<std::string>());
    c.expected = e.at("expected").get<std::string>();
    c.computed = e.at("computed").get<std::string>();
    c.trace = e.value("trace", std::string());
    r.claims.push_back(std::move(c));
  }
  return r;
}

inline std::string emit_report_json(const Report& r) {
  return report_to_json(r).dump(2) + "\n";
}

/// Markdown rendering: one table per top-level claim group.
inline std::string emit_report_markdown(const Report& r) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "Case selector: " << r.case_selector << "\n\n";
  if (!r.generated_at.empty()) os << "Generated: " << r.generated_at << "\n\n";

  const std::vector<Claim> claims = detail::sorted_claims(r.claims);
  std::size_t verified = 0, asserted = 0, failed = 0;
  for (const Claim& c : claims) {
    if (c.status == ClaimStatus::Verified) ++verified;
    if (c.status == ClaimStatus::AssertedUnverified) ++asserted;
    if (c.status == ClaimStatus::Failed) ++failed;
  }
  os << "Claims: " << claims.size() << " (" << verified << " verified, " << asserted
     << " asserted-unverified, " << failed << " failed)\n";

  auto escape = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (ch == '|')
        out += "\\|";
      else if (ch == '\n')
        out += ' ';
      else
        out += ch;
    }
    return out;
  };

  std::string current_group;
  for (const Claim& c : claims) {
    const std::string g = detail::group_of(c.id);
    if (g != current_group) {
      current_group = g;
      os << "\n## " << g << "\n\n";
      os << "| claim | status | expected | computed | statement |\n";
      os << "|---|---|---|---|---|\n";
    }
    os << "| `" << c.id << "` | " << status_name(c.status) << " | " << escape(c.expected)
       << " | " << escape(c.computed) << " | " << escape(c.statement) << " |\n";
  }
  return os.str();
}

inline std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") return emit_report_json(r);
  if (format == "md" || format == "markdown") return emit_report_markdown(r);
  throw std::invalid_argument("unknown report format '" + format + "'");
}

}  // namespace fpp
