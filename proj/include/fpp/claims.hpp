#pragma once

#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fpp {

enum class ClaimStatus { Verified, AssertedUnverified, Failed };

inline std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::AssertedUnverified: return "asserted-unverified";
    case ClaimStatus::Failed: return "failed";
  }
  return "?";
}

inline ClaimStatus status_from_name(const std::string& s) {
  if (s == "verified") return ClaimStatus::Verified;
  if (s == "asserted-unverified") return ClaimStatus::AssertedUnverified;
  if (s == "failed") return ClaimStatus::Failed;
  throw std::invalid_argument("unknown claim status '" + s + "'");
}

/// One mechanically checked (or explicitly assumed) fact.
struct Claim {
  std::string id;         // stable hierarchical identifier, e.g. "glue.case-i.unique"
  std::string statement;  // what is being checked, in plain words
  ClaimStatus status = ClaimStatus::Failed;
  std::string expected;
  std::string computed;
  std::string trace;  // optional supporting detail

  friend bool operator==(const Claim&, const Claim&) = default;
};

/// Outcome of a check body: pass/fail plus the printable computed value and
/// optional trace.
struct CheckOutcome {
  bool pass = false;
  std::string computed;
  std::string trace;
};

/// Run one check body, converting exceptions into failed claims so a single
/// broken invariant cannot abort the rest of the registry.
inline Claim run_claim(std::string id, std::string statement, std::string expected,
                       const std::function<CheckOutcome()>& body) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.expected = std::move(expected);
  try {
    CheckOutcome out = body();
    c.status = out.pass ? ClaimStatus::Verified : ClaimStatus::Failed;
    c.computed = std::move(out.computed);
    c.trace = std::move(out.trace);
  } catch (const std::exception& e) {
    c.status = ClaimStatus::Failed;
    c.computed = std::string("exception: ") + e.what();
  }
  return c;
}

inline Claim asserted_claim(std::string id, std::string statement, std::string note) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.status = ClaimStatus::AssertedUnverified;
  c.expected = "assumed";
  c.computed = "not computed";
  c.trace = std::move(note);
  return c;
}

inline bool any_failed(const std::vector<Claim>& claims) {
  for (const auto& c : claims)
    if (c.status == ClaimStatus::Failed) return true;
  return false;
}

}  // namespace fpp
