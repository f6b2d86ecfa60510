#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpp/surface.hpp"

namespace fpp {

/// One subtraction step: the curve removed and the pairing that licensed
/// the removal (negative pairing of an effective divisor with a negative
/// curve forces containment).
struct DescentStep {
  std::string curve;
  Rat pairing_before;
};

struct DescentTrace {
  int level = 0;  // the multiple of the seventh-class being tested
  std::string config_id;
  std::vector<DescentStep> steps;
  Divisor final_divisor;
  Rat final_fiber_pairing;
  bool accepted = false;
  std::string reason;  // empty when accepted
};

namespace detail {

/// Curves eligible for subtraction: the negative curves of the descent,
/// i.e. the six-sections and the big-cycle fiber components.
inline std::vector<std::string> descent_candidates(const SurfaceConfig& cfg) {
  std::vector<std::string> out;
  for (const auto& c : cfg.curves) {
    if (c.role == CurveRole::FiberClass) continue;
    if (c.self_intersection < 0) out.push_back(c.name);
  }
  return out;
}

inline bool is_section(const SurfaceConfig& cfg, const std::string& name) {
  return cfg.curves[cfg.curve_index(name)].role == CurveRole::Multisection;
}

/// Integer pairing tables for the descent hot loop, built once per
/// configuration and shared across levels. All pairings in play are
/// integers (the seventh class pairs integrally with every curve);
/// non-integrality surfaces as an exception during construction.
struct DescentEngine {
  std::vector<std::string> names;            // eligible curves
  std::vector<std::vector<long long>> gram;  // pairings among them
  std::vector<long long> k_row;              // K . curve
  std::vector<long long> l_row;              // L . curve
  std::vector<long long> fiber_row;          // F . curve
  long long k_fiber = 0;                     // K . F
  long long l_fiber = 0;                     // L . F

  explicit DescentEngine(const SurfaceConfig& cfg) {
    names = descent_candidates(cfg);
    const std::size_t n = names.size();
    const Divisor k = Divisor::canonical(cfg);
    const Divisor l = Divisor::line_bundle(cfg);
    const Divisor f = Divisor::curve(cfg, *cfg.fiber_class_name());
    auto as_ll = [](const Rat& r) {
      if (!is_integer(r)) throw std::logic_error("descent engine: non-integer pairing");
      return numerator(r).convert_to<long long>();
    };
    gram.assign(n, std::vector<long long>(n, 0));
    k_row.assign(n, 0);
    l_row.assign(n, 0);
    fiber_row.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Divisor ci = Divisor::curve(cfg, names[i]);
      k_row[i] = as_ll(intersect(cfg, k, ci));
      l_row[i] = as_ll(intersect(cfg, l, ci));
      fiber_row[i] = as_ll(intersect(cfg, f, ci));
      for (std::size_t j = i; j < n; ++j) {
        gram[i][j] = as_ll(intersect(cfg, ci, Divisor::curve(cfg, names[j])));
        gram[j][i] = gram[i][j];
      }
    }
    k_fiber = as_ll(intersect(cfg, k, f));
    l_fiber = as_ll(intersect(cfg, l, f));
  }

  std::vector<long long> start_for(int level) const {
    std::vector<long long> s(names.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = k_row[i] + level * l_row[i];
    return s;
  }

  long long start_fiber_for(int level) const { return k_fiber + level * l_fiber; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("descent engine: '" + name + "' is not an eligible curve");
  }
};

}  // namespace detail

/// Validate a proposed subtraction script for level i, starting from
/// K + iL. Accepts iff every step subtracts a negative curve with negative
/// current pairing, the final divisor meets the fiber class negatively,
/// the section multiplicities sum to 2i+1, and every non-section
/// subtraction is a component of the designated fiber. This path uses the
/// full divisor calculus, independent of the integer fast path used by the
/// searches.
inline DescentTrace descent_replay(const SurfaceConfig& cfg, int level,
                                   const std::vector<std::string>& script) {
  DescentTrace tr;
  tr.level = level;
  tr.config_id = cfg.id;
  if (level < 1 || level > 6) {
    tr.reason = "level out of range 1..6";
    return tr;
  }
  if (script.empty()) {
    tr.reason = "empty script";
    return tr;
  }

  const Divisor f = Divisor::curve(cfg, *cfg.fiber_class_name());
  Divisor d = Divisor::canonical(cfg) + Divisor::line_bundle(cfg, level);
  const auto& fiber_components = cfg.expansion_fiber().components;

  long long section_count = 0;
  for (std::size_t s = 0; s < script.size(); ++s) {
    const std::string& name = script[s];
    const std::string where = "step " + std::to_string(s + 1) + " ('" + name + "')";
    if (!cfg.has_curve(name)) {
      tr.reason = where + ": unknown curve";
      return tr;
    }
    const CurveClass& c = cfg.curves[cfg.curve_index(name)];
    if (c.self_intersection >= 0) {
      tr.reason = where + ": curve has nonnegative self-intersection";
      return tr;
    }
    if (detail::is_section(cfg, name)) {
      ++section_count;
    } else if (std::find(fiber_components.begin(), fiber_components.end(), name) ==
               fiber_components.end()) {
      tr.reason = where + ": not a section and not a component of the designated fiber";
      return tr;
    }
    const Rat pairing = intersect(cfg, d, Divisor::curve(cfg, name));
    if (pairing >= 0) {
      tr.reason = where + ": current divisor pairs nonnegatively (" + to_string(pairing) + ")";
      return tr;
    }
    tr.steps.push_back({name, pairing});
    d = d - Divisor::curve(cfg, name);
  }

  tr.final_divisor = d;
  tr.final_fiber_pairing = intersect(cfg, d, f);
  if (tr.final_fiber_pairing >= 0) {
    tr.reason = "final divisor pairs nonnegatively with the fiber class (" +
                to_string(tr.final_fiber_pairing) + ")";
    return tr;
  }
  if (section_count != 2 * level + 1) {
    tr.reason = "section multiplicities sum to " + std::to_string(section_count) + ", expected " +
                std::to_string(2 * level + 1);
    return tr;
  }
  tr.accepted = true;
  return tr;
}

/// Greedy search: repeatedly subtract the eligible curve with the most
/// negative current pairing (declaration order breaks ties) until the
/// running divisor meets the fiber class negatively. The returned trace is
/// validated by descent_replay over the full divisor calculus.
inline DescentTrace descent_search(const SurfaceConfig& cfg, const detail::DescentEngine& eng,
                                   int level, int step_cap = 200) {
  DescentTrace tr;
  tr.level = level;
  tr.config_id = cfg.id;
  if (level < 1 || level > 6) {
    tr.reason = "level out of range 1..6";
    return tr;
  }

  std::vector<long long> pairing = eng.start_for(level);
  long long fiber = eng.start_fiber_for(level);
  std::vector<std::string> script;

  for (int step = 0; step < step_cap; ++step) {
    if (fiber < 0) return descent_replay(cfg, level, script);
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < eng.names.size(); ++i)
      if (pairing[i] < 0 && (!best || pairing[i] < pairing[*best])) best = i;
    if (!best) {
      tr.reason = "stuck: no eligible curve pairs negatively while the fiber pairing is " +
                  std::to_string(fiber);
      return tr;
    }
    script.push_back(eng.names[*best]);
    for (std::size_t i = 0; i < eng.names.size(); ++i) pairing[i] -= eng.gram[*best][i];
    fiber -= eng.fiber_row[*best];
  }
  tr.reason = "step cap " + std::to_string(step_cap) + " exhausted";
  return tr;
}

inline DescentTrace descent_search(const SurfaceConfig& cfg, int level, int step_cap = 200) {
  return descent_search(cfg, detail::DescentEngine(cfg), level, step_cap);
}

/// Exhaustive search (memoized over remaining-multiset states) for a valid
/// subtraction order realizing the exact final divisor K + iL - (budget).
/// The current pairing vector is a function of the remaining multiset, so
/// memoizing failed states makes the search complete. Returns the script,
/// or nothing if no valid order exists.
inline std::optional<std::vector<std::string>> descent_script_to_target(
    const detail::DescentEngine& eng, int level, const std::map<std::string, long long>& budget) {
  const std::size_t n = eng.names.size();

  std::vector<long long> remaining(n, 0);
  for (const auto& [name, mult] : budget) {
    if (mult < 0) return std::nullopt;
    remaining[eng.index_of(name)] = mult;
  }

  std::vector<long long> pairing = eng.start_for(level);
  std::vector<std::string> script;
  std::set<std::vector<long long>> dead;

  auto dfs = [&](auto&& self) -> bool {
    if (std::all_of(remaining.begin(), remaining.end(), [](long long v) { return v == 0; }))
      return true;
    if (dead.count(remaining)) return false;
    // most negative pairing first; index order breaks ties
    std::vector<std::pair<long long, std::size_t>> options;
    for (std::size_t i = 0; i < n; ++i)
      if (remaining[i] > 0 && pairing[i] < 0) options.emplace_back(pairing[i], i);
    std::sort(options.begin(), options.end());
    for (const auto& [p, i] : options) {
      remaining[i] -= 1;
      script.push_back(eng.names[i]);
      for (std::size_t k = 0; k < n; ++k) pairing[k] -= eng.gram[i][k];
      if (self(self)) return true;
      for (std::size_t k = 0; k < n; ++k) pairing[k] += eng.gram[i][k];
      script.pop_back();
      remaining[i] += 1;
    }
    dead.insert(remaining);
    return false;
  };
  if (!dfs(dfs)) return std::nullopt;
  return script;
}

inline std::optional<std::vector<std::string>> descent_script_to_target(
    const SurfaceConfig& cfg, int level, const std::map<std::string, long long>& budget) {
  return descent_script_to_target(detail::DescentEngine(cfg), level, budget);
}

}  // namespace fpp
