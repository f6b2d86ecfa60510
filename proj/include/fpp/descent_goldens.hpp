#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpp/surface.hpp"

namespace fpp {

/// Multiplicities subtracted from K + iL in the pinned final divisor of the
/// level-i descent: curve name -> count (sections and cycle components).
using DescentCounts = std::map<std::string, long long>;

/// Pinned Case-I final divisors, one per level 1..6 (index level-1).
inline const std::vector<DescentCounts>& descent_finals_case1() {
  static const std::vector<DescentCounts> finals = {
      // level 1
      {{"E1", 1}, {"E2", 1}, {"E3", 1}, {"B1", 1}, {"B2", 1}, {"B3", 1}, {"C1", 1}, {"C2", 1}},
      // level 2
      {{"E1", 1}, {"E2", 1}, {"E3", 3}, {"A1", 1}, {"A2", 1}, {"B1", 1},
       {"C1", 1}, {"C2", 2}, {"C3", 1}},
      // level 3
      {{"E1", 1}, {"E2", 3}, {"E3", 3}, {"A1", 1}, {"A2", 1}, {"B1", 2},
       {"B2", 1}, {"B3", 1}, {"C1", 1}, {"C2", 2}},
      // level 4
      {{"E1", 2}, {"E2", 3}, {"E3", 4}, {"A1", 1}, {"A2", 1}, {"B1", 2},
       {"B2", 1}, {"C1", 1}, {"C2", 2}},
      // level 5
      {{"E1", 3}, {"E2", 4}, {"E3", 4}, {"A1", 1}, {"A2", 2}, {"A3", 1},
       {"B1", 3}, {"B2", 1}, {"C1", 1}, {"C2", 2}},
      // level 6
      {{"E1", 3}, {"E2", 5}, {"E3", 5}, {"A1", 1}, {"A2", 2}, {"A3", 1},
       {"B1", 4}, {"B2", 1}, {"C1", 1}, {"C2", 3}},
  };
  return finals;
}

/// Case-II final divisors: derived once by the greedy search, then frozen.
/// (The source document leaves this case to the reader.)
inline const std::vector<DescentCounts>& descent_finals_case2();

inline const std::vector<DescentCounts>& descent_finals(CoverCase cc) {
  return cc == CoverCase::I ? descent_finals_case1() : descent_finals_case2();
}

inline DescentCounts subtracted_counts(const SurfaceConfig& cfg, int level,
                                       const Divisor& final_divisor) {
  // K + iL - final = sum of subtracted curves
  Divisor diff =
      Divisor::canonical(cfg) + Divisor::line_bundle(cfg, level) - final_divisor;
  DescentCounts counts;
  for (const auto& [name, c] : diff.coeffs) {
    if (!is_integer(c)) throw std::logic_error("subtracted_counts: non-integer multiplicity");
    const Int v = c.convert_to<Int>();
    if (v != 0) counts[name] = v.convert_to<long long>();
  }
  if (diff.k_multiple != 0 || diff.l_multiple != 0)
    throw std::logic_error("subtracted_counts: residual canonical/seventh-class part");
  return counts;
}

inline Divisor divisor_from_counts(const SurfaceConfig& cfg, int level,
                                   const DescentCounts& counts) {
  Divisor d = Divisor::canonical(cfg) + Divisor::line_bundle(cfg, level);
  for (const auto& [name, v] : counts) d.add_curve(name, Rat(-v));
  return d;
}

inline const std::vector<DescentCounts>& descent_finals_case2() {
  // Derived once by the greedy search (tools/fpp_gen_data.cpp --print-case2-finals)
  // and frozen; regressions against these are exact.
  static const std::vector<DescentCounts> finals = {
      // level 1
      {{"A2", 1}, {"A3", 1}, {"B1", 1}, {"B2", 1}, {"C1", 1}, {"E1", 1}, {"E2", 1}, {"E3", 1}},
      // level 2
      {{"A1", 1},
       {"A2", 1},
       {"B1", 1},
       {"B2", 2},
       {"B3", 1},
       {"C1", 1},
       {"E1", 2},
       {"E2", 2},
       {"E3", 1}},
      // level 3
      {{"A1", 1},
       {"A2", 1},
       {"B1", 1},
       {"B2", 2},
       {"C1", 2},
       {"C2", 1},
       {"C3", 1},
       {"E1", 2},
       {"E2", 3},
       {"E3", 2}},
      // level 4
      {{"A1", 1},
       {"A2", 2},
       {"A3", 1},
       {"B1", 2},
       {"B2", 3},
       {"C1", 2},
       {"E1", 2},
       {"E2", 4},
       {"E3", 3}},
      // level 5
      {{"A1", 1},
       {"A2", 2},
       {"A3", 1},
       {"B1", 2},
       {"B2", 3},
       {"C1", 3},
       {"C2", 1},
       {"E1", 3},
       {"E2", 4},
       {"E3", 4}},
      // level 6
      {{"A1", 1},
       {"A2", 2},
       {"B1", 2},
       {"B2", 4},
       {"B3", 1},
       {"C1", 4},
       {"C2", 1},
       {"E1", 4},
       {"E2", 5},
       {"E3", 4}},
  };
  return finals;
}

}  // namespace fpp
