#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "fpp/solve.hpp"
#include "fpp/surface.hpp"

namespace fpp {

/// One candidate incidence triple for the first six-section against the
/// far cycle components, with the linear-system verdict.
struct FeasibilityResult {
  std::array<long long, 3> triple{};  // (alpha, beta, gamma)
  bool consistent = false;
  RatVector witness;  // (a1,a2,a3,b1,b2,b3,c1,c2,c3) when consistent
};

namespace detail {

/// Intersection table of the nine-cycle-plus-sections configuration with the
/// parametric section rows instantiated at (alpha, beta, gamma). Row order:
/// A1..A3, B1..B3, C1..C3, E1..E3; column order A1..C3.
struct ParametricTable {
  // pairing of cycle component i with cycle component j (independent of
  // the parameters): cycle adjacency.
  static Int cycle(std::size_t i, std::size_t j) {
    if (i == j) return Int(-2);
    const std::size_t d = i < j ? j - i : i - j;
    return (d == 1 || d == 8) ? Int(1) : Int(0);
  }

  // pairing of section e (0,1,2 for E1,E2,E3) with cycle component j.
  static Int section(std::size_t e, std::size_t j, long long al, long long be, long long ga) {
    // transverse points: E1.A2, E2.B2, E3.C2
    if (j == 3 * e + 1) return Int(1);
    // far components A3, B3, C3 (j = 2, 5, 8) carry the rotated parameters
    const long long rows[3][3] = {{al, be, ga}, {ga, al, be}, {be, ga, al}};
    if (j == 2) return Int(rows[e][0]);
    if (j == 5) return Int(rows[e][1]);
    if (j == 8) return Int(rows[e][2]);
    return Int(0);
  }
};

}  // namespace detail

/// Decide whether a difference of the first two six-sections can be written
/// as a rational combination of the nine cycle components, for the given
/// parameter triple. The system stacks the 12 incidence equations (test
/// curves A1..A3, B1..B3, C1..C3, E1..E3) on the 3 rotation-sum equations
/// a_i + b_i + c_i = 0.
inline FeasibilityResult check_triple(long long al, long long be, long long ga) {
  using detail::ParametricTable;
  FeasibilityResult res;
  res.triple = {al, be, ga};

  IntMatrix m(15, 9);
  std::vector<Rat> rhs(15, Rat(0));
  // rows 0..8: test against cycle components; RHS = (E2 - E1).component
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; c < 9; ++c) m.at(r, c) = ParametricTable::cycle(c, r);
    rhs[r] = Rat(ParametricTable::section(1, r, al, be, ga) -
                 ParametricTable::section(0, r, al, be, ga));
  }
  // rows 9..11: test against sections E1..E3; RHS = (E2 - E1).E_t with
  // E_i.E_j = 0 for i != j and E_i^2 = -3.
  for (std::size_t t = 0; t < 3; ++t) {
    const std::size_t r = 9 + t;
    for (std::size_t c = 0; c < 9; ++c) m.at(r, c) = ParametricTable::section(t, c, al, be, ga);
    long long v = 0;
    if (t == 0) v = 3;   // -E1.E1
    if (t == 1) v = -3;  // E2.E2
    rhs[r] = Rat(v);
  }
  // rows 12..14: a_i + b_i + c_i = 0
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t r = 12 + i;
    m.at(r, i) = 1;
    m.at(r, 3 + i) = 1;
    m.at(r, 6 + i) = 1;
  }

  const SolveResult sol = solve_rational(m, rhs);
  res.consistent = sol.consistent;
  if (sol.consistent) res.witness = sol.solution;
  return res;
}

/// All 21 nonnegative triples summing to 5, each with its verdict.
inline std::vector<FeasibilityResult> scan_triples() {
  std::vector<FeasibilityResult> out;
  for (long long al = 0; al <= 5; ++al)
    for (long long be = 0; be + al <= 5; ++be) out.push_back(check_triple(al, be, 5 - al - be));
  return out;
}

inline std::set<std::array<long long, 3>> feasible_triples() {
  std::set<std::array<long long, 3>> s;
  for (const auto& r : scan_triples())
    if (r.consistent) s.insert(r.triple);
  return s;
}

/// Substitute a witness back into all 15 equations of its triple's system.
inline bool witness_round_trip(const FeasibilityResult& r) {
  if (!r.consistent || r.witness.size() != 9) return false;
  using detail::ParametricTable;
  const auto [al, be, ga] = r.triple;
  for (std::size_t t = 0; t < 12; ++t) {
    Rat lhs(0), rhs(0);
    for (std::size_t c = 0; c < 9; ++c) {
      const Int coeff = t < 9 ? ParametricTable::cycle(c, t)
                              : ParametricTable::section(t - 9, c, al, be, ga);
      lhs += r.witness[c] * Rat(coeff);
    }
    if (t < 9)
      rhs = Rat(ParametricTable::section(1, t, al, be, ga) -
                ParametricTable::section(0, t, al, be, ga));
    else if (t == 9)
      rhs = Rat(3);
    else if (t == 10)
      rhs = Rat(-3);
    if (lhs != rhs) return false;
  }
  for (std::size_t i = 0; i < 3; ++i)
    if (r.witness[i] + r.witness[3 + i] + r.witness[6 + i] != 0) return false;
  return true;
}

/// The fiber row is a consequence of the others: (E2-E1).F = 0 and the
/// cycle-component columns sum to F.column = 0, so appending the F-equation
/// changes nothing. Returns true when that redundancy holds for the triple.
inline bool fiber_row_redundant(long long al, long long be, long long ga) {
  using detail::ParametricTable;
  // LHS row: coefficient of unknown c is (component c).F = sum over cycle
  // pairings = 0; RHS: (E2-E1).F = 6-6 = 0.
  for (std::size_t c = 0; c < 9; ++c) {
    Int colsum(0);
    for (std::size_t r = 0; r < 9; ++r) colsum += ParametricTable::cycle(c, r);
    if (colsum != 0) return false;
  }
  long long e1f = 0, e2f = 0;
  for (std::size_t c = 0; c < 9; ++c) {
    e1f += static_cast<long long>(ParametricTable::section(0, c, al, be, ga));
    e2f += static_cast<long long>(ParametricTable::section(1, c, al, be, ga));
  }
  return e2f - e1f == 0;
}

/// The configuration's stored parametric rows agree with the rotated pattern
/// of its case data.
inline bool config_params_match_rows(const SurfaceConfig& cfg) {
  if (!cfg.case_params) return false;
  const auto& p = *cfg.case_params;
  const std::string far[3] = {"A3", "B3", "C3"};
  const long long rows[3][3] = {{p.alpha, p.beta, p.gamma},
                                {p.gamma, p.alpha, p.beta},
                                {p.beta, p.gamma, p.alpha}};
  for (int e = 0; e < 3; ++e)
    for (int c = 0; c < 3; ++c)
      if (cfg.pairing("E" + std::to_string(e + 1), far[c]) != rows[e][c]) return false;
  return true;
}

/// The configuration's stored parametric rows agree with its case data and
/// the case data lies in the feasible set.
inline bool config_params_feasible(const SurfaceConfig& cfg) {
  if (!config_params_match_rows(cfg)) return false;
  const auto& p = *cfg.case_params;
  const auto feas = feasible_triples();
  return feas.count({p.alpha, p.beta, p.gamma}) != 0;
}

}  // namespace fpp
