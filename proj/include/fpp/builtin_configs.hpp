#pragma once

#include <string>
#include <vector>

#include "fpp/surface.hpp"

namespace fpp {

namespace detail {

struct ConfigBuilder {
  SurfaceConfig cfg;

  explicit ConfigBuilder(std::string id) { cfg.id = std::move(id); }

  ConfigBuilder& curve(const std::string& name, long long self, CurveRole role) {
    cfg.curves.push_back({name, self, role});
    return *this;
  }

  ConfigBuilder& finalize_table(
      const std::vector<std::tuple<std::string, std::string, long long>>& pairs) {
    const std::size_t n = cfg.curves.size();
    cfg.table = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      cfg.table.at(i, i) = cfg.curves[i].self_intersection;
    for (const auto& [a, b, v] : pairs) {
      const std::size_t i = cfg.curve_index(a), j = cfg.curve_index(b);
      if (i == j) throw std::logic_error("builder: diagonal entry in pair list");
      cfg.table.at(i, j) = v;
      cfg.table.at(j, i) = v;
    }
    return *this;
  }

  ConfigBuilder& fiber(std::string type, std::vector<std::string> comps, long long mult = 1) {
    cfg.fibers.push_back({std::move(type), std::move(comps), mult});
    return *this;
  }

  ConfigBuilder& canonical_row() {
    for (const auto& c : cfg.curves) {
      long long v = 0;
      if (c.role == CurveRole::Multisection) v = 1;  // adjunction for a (-3) rational curve
      cfg.canonical.emplace_back(c.name, v);
    }
    return *this;
  }
};

}  // namespace detail

/// Base surface: four triangle fibers, two smooth multiple fibers, one
/// (-3) six-section meeting one component of each of the first three
/// triangles in six points and two components of the fourth triangle.
inline SurfaceConfig build_config_y() {
  detail::ConfigBuilder b("surface-y");
  for (int t = 1; t <= 4; ++t)
    for (int j = 1; j <= 3; ++j)
      b.curve("A" + std::to_string(t) + std::to_string(j), -2, CurveRole::FiberComponent);
  b.curve("E", -3, CurveRole::Multisection);
  b.curve("F", 0, CurveRole::FiberClass);

  std::vector<std::tuple<std::string, std::string, long long>> pairs;
  for (int t = 1; t <= 4; ++t) {
    const std::string p = "A" + std::to_string(t);
    pairs.emplace_back(p + "1", p + "2", 1);
    pairs.emplace_back(p + "2", p + "3", 1);
    pairs.emplace_back(p + "3", p + "1", 1);
  }
  pairs.emplace_back("E", "A13", 6);
  pairs.emplace_back("E", "A23", 6);
  pairs.emplace_back("E", "A33", 6);
  pairs.emplace_back("E", "A41", 1);
  pairs.emplace_back("E", "A43", 5);
  pairs.emplace_back("F", "E", 6);
  b.finalize_table(pairs);

  for (int t = 1; t <= 4; ++t) {
    const std::string p = "A" + std::to_string(t);
    b.fiber("I3", {p + "1", p + "2", p + "3"});
  }
  b.fiber("multiple", {}, 2);
  b.fiber("multiple", {}, 3);
  b.canonical_row();
  return b.cfg;
}

/// Degree-3 cover: one nine-cycle fiber, three nodal fibers, two smooth
/// multiple fibers, three (-3) six-sections. The three parametric rows
/// rotate (alpha, beta, gamma) across the sections.
inline SurfaceConfig build_config_x(CoverCase cc) {
  const CaseParams params = cc == CoverCase::I ? CaseParams{2, 1, 2} : CaseParams{1, 3, 1};
  detail::ConfigBuilder b(cc == CoverCase::I ? "surface-x-case1" : "surface-x-case2");
  const std::vector<std::string> cycle = {"A1", "A2", "A3", "B1", "B2",
                                          "B3", "C1", "C2", "C3"};
  for (const auto& n : cycle) b.curve(n, -2, CurveRole::FiberComponent);
  b.curve("E1", -3, CurveRole::Multisection);
  b.curve("E2", -3, CurveRole::Multisection);
  b.curve("E3", -3, CurveRole::Multisection);
  b.curve("F", 0, CurveRole::FiberClass);

  std::vector<std::tuple<std::string, std::string, long long>> pairs;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()], 1);
  pairs.emplace_back("E1", "A2", 1);
  pairs.emplace_back("E2", "B2", 1);
  pairs.emplace_back("E3", "C2", 1);
  const long long al = params.alpha, be = params.beta, ga = params.gamma;
  pairs.emplace_back("E1", "A3", al);
  pairs.emplace_back("E1", "B3", be);
  pairs.emplace_back("E1", "C3", ga);
  pairs.emplace_back("E2", "A3", ga);
  pairs.emplace_back("E2", "B3", al);
  pairs.emplace_back("E2", "C3", be);
  pairs.emplace_back("E3", "A3", be);
  pairs.emplace_back("E3", "B3", ga);
  pairs.emplace_back("E3", "C3", al);
  pairs.emplace_back("F", "E1", 6);
  pairs.emplace_back("F", "E2", 6);
  pairs.emplace_back("F", "E3", 6);
  b.finalize_table(pairs);

  b.fiber("I9", cycle);
  b.fiber("I1", {});
  b.fiber("I1", {});
  b.fiber("I1", {});
  b.fiber("multiple", {}, 2);
  b.fiber("multiple", {}, 3);
  b.canonical_row();
  b.cfg.case_params = params;
  return b.cfg;
}

/// The nine curves on X whose contraction produces the three
/// one-seventh-type singular points: three chains (-2)-(-2)-(-3).
inline const std::vector<std::string>& exceptional_nine() {
  static const std::vector<std::string> names = {"A1", "A2", "E1", "B1", "B2",
                                                 "E2", "C1", "C2", "E3"};
  return names;
}

/// The six curves on Y spanning the triple-A2 sublattice contracted to the
/// three one-third-type singular points.
inline const std::vector<std::string>& exceptional_six() {
  static const std::vector<std::string> names = {"A11", "A12", "A21",
                                                 "A22", "A31", "A32"};
  return names;
}

}  // namespace fpp
