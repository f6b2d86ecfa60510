#pragma once

#include <string>
#include <vector>

#include "fpp/surface.hpp"

namespace fpp {

/// Euler number of a union of smooth rational curves: 2 per sphere minus
/// one per pairwise intersection point (counted with multiplicity).
inline long long euler_of_curve_union(const SurfaceConfig& cfg,
                                      const std::vector<std::string>& names) {
  long long e = 2 * static_cast<long long>(names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      e -= static_cast<long long>(cfg.pairing(names[i], names[j]));
  return e;
}

struct ChernResult {
  long long e_base = 0;      // Euler number of the base surface
  long long e_cover = 0;     // Euler number of the degree-3 cover
  long long e_union = 0;     // Euler number of the nine contracted curves
  long long e_open = 0;      // cover minus the union
  long long c2 = 0;          // 7 * e_open + 3 branch points
  long long chi = 1;         // holomorphic Euler characteristic (from p_g = q = 0)
  long long c1sq = 0;        // from the Noether identity
  bool noether_ok = false;
  bool proportionality_ok = false;
};

inline ChernResult chern_pipeline(const SurfaceConfig& base, const SurfaceConfig& cover,
                                  const std::vector<std::string>& contracted) {
  ChernResult r;
  r.e_base = base.euler_number();
  r.e_cover = cover.euler_number();
  r.e_union = euler_of_curve_union(cover, contracted);
  r.e_open = r.e_cover - r.e_union;
  r.c2 = 7 * r.e_open + 3;
  r.chi = 1;  // 1 - q + p_g with q = p_g = 0
  r.c1sq = 12 * r.chi - r.c2;
  r.noether_ok = r.c1sq + r.c2 == 12 * r.chi;
  r.proportionality_ok = r.c1sq == 3 * r.c2;
  return r;
}

}  // namespace fpp
