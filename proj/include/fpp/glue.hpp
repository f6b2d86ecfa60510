#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpp/builtin_configs.hpp"
#include "fpp/overlattice.hpp"
#include "fpp/surface.hpp"

namespace fpp {

/// The residues (a, b) picking the glue class
///   v = g1 + a*g2 + b*g3,
/// where g1, g2, g3 are the order-7 generators supported on the three
/// contractible chains, scaled by 1/7.
struct GlueVector {
  long long a = 0;
  long long b = 0;
  friend bool operator==(const GlueVector&, const GlueVector&) = default;
};

struct GlueScanEntry {
  long long a = 0, b = 0;
  bool integral = true;               // v pairs integrally with every named class
  std::string first_failure;          // first class with non-integer pairing
  Rat first_failure_value;
};

struct GlueScanResult {
  std::vector<GlueScanEntry> entries;  // all 49 candidates
  std::optional<GlueVector> unique_survivor;
};

/// Coefficient vector of 7v on the chain-supported classes, as a divisor.
inline Divisor glue_numerator(const SurfaceConfig& cfg, long long a, long long b) {
  Divisor d = Divisor::zero(cfg);
  const char* chain_a[] = {"A1", "A2", "E1"};
  const char* chain_b[] = {"B1", "B2", "E2"};
  const char* chain_c[] = {"C1", "C2", "E3"};
  for (int i = 0; i < 3; ++i) {
    d.add_curve(chain_a[i], Rat(i + 1));
    d.add_curve(chain_b[i], Rat(a * (i + 1)));
    d.add_curve(chain_c[i], Rat(b * (i + 1)));
  }
  return d;
}

/// Brute-force all 49 residue pairs; a candidate survives when
/// v = (7v)/7 has integer intersection with every named class (the twelve
/// curves and the fiber class).
inline GlueScanResult glue_scan(const SurfaceConfig& cfg) {
  GlueScanResult res;
  for (long long a = 0; a < 7; ++a) {
    for (long long b = 0; b < 7; ++b) {
      GlueScanEntry e;
      e.a = a;
      e.b = b;
      const Divisor seven_v = glue_numerator(cfg, a, b);
      for (const auto& c : cfg.curves) {
        const Rat val = intersect(cfg, seven_v, Divisor::curve(cfg, c.name)) / 7;
        if (!is_integer(val)) {
          e.integral = false;
          e.first_failure = c.name;
          e.first_failure_value = val;
          break;
        }
      }
      res.entries.push_back(std::move(e));
    }
  }
  std::vector<GlueVector> survivors;
  for (const auto& e : res.entries)
    if (e.integral) survivors.push_back({e.a, e.b});
  if (survivors.size() == 1) res.unique_survivor = survivors.front();
  return res;
}

/// The unique survivor of a completed scan; zero or multiple survivors is a
/// hard verification failure.
inline GlueVector glue_vector_from_scan(const GlueScanResult& res) {
  if (!res.unique_survivor) {
    std::size_t n = 0;
    for (const auto& e : res.entries)
      if (e.integral) ++n;
    throw std::logic_error("glue scan: expected exactly 1 survivor, found " + std::to_string(n));
  }
  return *res.unique_survivor;
}

/// The unique glue vector for a case-carrying configuration.
inline GlueVector glue_vector(const SurfaceConfig& cfg) {
  return glue_vector_from_scan(glue_scan(cfg));
}

/// Cross-check against the lattice layer: the glue class, read in the
/// discriminant group of the chain lattice, must generate one of the
/// enumerated index-7 integral overlattices.  This overload accepts the
/// chain lattice and its certificates precomputed so callers checking many
/// vectors do not repeat the enumeration.
inline bool glue_matches_overlattice(const SurfaceConfig& cfg, const GlueVector& gv,
                                     const Lattice& chains,
                                     const std::vector<OverlatticeCertificate>& certs) {
  const DiscriminantGroup dg = discriminant_group(chains);

  RatVector v(chains.rank(), Rat(0));
  const Divisor seven_v = glue_numerator(cfg, gv.a, gv.b);
  for (const auto& [name, c] : seven_v.coeffs) v[chains.index_of(name)] = c / 7;

  const std::vector<Int> coords = to_group_coords(chains, dg, v);
  const std::vector<Int> canon = detail::canonical_cyclic_generator(dg.cyclic_orders, coords, 7);

  for (const auto& cert : certs)
    for (const auto& g : cert.glue_generators)
      if (g == canon) return true;
  return false;
}

inline bool glue_matches_overlattice(const SurfaceConfig& cfg, const GlueVector& gv) {
  const Lattice chains = sublattice(cfg.curve_lattice(), exceptional_nine());
  return glue_matches_overlattice(cfg, gv, chains, enumerate_integral_overlattices(chains, 7));
}

/// The effective divisor with coefficients reduced mod 7 represents the
/// same class as 7v modulo the chain lattice; verified entrywise.
inline bool divisor_B_matches_glue(const SurfaceConfig& cfg, const GlueVector& gv) {
  const Divisor b = divisor_B(cfg);
  const Divisor seven_v = glue_numerator(cfg, gv.a, gv.b);
  for (const std::string& name : exceptional_nine()) {
    Rat bv(0), sv(0);
    if (auto it = b.coeffs.find(name); it != b.coeffs.end()) bv = it->second;
    if (auto it = seven_v.coeffs.find(name); it != seven_v.coeffs.end()) sv = it->second;
    const Rat diff = bv - sv;
    if (!is_integer(diff)) return false;
    if (mod_one(diff / 7) != 0) return false;  // difference divisible by 7
    if (bv < 0 || bv > 6) return false;        // reduced representative
  }
  return true;
}

}  // namespace fpp
