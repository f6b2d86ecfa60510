#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fpp/lattice.hpp"

namespace fpp {

/// Integral overlattice of prime index p, presented by a glue generator in
/// the discriminant group, its rational lift, and a recomputed Gram matrix.
struct OverlatticeCertificate {
  Int index;
  std::vector<std::vector<Int>> glue_generators;  // canonical tuples mod p
  RatVector glue_lift;                            // lift of the single generator
  IntMatrix new_gram;
};

namespace detail {

// Canonical generator of the cyclic subgroup <x> in prod Z/d_i: the
// lexicographically smallest nonzero multiple. Generators that differ by a
// unit of Z/p collapse to one representative.
inline std::vector<Int> canonical_cyclic_generator(const std::vector<Int>& orders,
                                                   const std::vector<Int>& x, const Int& p) {
  std::vector<Int> best;
  for (Int k = 1; k < p; ++k) {
    std::vector<Int> mult(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) mult[i] = (x[i] * k) % orders[i];
    if (best.empty() || mult < best) best = std::move(mult);
  }
  return best;
}

}  // namespace detail

/// All cyclic order-p glue subgroups of the discriminant group whose lifts
/// pair integrally, each packaged with the Gram matrix of the corresponding
/// index-p overlattice.
inline std::vector<OverlatticeCertificate> enumerate_integral_overlattices(const Lattice& l,
                                                                           const Int& p) {
  std::vector<OverlatticeCertificate> out;
  const Int det = determinant(l.gram);
  if (det == 0) throw std::invalid_argument("enumerate_integral_overlattices: degenerate Gram");
  Int abs_det = det < 0 ? -det : det;
  if (abs_det % (p * p) != 0) return out;  // index-p overlattice would have fractional det

  const DiscriminantGroup g = discriminant_group(l);

  // p-torsion of prod Z/d_i is free over Z/p on the factors with p | d_i.
  std::vector<std::size_t> torsion_axes;
  for (std::size_t i = 0; i < g.length(); ++i)
    if (g.cyclic_orders[i] % p == 0) torsion_axes.push_back(i);
  if (torsion_axes.empty()) return out;

  std::set<std::vector<Int>> seen;
  std::vector<Int> counter(torsion_axes.size(), Int(0));
  for (;;) {
    // advance the odometer
    std::size_t pos = 0;
    while (pos < counter.size()) {
      counter[pos] += 1;
      if (counter[pos] < p) break;
      counter[pos] = 0;
      ++pos;
    }
    if (pos == counter.size()) break;

    std::vector<Int> element(g.length(), Int(0));
    for (std::size_t i = 0; i < torsion_axes.size(); ++i) {
      const std::size_t axis = torsion_axes[i];
      element[axis] = counter[i] * (g.cyclic_orders[axis] / p);
    }
    const std::vector<Int> canon = detail::canonical_cyclic_generator(g.cyclic_orders, element, p);
    if (!seen.insert(canon).second) continue;

    const RatVector lift = lift_of(g, canon, l.rank());
    if (!is_integer(pair_rational(l, lift, lift))) continue;

    // Basis of L + Z*lift: Hermite basis of the integer rows {p e_i, p lift},
    // scaled back by 1/p.
    IntMatrix stacked(l.rank() + 1, l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) stacked.at(i, i) = p;
    for (std::size_t j = 0; j < l.rank(); ++j) {
      Rat scaled = lift[j] * Rat(p);
      if (!is_integer(scaled))
        throw std::logic_error("enumerate_integral_overlattices: glue lift has wrong order");
      stacked.at(l.rank(), j) = numerator(scaled);
    }
    const IntMatrix basis = hermite_row_basis(stacked);
    if (basis.rows() != l.rank())
      throw std::logic_error("enumerate_integral_overlattices: overlattice basis rank dropped");

    IntMatrix new_gram(l.rank(), l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i)
      for (std::size_t j = 0; j < l.rank(); ++j) {
        Rat acc(0);
        for (std::size_t s = 0; s < l.rank(); ++s)
          for (std::size_t t = 0; t < l.rank(); ++t)
            if (basis.at(i, s) != 0 && basis.at(j, t) != 0)
              acc += Rat(basis.at(i, s)) * Rat(basis.at(j, t)) * Rat(l.gram.at(s, t));
        acc /= Rat(p) * Rat(p);
        if (!is_integer(acc))
          throw std::logic_error("enumerate_integral_overlattices: non-integral overlattice Gram");
        new_gram.at(i, j) = numerator(acc);
      }

    Int new_det = determinant(new_gram);
    Int expect = det / (p * p);
    if (new_det != expect)
      throw std::logic_error("enumerate_integral_overlattices: overlattice determinant mismatch");

    OverlatticeCertificate cert;
    cert.index = p;
    cert.glue_generators = {canon};
    cert.glue_lift = lift;
    cert.new_gram = std::move(new_gram);
    out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace fpp
