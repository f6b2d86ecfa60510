#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpp/int_matrix.hpp"
#include "fpp/smith.hpp"

namespace fpp {

/// Integral lattice: labeled basis plus a symmetric Gram matrix.
struct Lattice {
  std::vector<std::string> basis_labels;
  IntMatrix gram;

  Lattice(std::vector<std::string> labels, IntMatrix g)
      : basis_labels(std::move(labels)), gram(std::move(g)) {
    if (!gram.is_square() || gram.rows() != basis_labels.size())
      throw std::invalid_argument("Lattice: label count must match Gram size");
    if (!gram.is_symmetric()) throw std::invalid_argument("Lattice: Gram not symmetric");
  }

  std::size_t rank() const { return gram.rows(); }

  bool is_even() const {
    for (std::size_t i = 0; i < gram.rows(); ++i)
      if (gram.at(i, i) % 2 != 0) return false;
    return true;
  }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_labels.size(); ++i)
      if (basis_labels[i] == label) return i;
    throw std::invalid_argument("Lattice: unknown basis label '" + label + "'");
  }
};

inline Lattice sublattice(const Lattice& l, const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& name : labels) idx.push_back(l.index_of(name));
  IntMatrix g(labels.size(), labels.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) g.at(i, j) = l.gram.at(idx[i], idx[j]);
  return Lattice(labels, std::move(g));
}

/// Exact pairing v . gram . w of two vectors in basis coordinates.
inline Rat pair_rational(const Lattice& l, const RatVector& v, const RatVector& w) {
  if (v.size() != l.rank() || w.size() != l.rank())
    throw std::invalid_argument("pair_rational: coordinate length mismatch");
  Rat acc(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) acc += v[i] * w[j] * Rat(l.gram.at(i, j));
  }
  return acc;
}

/// Membership in the dual lattice: gram . v integral.
inline bool in_dual(const Lattice& l, const RatVector& v) {
  if (v.size() != l.rank()) return false;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Rat acc(0);
    for (std::size_t j = 0; j < l.rank(); ++j)
      if (v[j] != 0) acc += Rat(l.gram.at(i, j)) * v[j];
    if (!is_integer(acc)) return false;
  }
  return true;
}

/// dual/lattice quotient presented by cyclic orders (divisibility chain,
/// trivial factors dropped) and one rational lift per generator.
struct DiscriminantGroup {
  std::vector<Int> cyclic_orders;
  std::vector<RatVector> generator_lifts;

  Int order() const {
    Int o = 1;
    for (const Int& d : cyclic_orders) o *= d;
    return o;
  }
  std::size_t length() const { return cyclic_orders.size(); }
};

inline DiscriminantGroup discriminant_group(const Lattice& l) {
  const Int det = determinant(l.gram);
  if (det == 0) throw std::invalid_argument("discriminant_group: degenerate Gram matrix");
  const SnfResult snf = smith_normal_form(l.gram);
  DiscriminantGroup g;
  for (std::size_t i = 0; i < snf.divisors.size(); ++i) {
    const Int& d = snf.divisors[i];
    if (d <= 1) continue;
    g.cyclic_orders.push_back(d);
    // With U*G*V = D, the class of (column i of V)/d_i generates a cyclic
    // factor of order d_i in the dual/lattice quotient.
    RatVector lift(l.rank());
    for (std::size_t r = 0; r < l.rank(); ++r) lift[r] = make_rat(snf.right.at(r, i), d);
    g.generator_lifts.push_back(std::move(lift));
  }
  return g;
}

/// (is p-elementary, length). The trivial group is p-elementary of length 0
/// for every p.
inline std::pair<bool, std::size_t> p_elementary_and_length(const Lattice& l, const Int& p) {
  const DiscriminantGroup g = discriminant_group(l);
  bool elementary = true;
  for (const Int& d : g.cyclic_orders)
    if (d != p) elementary = false;
  return {elementary, g.length()};
}

namespace detail {

// Inverse of a matrix with det = +-1, exact, via the adjugate.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  const Int det = determinant(m);
  if (det != 1 && det != -1) throw std::invalid_argument("inverse_unimodular: |det| != 1");
  const std::size_t n = m.rows();
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(mr, mc++) = m.at(r, c);
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(i, j) = det == 1 ? cof : -cof;
    }
  return inv;
}

}  // namespace detail

/// Coordinates of a dual vector with respect to the group generators:
/// v = sum x_i * lift_i modulo the lattice, each x_i reduced mod its order.
/// Rejects vectors outside the dual.
inline std::vector<Int> to_group_coords(const Lattice& l, const DiscriminantGroup& g,
                                        const RatVector& v) {
  if (!in_dual(l, v)) throw std::invalid_argument("to_group_coords: vector not in the dual lattice");
  const SnfResult snf = smith_normal_form(l.gram);
  const IntMatrix vinv = detail::inverse_unimodular(snf.right);
  // c = V^-1 v; the coordinate against generator i is c_i * d_i mod d_i.
  std::vector<Int> coords;
  std::size_t gi = 0;
  for (std::size_t i = 0; i < snf.divisors.size(); ++i) {
    Rat ci(0);
    for (std::size_t j = 0; j < l.rank(); ++j)
      if (v[j] != 0) ci += Rat(vinv.at(i, j)) * v[j];
    const Int& d = snf.divisors[i];
    if (d <= 1) continue;
    Rat x = ci * Rat(d);
    if (!is_integer(x))
      throw std::invalid_argument("to_group_coords: vector not in the dual lattice");
    Int xi = numerator(x) % d;
    if (xi < 0) xi += d;
    coords.push_back(xi);
    ++gi;
  }
  (void)gi;
  if (coords.size() != g.length())
    throw std::invalid_argument("to_group_coords: group shape mismatch");
  return coords;
}

inline RatVector lift_of(const DiscriminantGroup& g, const std::vector<Int>& element,
                         std::size_t rank) {
  if (element.size() != g.length())
    throw std::invalid_argument("discriminant group element has wrong shape");
  RatVector lift(rank, Rat(0));
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (element[i] < 0 || element[i] >= g.cyclic_orders[i])
      throw std::invalid_argument("discriminant group coefficient out of range");
    for (std::size_t r = 0; r < rank; ++r) lift[r] += Rat(element[i]) * g.generator_lifts[i][r];
  }
  return lift;
}

/// Discriminant bilinear form, Q/Z valued, on coefficient tuples.
inline Rat disc_bilinear(const Lattice& l, const std::vector<Int>& x, const std::vector<Int>& y) {
  const DiscriminantGroup g = discriminant_group(l);
  const RatVector lx = lift_of(g, x, l.rank());
  const RatVector ly = lift_of(g, y, l.rank());
  return mod_one(pair_rational(l, lx, ly));
}

/// Value of the discriminant form at one element: the bilinear value mod Z,
/// and the quadratic value mod 2Z when the lattice is even.
struct DiscFormValue {
  Rat bilinear;                  // in [0, 1)
  std::optional<Rat> quadratic;  // in [0, 2), even lattices only
};

inline DiscFormValue disc_form_value(const Lattice& l, const std::vector<Int>& x) {
  const DiscriminantGroup g = discriminant_group(l);
  const RatVector lx = lift_of(g, x, l.rank());
  const Rat raw = pair_rational(l, lx, lx);
  DiscFormValue v{mod_one(raw), std::nullopt};
  if (l.is_even()) v.quadratic = mod_two(raw);
  return v;
}

/// Size of the subgroup generated by the given tuples inside prod Z/d_i,
/// by closure enumeration. Intended for small groups.
inline std::size_t subgroup_order(const std::vector<Int>& orders,
                                  const std::vector<std::vector<Int>>& generators) {
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> frontier;
  std::vector<Int> zero(orders.size(), Int(0));
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& e : frontier)
      for (const auto& gen : generators) {
        if (gen.size() != orders.size())
          throw std::invalid_argument("subgroup_order: generator shape mismatch");
        std::vector<Int> s(e);
        for (std::size_t i = 0; i < s.size(); ++i) {
          s[i] = (s[i] + gen[i]) % orders[i];
          if (s[i] < 0) s[i] += orders[i];
        }
        if (seen.insert(s).second) next.push_back(std::move(s));
        if (seen.size() > 1000000) throw std::runtime_error("subgroup_order: group too large");
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace fpp
