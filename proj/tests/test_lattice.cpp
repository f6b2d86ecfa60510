#include <catch2/catch_amalgamated.hpp>

#include "fpp/builtin_configs.hpp"
#include "fpp/lattice.hpp"
#include "fpp/smith.hpp"
#include "fpp/solve.hpp"
#include "oracles.hpp"

using fpp::DiscriminantGroup;
using fpp::Int;
using fpp::IntMatrix;
using fpp::Lattice;
using fpp::make_rat;
using fpp::Rat;
using fpp::RatVector;

namespace {

Lattice two_curve_chain() {
  return Lattice({"u", "v"}, IntMatrix::from_rows({{-2, 1}, {1, -2}}));
}

}  // namespace

TEST_CASE("lattice constructor validates shape and symmetry") {
  CHECK_THROWS_AS(Lattice({"a"}, IntMatrix(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Lattice({"a", "b"}, IntMatrix::from_rows({{0, 1}, {2, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(Lattice({"a", "b"}, IntMatrix(2, 3)), std::invalid_argument);
  CHECK_NOTHROW(Lattice({}, IntMatrix()));
}

TEST_CASE("two-curve chain lattice: discriminant group of order 3") {
  const Lattice l = two_curve_chain();
  CHECK(determinant(l.gram) == 3);
  CHECK(l.is_even());

  const DiscriminantGroup g = discriminant_group(l);
  REQUIRE(g.cyclic_orders == std::vector<Int>{Int(3)});
  CHECK(g.order() == 3);
  CHECK(g.length() == 1);

  // the published generator lift really lies in the dual, not the lattice
  REQUIRE(g.generator_lifts.size() == 1);
  CHECK(fpp::in_dual(l, g.generator_lifts[0]));

  // discriminant form on the generator: bilinear -2/3 = 1/3 mod Z,
  // quadratic -2/3 = 4/3 mod 2Z (independent of the generator choice)
  const auto v = fpp::disc_form_value(l, {Int(1)});
  CHECK(v.bilinear == make_rat(1, 3));
  REQUIRE(v.quadratic.has_value());
  CHECK(*v.quadratic == make_rat(4, 3));
}

TEST_CASE("pair_rational checks coordinate lengths") {
  const Lattice l = two_curve_chain();
  CHECK(fpp::pair_rational(l, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}) == Rat(1));
  CHECK(fpp::pair_rational(l, {Rat(1), Rat(1)}, {Rat(1), Rat(1)}) == Rat(-2));
  CHECK_THROWS_AS(fpp::pair_rational(l, {Rat(1)}, {Rat(0), Rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("dual membership") {
  const Lattice l = two_curve_chain();
  // (2/3, 1/3) maps to (-1, 0) under the Gram: dual vector
  CHECK(fpp::in_dual(l, {make_rat(2, 3), make_rat(1, 3)}));
  // (1/2, 0) maps to (-1, 1/2): not dual
  CHECK_FALSE(fpp::in_dual(l, {make_rat(1, 2), Rat(0)}));
  // wrong length
  CHECK_FALSE(fpp::in_dual(l, {Rat(1)}));
}

TEST_CASE("degenerate Gram matrices are rejected") {
  const Lattice l({"a", "b"}, IntMatrix::from_rows({{2, 2}, {2, 2}}));
  CHECK_THROWS_AS(discriminant_group(l), std::invalid_argument);
}

TEST_CASE("six contracted curves of the base surface") {
  const fpp::SurfaceConfig y = fpp::build_config_y();
  const Lattice r = fpp::sublattice(y.curve_lattice(), fpp::exceptional_six());

  const auto snf = fpp::smith_normal_form(r.gram);
  CHECK(snf.divisors ==
        std::vector<Int>{Int(1), Int(1), Int(1), Int(3), Int(3), Int(3)});

  const auto [elem, len] = fpp::p_elementary_and_length(r, 3);
  CHECK(elem);
  CHECK(len == 3);
  CHECK(discriminant_group(r).order() == 27);
}

TEST_CASE("six-section plus two components of the fourth triangle") {
  const fpp::SurfaceConfig y = fpp::build_config_y();
  const Lattice s = fpp::sublattice(y.curve_lattice(), {"E", "A41", "A42"});

  CHECK(s.gram == IntMatrix::from_rows({{-3, 1, 0}, {1, -2, 1}, {0, 1, -2}}));
  CHECK(determinant(s.gram) == -7);

  const DiscriminantGroup g = discriminant_group(s);
  CHECK(g.cyclic_orders == std::vector<Int>{Int(7)});
  CHECK(g.length() == 1);
}

TEST_CASE("nine contracted curves of the cover surface") {
  const fpp::SurfaceConfig x = fpp::build_config_x(fpp::CoverCase::I);
  const Lattice r = fpp::sublattice(x.curve_lattice(), fpp::exceptional_nine());

  std::vector<Int> expect(6, Int(1));
  expect.insert(expect.end(), 3, Int(7));
  CHECK(fpp::smith_normal_form(r.gram).divisors == expect);

  const DiscriminantGroup g = discriminant_group(r);
  CHECK(g.cyclic_orders == std::vector<Int>{Int(7), Int(7), Int(7)});
  CHECK(g.order() == 343);
  CHECK(fpp::fraction_free_rank(r.gram) == 9);

  SECTION("chain generators carry the diagonal (-3/7) form") {
    const fpp::DiscriminantGroup dg = g;
    const char* chains[3][3] = {{"A1", "A2", "E1"}, {"B1", "B2", "E2"}, {"C1", "C2", "E3"}};
    std::vector<std::vector<Int>> gens;
    for (const auto& chain : chains) {
      RatVector v(r.rank(), Rat(0));
      for (int k = 0; k < 3; ++k) v[r.index_of(chain[k])] = make_rat(k + 1, 7);
      REQUIRE(fpp::in_dual(r, v));
      gens.push_back(fpp::to_group_coords(r, dg, v));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(fpp::disc_bilinear(r, gens[i], gens[j]) ==
              (i == j ? make_rat(4, 7) : Rat(0)));
    CHECK(fpp::subgroup_order(dg.cyclic_orders, gens) == 343);
  }

  SECTION("the same lattice arises in both cases") {
    const fpp::SurfaceConfig x2 = fpp::build_config_x(fpp::CoverCase::II);
    const Lattice r2 = fpp::sublattice(x2.curve_lattice(), fpp::exceptional_nine());
    CHECK(r.gram == r2.gram);
  }
}

TEST_CASE("group coordinates round-trip through lifts") {
  const fpp::SurfaceConfig x = fpp::build_config_x(fpp::CoverCase::I);
  const Lattice r = fpp::sublattice(x.curve_lattice(), fpp::exceptional_nine());
  const DiscriminantGroup g = discriminant_group(r);
  REQUIRE(g.length() == 3);

  oracle::Rng rng(0x90a7u);
  for (int iter = 0; iter < 25; ++iter) {
    std::vector<Int> coords;
    for (std::size_t i = 0; i < g.length(); ++i) coords.push_back(Int(rng.range(0, 6)));
    const RatVector lift = fpp::lift_of(g, coords, r.rank());
    REQUIRE(fpp::in_dual(r, lift));
    CHECK(fpp::to_group_coords(r, g, lift) == coords);
  }
}

TEST_CASE("to_group_coords rejects vectors outside the dual") {
  const Lattice l = two_curve_chain();
  const DiscriminantGroup g = discriminant_group(l);
  CHECK_THROWS_AS(fpp::to_group_coords(l, g, {make_rat(1, 2), Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("lift_of validates element shape and range") {
  const Lattice l = two_curve_chain();
  const DiscriminantGroup g = discriminant_group(l);
  CHECK_THROWS_AS(fpp::lift_of(g, {Int(1), Int(1)}, l.rank()), std::invalid_argument);
  CHECK_THROWS_AS(fpp::lift_of(g, {Int(3)}, l.rank()), std::invalid_argument);
  CHECK_THROWS_AS(fpp::lift_of(g, {Int(-1)}, l.rank()), std::invalid_argument);
}

TEST_CASE("subgroup_order on pinned cases") {
  const std::vector<Int> orders = {Int(7), Int(7), Int(7)};
  CHECK(fpp::subgroup_order(orders, {}) == 1);
  CHECK(fpp::subgroup_order(orders, {{Int(1), Int(2), Int(3)}}) == 7);
  CHECK(fpp::subgroup_order(orders, {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}}) ==
        49);
  CHECK(fpp::subgroup_order({Int(4), Int(2)}, {{Int(2), Int(1)}}) == 2);
  CHECK_THROWS_AS(fpp::subgroup_order(orders, {{Int(1)}}), std::invalid_argument);
}

TEST_CASE("sublattice picks the stated rows and columns") {
  const fpp::SurfaceConfig y = fpp::build_config_y();
  const Lattice full = y.curve_lattice();
  const Lattice sub = fpp::sublattice(full, {"A13", "E"});
  CHECK(sub.gram == IntMatrix::from_rows({{-2, 6}, {6, -3}}));
  CHECK_THROWS_AS(fpp::sublattice(full, {"nope"}), std::invalid_argument);
}
