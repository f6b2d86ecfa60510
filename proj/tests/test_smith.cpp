#include <catch2/catch_amalgamated.hpp>

#include "fpp/smith.hpp"
#include "oracles.hpp"

using fpp::Int;
using fpp::IntMatrix;
using fpp::SnfResult;

namespace {

Int int_abs(Int v) { return v < 0 ? -v : v; }

void check_snf_contract(const IntMatrix& input, const SnfResult& snf) {
  // transforms are unimodular
  REQUIRE(int_abs(determinant(snf.left)) == 1);
  REQUIRE(int_abs(determinant(snf.right)) == 1);

  // reconstruction: left * input * right equals the diagonal of divisors
  const IntMatrix reconstructed = snf.left * input * snf.right;
  REQUIRE(reconstructed == snf.diagonal(input.rows(), input.cols()));

  // nonnegative divisors forming a divisibility chain (zeros trail)
  for (std::size_t i = 0; i < snf.divisors.size(); ++i) {
    REQUIRE(snf.divisors[i] >= 0);
    if (i + 1 < snf.divisors.size()) {
      const Int &a = snf.divisors[i], &b = snf.divisors[i + 1];
      if (a == 0)
        REQUIRE(b == 0);
      else
        REQUIRE(b % a == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  SECTION("already diagonal but out of order") {
    const IntMatrix m = IntMatrix::from_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, 3}});
    const SnfResult snf = smith_normal_form(m);
    CHECK(snf.divisors == std::vector<Int>{Int(1), Int(6), Int(0)});
    check_snf_contract(m, snf);
  }

  SECTION("rank-one gcd extraction") {
    const IntMatrix m = IntMatrix::from_rows({{4, 6}, {8, 12}});
    const SnfResult snf = smith_normal_form(m);
    CHECK(snf.divisors == std::vector<Int>{Int(2), Int(0)});
    check_snf_contract(m, snf);
  }

  SECTION("two-curve chain Gram") {
    const IntMatrix m = IntMatrix::from_rows({{-2, 1}, {1, -2}});
    const SnfResult snf = smith_normal_form(m);
    CHECK(snf.divisors == std::vector<Int>{Int(1), Int(3)});
    check_snf_contract(m, snf);
  }

  SECTION("non-square") {
    const IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}});
    const SnfResult snf = smith_normal_form(m);
    REQUIRE(snf.divisors.size() == 2);
    check_snf_contract(m, snf);
    CHECK(snf.divisors == oracle::smith_divisors_minor_gcd(m));
  }

  SECTION("zero and empty matrices") {
    const IntMatrix z(2, 2);
    const SnfResult snf = smith_normal_form(z);
    CHECK(snf.divisors == std::vector<Int>{Int(0), Int(0)});
    check_snf_contract(z, snf);
    CHECK(smith_normal_form(IntMatrix()).divisors.empty());
  }
}

TEST_CASE("smith normal form randomized: reconstruction and minor-gcd oracle") {
  oracle::Rng rng(0x5eedu);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::size_t r = static_cast<std::size_t>(rng.range(1, 5));
    const std::size_t c = static_cast<std::size_t>(rng.range(1, 5));
    const IntMatrix m = oracle::random_matrix(rng, r, c, -9, 9);
    CAPTURE(iter, m.str());
    const SnfResult snf = smith_normal_form(m);
    check_snf_contract(m, snf);
    REQUIRE(snf.divisors == oracle::smith_divisors_minor_gcd(m));
  }
}

TEST_CASE("hermite row basis spans the same row lattice") {
  oracle::Rng rng(0x4a11u);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t r = static_cast<std::size_t>(rng.range(1, 4));
    const std::size_t c = static_cast<std::size_t>(rng.range(1, 4));
    const IntMatrix m = oracle::random_matrix(rng, r, c, -7, 7);
    CAPTURE(iter, m.str());
    const IntMatrix h = hermite_row_basis(m);

    // same row span <=> identical canonical form
    REQUIRE(hermite_row_basis(h) == h);

    // stacking the original rows on top must not change the canonical basis
    IntMatrix stacked(m.rows() + h.rows(), c);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < c; ++j) stacked.at(i, j) = m.at(i, j);
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < c; ++j) stacked.at(m.rows() + i, j) = h.at(i, j);
    REQUIRE(hermite_row_basis(stacked) == h);

    // rank must match the rational-elimination oracle
    REQUIRE(h.rows() == oracle::rank_gauss(m));
  }
}

TEST_CASE("hermite row basis canonical shape") {
  // pivots positive, entries above each pivot reduced into [0, pivot)
  const IntMatrix m = IntMatrix::from_rows({{4, 7, 2}, {2, 2, 2}, {6, 9, 4}});
  const IntMatrix h = hermite_row_basis(m);
  std::size_t prev_col = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t col = 0;
    while (col < h.cols() && h.at(i, col) == 0) ++col;
    REQUIRE(col < h.cols());
    if (i > 0) REQUIRE(col > prev_col);
    prev_col = col;
    REQUIRE(h.at(i, col) > 0);
    for (std::size_t k = 0; k < i; ++k) {
      REQUIRE(h.at(k, col) >= 0);
      REQUIRE(h.at(k, col) < h.at(i, col));
    }
  }
}

TEST_CASE("hermite row basis drops zero rows") {
  const IntMatrix m = IntMatrix::from_rows({{0, 0}, {2, 4}, {1, 2}});
  const IntMatrix h = hermite_row_basis(m);
  CHECK(h.rows() == 1);
  CHECK(h == IntMatrix::from_rows({{1, 2}}));
}
