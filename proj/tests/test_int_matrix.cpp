#include <catch2/catch_amalgamated.hpp>

#include "fpp/int_matrix.hpp"
#include "oracles.hpp"

using fpp::Int;
using fpp::IntMatrix;

TEST_CASE("determinant of small pinned matrices") {
  CHECK(determinant(IntMatrix()) == 1);  // empty product convention
  CHECK(determinant(IntMatrix::identity(4)) == 1);

  const IntMatrix m = IntMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(determinant(m) == -2);

  const IntMatrix singular = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(determinant(singular) == 0);

  // companion-style matrix with known determinant
  const IntMatrix c = IntMatrix::from_rows({{0, 0, 5}, {1, 0, -2}, {0, 1, 3}});
  CHECK(determinant(c) == 5);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
  oracle::Rng rng(0x12345678u);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
    const IntMatrix m = oracle::random_matrix(rng, n, n, -9, 9);
    CAPTURE(iter, m.str());
    REQUIRE(determinant(m) == oracle::det_cofactor(m));
  }
}

TEST_CASE("determinant respects row operations") {
  oracle::Rng rng(0xabcdefu);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = static_cast<std::size_t>(rng.range(2, 5));
    IntMatrix m = oracle::random_matrix(rng, n, n, -6, 6);
    const Int d = determinant(m);

    IntMatrix swapped = m;
    swapped.swap_rows(0, n - 1);
    CHECK(determinant(swapped) == -d);

    IntMatrix sheared = m;
    sheared.add_row(0, n - 1, Int(rng.range(-3, 3)));
    CHECK(determinant(sheared) == d);

    IntMatrix negated = m;
    negated.negate_row(0);
    CHECK(determinant(negated) == -d);

    CHECK(determinant(m.transposed()) == d);
  }
}

TEST_CASE("determinant is multiplicative") {
  oracle::Rng rng(0x777u);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = static_cast<std::size_t>(rng.range(1, 4));
    const IntMatrix a = oracle::random_matrix(rng, n, n, -5, 5);
    const IntMatrix b = oracle::random_matrix(rng, n, n, -5, 5);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("determinant requires a square matrix") {
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("from_rows rejects ragged input") {
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("at() is bounds-checked") {
  IntMatrix m(2, 2);
  CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m.at(0, 2), std::out_of_range);
  const IntMatrix& cm = m;
  CHECK_THROWS_AS(cm.at(5, 5), std::out_of_range);
}

TEST_CASE("structure predicates") {
  const IntMatrix sym = IntMatrix::from_rows({{1, 7}, {7, -2}});
  CHECK(sym.is_symmetric());
  CHECK(IntMatrix::from_rows({{1, 2}, {3, 4}}).is_symmetric() == false);
  CHECK(IntMatrix(3, 3).is_zero());
  CHECK(IntMatrix::identity(3).is_zero() == false);
  CHECK(IntMatrix(2, 3).is_square() == false);
}

TEST_CASE("matrix product against a hand-computed example") {
  const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  const IntMatrix b = IntMatrix::from_rows({{5, 6}, {7, 8}});
  CHECK(a * b == IntMatrix::from_rows({{19, 22}, {43, 50}}));
  CHECK((a * IntMatrix::identity(2)) == a);
}
