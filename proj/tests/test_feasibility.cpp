#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <set>

#include "fpp/builtin_configs.hpp"
#include "fpp/feasibility.hpp"

using fpp::CoverCase;

TEST_CASE("the incidence scan covers all 21 candidate triples") {
  const auto results = fpp::scan_triples();
  CHECK(results.size() == 21);

  std::set<std::array<long long, 3>> seen;
  for (const auto& r : results) {
    const auto [al, be, ga] = r.triple;
    CHECK(al >= 0);
    CHECK(be >= 0);
    CHECK(ga >= 0);
    CHECK(al + be + ga == 5);
    seen.insert(r.triple);
  }
  CHECK(seen.size() == 21);
}

TEST_CASE("exactly two triples admit a consistent incidence system") {
  const std::set<std::array<long long, 3>> expect = {{2, 1, 2}, {1, 3, 1}};
  CHECK(fpp::feasible_triples() == expect);
}

TEST_CASE("pinned individual triples") {
  CHECK(fpp::check_triple(2, 1, 2).consistent);
  CHECK(fpp::check_triple(1, 3, 1).consistent);
  CHECK_FALSE(fpp::check_triple(0, 5, 0).consistent);
  CHECK_FALSE(fpp::check_triple(5, 0, 0).consistent);
  CHECK_FALSE(fpp::check_triple(1, 1, 3).consistent);
}

TEST_CASE("witnesses substitute back into every equation") {
  int consistent = 0;
  for (const auto& r : fpp::scan_triples()) {
    if (!r.consistent) continue;
    ++consistent;
    REQUIRE(r.witness.size() == 9);
    CHECK(fpp::witness_round_trip(r));
  }
  CHECK(consistent == 2);
}

TEST_CASE("the fiber-class row adds no information") {
  for (const auto& r : fpp::scan_triples()) {
    const auto [al, be, ga] = r.triple;
    INFO("(" << al << "," << be << "," << ga << ")");
    CHECK(fpp::fiber_row_redundant(al, be, ga));
  }
}

TEST_CASE("stored case parameters match the instantiated section rows") {
  const fpp::SurfaceConfig x1 = fpp::build_config_x(CoverCase::I);
  const fpp::SurfaceConfig x2 = fpp::build_config_x(CoverCase::II);
  CHECK(fpp::config_params_match_rows(x1));
  CHECK(fpp::config_params_match_rows(x2));
  CHECK(fpp::config_params_feasible(x1));
  CHECK(fpp::config_params_feasible(x2));

  // no case parameters at all
  CHECK_FALSE(fpp::config_params_match_rows(fpp::build_config_y()));

  // a tampered section row breaks the match even though the parameters
  // themselves are still feasible
  fpp::SurfaceConfig tampered = x1;
  const std::size_t e1 = tampered.curve_index("E1");
  const std::size_t a3 = tampered.curve_index("A3");
  tampered.table.at(e1, a3) = 3;
  tampered.table.at(a3, e1) = 3;
  CHECK_FALSE(fpp::config_params_match_rows(tampered));
  CHECK_FALSE(fpp::config_params_feasible(tampered));

  // parameters that match doctored rows but fail the feasibility scan
  fpp::SurfaceConfig infeasible = x1;
  infeasible.case_params = fpp::CaseParams{0, 5, 0};
  CHECK_FALSE(fpp::config_params_match_rows(infeasible));
}
