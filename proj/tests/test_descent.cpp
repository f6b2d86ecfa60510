#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpp/builtin_configs.hpp"
#include "fpp/descent.hpp"
#include "fpp/descent_goldens.hpp"

using fpp::CoverCase;
using fpp::DescentCounts;
using fpp::DescentTrace;
using fpp::Divisor;
using fpp::Rat;
using fpp::SurfaceConfig;

namespace {

const SurfaceConfig& config_for(CoverCase cc) {
  static const SurfaceConfig x1 = fpp::build_config_x(CoverCase::I);
  static const SurfaceConfig x2 = fpp::build_config_x(CoverCase::II);
  return cc == CoverCase::I ? x1 : x2;
}

}  // namespace

TEST_CASE("greedy search succeeds at every level on both cases") {
  for (const CoverCase cc : {CoverCase::I, CoverCase::II}) {
    const SurfaceConfig& x = config_for(cc);
    const fpp::detail::DescentEngine eng(x);
    for (int level = 1; level <= 6; ++level) {
      const DescentTrace tr = fpp::descent_search(x, eng, level);
      INFO(x.id << " level " << level << ": " << tr.reason);
      REQUIRE(tr.accepted);
      CHECK(tr.final_fiber_pairing == Rat(-6));
      // every recorded step was strictly negative at subtraction time
      for (const auto& s : tr.steps) CHECK(s.pairing_before < 0);
      // 2*level+1 of the subtractions are sections
      long long sections = 0;
      for (const auto& s : tr.steps)
        if (s.curve[0] == 'E') ++sections;
      CHECK(sections == 2 * level + 1);
    }
  }
}

TEST_CASE("level-6 search starts at the most negative section") {
  const DescentTrace tr = fpp::descent_search(config_for(CoverCase::I), 6);
  REQUIRE(tr.accepted);
  REQUIRE_FALSE(tr.steps.empty());
  CHECK(tr.steps[0].curve == "E2");
  CHECK(tr.steps[0].pairing_before == Rat(-11));
}

TEST_CASE("pinned final divisors are reachable except the level-4 one") {
  const SurfaceConfig& x = config_for(CoverCase::I);
  const fpp::detail::DescentEngine eng(x);
  const auto& finals = fpp::descent_finals_case1();
  REQUIRE(finals.size() == 6);

  for (const int level : {1, 2, 3, 5, 6}) {
    const DescentCounts& target = finals[static_cast<std::size_t>(level - 1)];
    const auto script = fpp::descent_script_to_target(eng, level, target);
    INFO("level " << level);
    REQUIRE(script.has_value());
    const DescentTrace tr = fpp::descent_replay(x, level, *script);
    REQUIRE(tr.accepted);
    CHECK(fpp::subtracted_counts(x, level, tr.final_divisor) == target);
  }

  // The level-4 target admits no valid subtraction order at all: the
  // exhaustive memoized search over remaining-multiset states proves the
  // unreachability rather than merely failing to find an order.
  CHECK_FALSE(fpp::descent_script_to_target(eng, 4, finals[3]).has_value());
}

TEST_CASE("frozen final divisors of the second case are all reachable") {
  const SurfaceConfig& x = config_for(CoverCase::II);
  const fpp::detail::DescentEngine eng(x);
  const auto& finals = fpp::descent_finals_case2();
  REQUIRE(finals.size() == 6);

  for (int level = 1; level <= 6; ++level) {
    const DescentCounts& target = finals[static_cast<std::size_t>(level - 1)];
    const auto script = fpp::descent_script_to_target(eng, level, target);
    INFO("level " << level);
    REQUIRE(script.has_value());
    const DescentTrace tr = fpp::descent_replay(x, level, *script);
    REQUIRE(tr.accepted);
    CHECK(fpp::subtracted_counts(x, level, tr.final_divisor) == target);
  }
}

TEST_CASE("replay rejects malformed scripts with precise reasons") {
  const SurfaceConfig& x = config_for(CoverCase::I);

  CHECK(fpp::descent_replay(x, 0, {"E2"}).reason == "level out of range 1..6");
  CHECK(fpp::descent_replay(x, 7, {"E2"}).reason == "level out of range 1..6");
  CHECK(fpp::descent_replay(x, 1, {}).reason == "empty script");
  CHECK(fpp::descent_replay(x, 1, {"Z9"}).reason == "step 1 ('Z9'): unknown curve");
  CHECK(fpp::descent_replay(x, 1, {"F"}).reason ==
        "step 1 ('F'): curve has nonnegative self-intersection");
  CHECK(fpp::descent_replay(x, 1, {"A1"}).reason ==
        "step 1 ('A1'): current divisor pairs nonnegatively (0)");

  // a curve that is neither a section nor a component of the designated
  // fiber: on the base surface only the first triangle realizes the fiber
  const SurfaceConfig y = fpp::build_config_y();
  CHECK(fpp::descent_replay(y, 1, {"A21"}).reason ==
        "step 1 ('A21'): not a section and not a component of the designated fiber");
}

TEST_CASE("replay rejects scripts with the wrong section total") {
  const SurfaceConfig& x = config_for(CoverCase::I);
  const DescentTrace base = fpp::descent_search(x, 1);
  REQUIRE(base.accepted);

  // the accepted level-1 final divisor still pairs negatively with E2, so
  // one more section keeps every per-step condition while breaking the
  // multiplicity count
  REQUIRE(fpp::intersect(x, base.final_divisor, Divisor::curve(x, "E2")) < 0);
  std::vector<std::string> script;
  for (const auto& s : base.steps) script.push_back(s.curve);
  script.push_back("E2");
  const DescentTrace tr = fpp::descent_replay(x, 1, script);
  CHECK_FALSE(tr.accepted);
  CHECK(tr.reason == "section multiplicities sum to 4, expected 3");
}

TEST_CASE("the descent engine exposes only eligible curves") {
  const SurfaceConfig& x = config_for(CoverCase::I);
  const fpp::detail::DescentEngine eng(x);
  CHECK(eng.names.size() == 12);  // nine cycle components + three sections
  CHECK_THROWS_AS(eng.index_of("F"), std::invalid_argument);
  CHECK_THROWS_AS(eng.index_of("nope"), std::invalid_argument);

  // integer fast-path rows agree with the divisor calculus
  for (int level = 1; level <= 6; ++level) {
    const Divisor d = Divisor::canonical(x) + Divisor::line_bundle(x, level);
    const auto start = eng.start_for(level);
    for (std::size_t i = 0; i < eng.names.size(); ++i)
      CHECK(Rat(start[i]) == fpp::intersect(x, d, Divisor::curve(x, eng.names[i])));
    CHECK(Rat(eng.start_fiber_for(level)) ==
          fpp::intersect(x, d, Divisor::curve(x, "F")));
  }
}

TEST_CASE("a budget with an ineligible curve is rejected") {
  const SurfaceConfig& x = config_for(CoverCase::I);
  const fpp::detail::DescentEngine eng(x);
  CHECK_THROWS_AS(fpp::descent_script_to_target(eng, 1, {{"F", 1}}), std::invalid_argument);
  CHECK_FALSE(fpp::descent_script_to_target(eng, 1, {{"E2", -1}}).has_value());
}

TEST_CASE("stored descent scripts replay exactly") {
  const std::string path = std::string(FPP_DATA_DIR) + "/descent_scripts.json";
  std::ifstream in(path);
  REQUIRE(in.good());
  const nlohmann::json j = nlohmann::json::parse(in);

  for (const CoverCase cc : {CoverCase::I, CoverCase::II}) {
    const SurfaceConfig& x = config_for(cc);
    REQUIRE(j.contains(x.id));
    const auto& arr = j.at(x.id);
    REQUIRE(arr.size() == 6);
    for (const auto& entry : arr) {
      const int level = entry.at("level").get<int>();
      const auto script = entry.at("script").get<std::vector<std::string>>();
      const auto stored = entry.at("subtracted").get<std::map<std::string, long long>>();

      const DescentTrace tr = fpp::descent_replay(x, level, script);
      INFO(x.id << " level " << level << ": " << tr.reason);
      REQUIRE(tr.accepted);
      const DescentCounts counts = fpp::subtracted_counts(x, level, tr.final_divisor);
      CHECK(counts == DescentCounts(stored.begin(), stored.end()));

      // the stored endpoints match the goldens -- except the first case's
      // level 4, where the pinned final divisor is unreachable and the file
      // carries the search result instead
      const DescentCounts& golden = fpp::descent_finals(cc)[static_cast<std::size_t>(level - 1)];
      if (cc == CoverCase::I && level == 4)
        CHECK(counts != golden);
      else
        CHECK(counts == golden);
    }
  }
}
