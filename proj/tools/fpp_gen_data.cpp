// fpp-gen-data: regenerate the shipped data files from the built-in
// configurations and the descent engine.
//
//   data/surface_y.json        base-surface configuration
//   data/surface_x_case1.json  cover configuration, first incidence case
//   data/surface_x_case2.json  cover configuration, second incidence case
//   data/descent_scripts.json  descent subtraction orders, both cases
//
// With --print-case2-finals it instead prints the greedy Case-II final
// divisors as C++ initializer lines (the frozen goldens).

#include <filesystem>
#include <iostream>
#include <string>

#include <json.hpp>

#include "fpp/builtin_configs.hpp"
#include "fpp/descent.hpp"
#include "fpp/descent_goldens.hpp"
#include "fpp/surface_io.hpp"

namespace {

nlohmann::json scripts_for(const fpp::SurfaceConfig& cfg) {
  nlohmann::json out = nlohmann::json::array();
  for (int level = 1; level <= 6; ++level) {
    // Prefer a valid order reaching the pinned final when one is frozen and
    // reachable; otherwise fall back to the greedy order (always a valid
    // descent, possibly with a different endpoint).
    const auto& finals = fpp::descent_finals(fpp::cover_case_of(cfg));
    std::vector<std::string> script;
    if (static_cast<std::size_t>(level) <= finals.size()) {
      if (auto found = fpp::descent_script_to_target(cfg, level, finals[level - 1]))
        script = *found;
      else
        std::cerr << "note: " << cfg.id << " level " << level
                  << ": pinned final unreachable, storing the greedy order instead\n";
    }
    if (script.empty()) {
      const fpp::DescentTrace tr = fpp::descent_search(cfg, level);
      if (!tr.accepted) {
        std::cerr << "greedy search failed for " << cfg.id << " level " << level << ": "
                  << tr.reason << "\n";
        std::exit(1);
      }
      for (const auto& s : tr.steps) script.push_back(s.curve);
    }
    const fpp::DescentTrace check = fpp::descent_replay(cfg, level, script);
    if (!check.accepted) {
      std::cerr << "replay rejected for " << cfg.id << " level " << level << ": " << check.reason
                << "\n";
      std::exit(1);
    }
    nlohmann::json entry;
    entry["level"] = level;
    entry["script"] = script;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [name, v] : fpp::subtracted_counts(cfg, level, check.final_divisor))
      counts[name] = v;
    entry["subtracted"] = counts;
    out.push_back(std::move(entry));
  }
  return out;
}

void print_case2_finals(const fpp::SurfaceConfig& x2) {
  for (int level = 1; level <= 6; ++level) {
    const fpp::DescentTrace tr = fpp::descent_search(x2, level);
    if (!tr.accepted) {
      std::cerr << "greedy search failed at level " << level << ": " << tr.reason << "\n";
      std::exit(1);
    }
    if (tr.final_fiber_pairing != -6) {
      std::cerr << "unexpected final fiber pairing at level " << level << "\n";
      std::exit(1);
    }
    const auto counts = fpp::subtracted_counts(x2, level, tr.final_divisor);
    std::cout << "      // level " << level << "\n      {";
    bool first = true;
    for (const auto& [name, v] : counts) {
      std::cout << (first ? "" : ", ") << "{\"" << name << "\", " << v << "}";
      first = false;
    }
    std::cout << "},\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  const fpp::SurfaceConfig y = fpp::build_config_y();
  const fpp::SurfaceConfig x1 = fpp::build_config_x(fpp::CoverCase::I);
  const fpp::SurfaceConfig x2 = fpp::build_config_x(fpp::CoverCase::II);

  if (argc > 1 && std::string(argv[1]) == "--print-case2-finals") {
    print_case2_finals(x2);
    return 0;
  }

  const std::string dir = argc > 1 ? argv[1] : "data";
  try {
    std::filesystem::create_directories(dir);
    fpp::save_config_file(y, dir + "/surface_y.json");
    fpp::save_config_file(x1, dir + "/surface_x_case1.json");
    fpp::save_config_file(x2, dir + "/surface_x_case2.json");
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  nlohmann::json scripts;
  scripts["surface-x-case1"] = scripts_for(x1);
  scripts["surface-x-case2"] = scripts_for(x2);
  std::ofstream f(dir + "/descent_scripts.json");
  if (!f) {
    std::cerr << "cannot open " << dir << "/descent_scripts.json\n";
    return 1;
  }
  f << scripts.dump(2) << "\n";
  std::cout << "wrote configuration and descent-script files to " << dir << "/\n";
  return 0;
}
