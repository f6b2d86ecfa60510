#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

#if !defined(_WIN32)
#include <sys/wait.h>
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "fpp_cli_capture";
  fs::create_directories(dir);
  const fs::path out_path = dir / ("out" + std::to_string(++counter) + ".txt");
  const fs::path err_path = dir / ("err" + std::to_string(counter) + ".txt");

  const std::string cmd = std::string(FPP_VERIFY_BIN) + " " + args + " >" + out_path.string() +
                          " 2>" + err_path.string();
  const int raw = std::system(cmd.c_str());

  CliResult res;
#if defined(_WIN32)
  res.exit_code = raw;
#else
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#endif
  res.out = slurp(out_path);
  res.err = slurp(err_path);
  return res;
}

/// Copy the shipped base file plus (optionally mutated) first-case file into
/// a fresh directory; returns that directory.
fs::path make_config_dir(const std::string& tag,
                         const std::function<void(json&)>& mutate_x1) {
  const fs::path dir = fs::temp_directory_path() / ("fpp_cli_cfg_" + tag);
  fs::create_directories(dir);
  const fs::path data = FPP_DATA_DIR;

  fs::copy_file(data / "surface_y.json", dir / "surface_y.json",
                fs::copy_options::overwrite_existing);

  json x1 = json::parse(slurp(data / "surface_x_case1.json"));
  if (mutate_x1) mutate_x1(x1);
  std::ofstream out(dir / "surface_x_case1.json");
  out << x1.dump(2) << "\n";
  return dir;
}

const std::string kDataDir = FPP_DATA_DIR;

}  // namespace

TEST_CASE("full run over the shipped data") {
  const CliResult r = run_cli("run --case all --config " + kDataDir);
  // one pinned final divisor is provably unreachable, so the full registry
  // reports exactly one failed claim and the run exits 1
  CHECK(r.exit_code == 1);

  const json report = json::parse(r.out);
  CHECK(report.at("schema_version").get<std::string>() == "1");
  CHECK(report.at("case_selector").get<std::string>() == "all");
  CHECK(report.at("claims").size() == 90);
  CHECK(report.at("summary").at("verified").get<int>() == 82);
  CHECK(report.at("summary").at("asserted-unverified").get<int>() == 7);
  CHECK(report.at("summary").at("failed").get<int>() == 1);

  std::vector<std::string> failed_ids;
  for (const auto& c : report.at("claims"))
    if (c.at("status").get<std::string>() == "failed")
      failed_ids.push_back(c.at("claim_id").get<std::string>());
  REQUIRE(failed_ids.size() == 1);
  CHECK(failed_ids[0] == "descent.case-i.level4.pinned-final");
}

TEST_CASE("second-case run is fully green") {
  const CliResult r = run_cli("run --case II --config " + kDataDir);
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report.at("case_selector").get<std::string>() == "II");
  CHECK(report.at("claims").size() == 64);
  CHECK(report.at("summary").at("failed").get<int>() == 0);
  CHECK(report.at("summary").at("verified").get<int>() == 57);
  CHECK(report.at("summary").at("asserted-unverified").get<int>() == 7);
}

TEST_CASE("first-case run carries the single known failure") {
  const CliResult r = run_cli("run --case I --config " + kDataDir);
  CHECK(r.exit_code == 1);
  const json report = json::parse(r.out);
  CHECK(report.at("claims").size() == 64);
  CHECK(report.at("summary").at("verified").get<int>() == 56);
  CHECK(report.at("summary").at("failed").get<int>() == 1);
  CHECK(r.err.find("descent.case-i.level4.pinned-final") != std::string::npos);
}

TEST_CASE("built-in data is used when no config directory is given") {
  const CliResult r = run_cli("run --case II");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report.at("summary").at("failed").get<int>() == 0);
}

TEST_CASE("report file output") {
  const fs::path path = fs::temp_directory_path() / "fpp_cli_report.json";
  fs::remove(path);
  const CliResult r = run_cli("run --case II --config " + kDataDir + " --report " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());  // the report went to the file instead
  const json report = json::parse(slurp(path));
  CHECK(report.at("claims").size() == 64);
  fs::remove(path);
}

TEST_CASE("markdown format") {
  const CliResult r = run_cli("run --case II --config " + kDataDir + " --format md");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("# Verification report\n", 0) == 0);
  CHECK(r.out.find("| `glue.case-ii.unique` | verified |") != std::string::npos);
}

TEST_CASE("unknown report formats exit with the i/o code") {
  const CliResult r = run_cli("run --case II --format yaml");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("unknown report format") != std::string::npos);
}

TEST_CASE("unwritable report paths exit with the i/o code") {
  const CliResult r =
      run_cli("run --case II --config " + kDataDir + " --report /nonexistent_dir_fpp/r.json");
  CHECK(r.exit_code == 3);
}

TEST_CASE("missing configuration directory exits with the i/o code") {
  const CliResult r = run_cli("run --case I --config /no/such/dir_fpp");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("i/o failure") != std::string::npos);
}

TEST_CASE("unparseable configuration exits with the malformed-config code") {
  const fs::path dir = fs::temp_directory_path() / "fpp_cli_cfg_empty";
  fs::create_directories(dir);
  std::ofstream(dir / "surface_y.json") << "";
  const CliResult r = run_cli("run --case I --config " + dir.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("malformed configuration") != std::string::npos);
}

TEST_CASE("tampered case parameters exit with the malformed-config code") {
  const fs::path dir = make_config_dir("params", [](json& x1) {
    x1.at("case_params").at("alpha") = 3;
  });
  const CliResult r = run_cli("run --case I --config " + dir.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("expected case_params") != std::string::npos);
}

TEST_CASE("a perturbed incidence is caught by the registry, not the loader") {
  // bump E1.A3 from 2 to 3: structurally valid JSON, but the incidence
  // system and the rotation symmetry both break, so the run exits 1
  const fs::path dir = make_config_dir("incidence", [](json& x1) {
    bool hit = false;
    for (auto& row : x1.at("intersections")) {
      const std::string a = row.at(0).get<std::string>();
      const std::string b = row.at(1).get<std::string>();
      if ((a == "E1" && b == "A3") || (a == "A3" && b == "E1")) {
        row.at(2) = 3;
        hit = true;
      }
    }
    if (!hit) throw std::runtime_error("no E1.A3 entry found");
  });
  const CliResult r = run_cli("run --case I --config " + dir.string());
  CHECK(r.exit_code == 1);

  const json report = json::parse(r.out);
  std::vector<std::string> failed_ids;
  for (const auto& c : report.at("claims"))
    if (c.at("status").get<std::string>() == "failed")
      failed_ids.push_back(c.at("claim_id").get<std::string>());
  CHECK(std::find(failed_ids.begin(), failed_ids.end(), "feasibility.case-i.params") !=
        failed_ids.end());
  CHECK(std::find(failed_ids.begin(), failed_ids.end(), "config.case-i.rotation") !=
        failed_ids.end());
}

TEST_CASE("invocation errors") {
  CHECK(run_cli("").exit_code != 0);                    // missing subcommand
  CHECK(run_cli("run --case III").exit_code != 0);      // invalid selector
  CHECK(run_cli("frobnicate").exit_code != 0);          // unknown subcommand
}
