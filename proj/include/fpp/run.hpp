#pragma once

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fpp/registry.hpp"
#include "fpp/report.hpp"
#include "fpp/surface_io.hpp"

namespace fpp {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

inline LogLevel log_level_from_env(bool verbose_flag) {
  const char* env = std::getenv("FPP_VERIFY_LOG");
  if (env) {
    const std::string v = env;
    if (v == "error") return LogLevel::Error;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
  }
  return verbose_flag ? LogLevel::Debug : LogLevel::Info;
}

struct RunOptions {
  CaseSelector selector = CaseSelector::All;
  std::optional<std::string> config_dir;  // load configs from here instead of built-ins
  std::optional<std::string> report_path; // write the report here (default: stdout)
  std::string format = "json";            // "json" or "md"
  bool verbose = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitMalformedConfig = 2;
inline constexpr int kExitIoFailure = 3;

namespace detail {

struct Logger {
  LogLevel level = LogLevel::Info;
  std::ostream* sink = &std::cerr;

  void log(LogLevel at, const std::string& msg) const {
    if (static_cast<int>(at) <= static_cast<int>(level)) *sink << "fpp-verify: " << msg << "\n";
  }
  void error(const std::string& m) const { log(LogLevel::Error, m); }
  void info(const std::string& m) const { log(LogLevel::Info, m); }
  void debug(const std::string& m) const { log(LogLevel::Debug, m); }
};

inline std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
#if defined(_WIN32)
  gmtime_s(&tm_utc, &t);
#else
  gmtime_r(&t, &tm_utc);
#endif
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

/// Load the configuration set from a directory of JSON files; only the
/// files needed by the selector are required.
inline ConfigSet load_config_set(const std::string& dir, CaseSelector selector,
                                 const Logger& log) {
  ConfigSet set;
  const std::string ypath = dir + "/surface_y.json";
  log.debug("loading " + ypath);
  set.base = load_config_file(ypath, "surface-y");

  const bool want1 = selector == CaseSelector::I || selector == CaseSelector::All;
  const bool want2 = selector == CaseSelector::II || selector == CaseSelector::All;
  if (want1) {
    const std::string p = dir + "/surface_x_case1.json";
    log.debug("loading " + p);
    SurfaceConfig x = load_config_file(p, "surface-x-case1");
    if (!x.case_params || !(*x.case_params == CaseParams{2, 1, 2}))
      throw ConfigError("config '" + p + "': expected case_params alpha=2, beta=1, gamma=2");
    set.x1 = std::move(x);
  }
  if (want2) {
    const std::string p = dir + "/surface_x_case2.json";
    log.debug("loading " + p);
    SurfaceConfig x = load_config_file(p, "surface-x-case2");
    if (!x.case_params || !(*x.case_params == CaseParams{1, 3, 1}))
      throw ConfigError("config '" + p + "': expected case_params alpha=1, beta=3, gamma=1");
    set.x2 = std::move(x);
  }
  return set;
}

}  // namespace detail

/// Full verification run: load, execute registry, emit report, map the
/// outcome to the exit-code contract.
inline int run_verification(const RunOptions& opts, std::ostream& out = std::cout,
                            std::ostream& err = std::cerr) {
  detail::Logger log{log_level_from_env(opts.verbose), &err};

  if (opts.format != "json" && opts.format != "md" && opts.format != "markdown") {
    log.error("unknown report format '" + opts.format + "'");
    return kExitIoFailure;
  }

  ConfigSet set;
  try {
    if (opts.config_dir) {
      set = detail::load_config_set(*opts.config_dir, opts.selector, log);
    } else {
      log.debug("using built-in configurations");
      set = builtin_config_set();
      if (opts.selector == CaseSelector::I) set.x2.reset();
      if (opts.selector == CaseSelector::II) set.x1.reset();
    }
  } catch (const ConfigError& e) {
    log.error(std::string("malformed configuration: ") + e.what());
    return kExitMalformedConfig;
  } catch (const IoError& e) {
    log.error(std::string("i/o failure: ") + e.what());
    return kExitIoFailure;
  }

  Report report;
  report.case_selector = case_selector_name(opts.selector);
  report.generated_at = detail::timestamp_utc();
  log.info("running claim registry (case " + report.case_selector + ")");
  report.claims = run_registry(set, opts.selector);

  std::size_t failed = 0;
  for (const auto& c : report.claims) {
    if (c.status == ClaimStatus::Failed) {
      ++failed;
      log.error("claim failed: " + c.id + " (expected " + c.expected + ", computed " +
                c.computed + ")");
    } else {
      log.debug("claim " + status_name(c.status) + ": " + c.id);
    }
  }
  log.info(std::to_string(report.claims.size()) + " claims, " + std::to_string(failed) +
           " failed");

  const std::string body = emit_report(report, opts.format == "markdown" ? "md" : opts.format);
  if (opts.report_path) {
    std::ofstream f(*opts.report_path);
    if (!f) {
      log.error("cannot open report path '" + *opts.report_path + "'");
      return kExitIoFailure;
    }
    f << body;
    f.flush();
    if (!f) {
      log.error("write failure on report path '" + *opts.report_path + "'");
      return kExitIoFailure;
    }
  } else {
    out << body;
  }

  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace fpp
