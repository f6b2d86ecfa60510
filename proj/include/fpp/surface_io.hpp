#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fpp/surface.hpp"

namespace fpp {

/// Config file fails schema validation (CLI exit 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (CLI exit 3).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline long long require_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ConfigError(where + ": expected an integer, got " + j.dump());
  return j.get<long long>();
}

inline std::string require_str(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

inline const nlohmann::json& require_key(const nlohmann::json& j, const std::string& key,
                                         const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(where + ": missing key '" + key + "'");
  return *it;
}

}  // namespace detail

/// Parse a surface configuration from JSON. `id` names the configuration
/// (derived from the file name by the directory loader).
inline SurfaceConfig config_from_json(const nlohmann::json& j, const std::string& id) {
  using detail::require_int;
  using detail::require_key;
  using detail::require_str;

  if (!j.is_object()) throw ConfigError("config '" + id + "': top level must be an object");
  SurfaceConfig cfg;
  cfg.id = id;

  const auto& curves = require_key(j, "curves", "config '" + id + "'");
  if (!curves.is_array() || curves.empty())
    throw ConfigError("config '" + id + "': 'curves' must be a nonempty array");
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const std::string where = "config '" + id + "' curves[" + std::to_string(k) + "]";
    const auto& c = curves[k];
    CurveClass cc;
    cc.name = require_str(require_key(c, "name", where), where + ".name");
    if (cc.name.empty()) throw ConfigError(where + ": empty curve name");
    if (cfg.has_curve(cc.name)) throw ConfigError(where + ": duplicate curve '" + cc.name + "'");
    cc.self_intersection =
        require_int(require_key(c, "self_intersection", where), where + ".self_intersection");
    try {
      cc.role = role_from_name(require_str(require_key(c, "role", where), where + ".role"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": " + e.what());
    }
    cfg.curves.push_back(std::move(cc));
  }

  const std::size_t n = cfg.curves.size();
  cfg.table = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) cfg.table.at(i, i) = cfg.curves[i].self_intersection;

  const auto& inters = require_key(j, "intersections", "config '" + id + "'");
  if (!inters.is_array())
    throw ConfigError("config '" + id + "': 'intersections' must be an array");
  for (std::size_t k = 0; k < inters.size(); ++k) {
    const std::string where = "config '" + id + "' intersections[" + std::to_string(k) + "]";
    const auto& e = inters[k];
    if (!e.is_array() || e.size() != 3)
      throw ConfigError(where + ": expected [nameA, nameB, value]");
    const std::string a = require_str(e[0], where + "[0]");
    const std::string b = require_str(e[1], where + "[1]");
    const long long v = require_int(e[2], where + "[2]");
    if (!cfg.has_curve(a)) throw ConfigError(where + ": unknown curve '" + a + "'");
    if (!cfg.has_curve(b)) throw ConfigError(where + ": unknown curve '" + b + "'");
    if (a == b) throw ConfigError(where + ": diagonal entry; use self_intersection instead");
    const std::size_t i = cfg.curve_index(a), jj = cfg.curve_index(b);
    if (cfg.table.at(i, jj) != 0)
      throw ConfigError(where + ": pair ('" + a + "','" + b + "') listed twice");
    cfg.table.at(i, jj) = v;
    cfg.table.at(jj, i) = v;
  }

  const auto& fibers = require_key(j, "fibers", "config '" + id + "'");
  if (!fibers.is_array() || fibers.empty())
    throw ConfigError("config '" + id + "': 'fibers' must be a nonempty array");
  for (std::size_t k = 0; k < fibers.size(); ++k) {
    const std::string where = "config '" + id + "' fibers[" + std::to_string(k) + "]";
    const auto& f = fibers[k];
    Fiber fib;
    fib.type = require_str(require_key(f, "type", where), where + ".type");
    if (fib.type != "I1" && fib.type != "I3" && fib.type != "I9" && fib.type != "multiple")
      throw ConfigError(where + ": unknown fiber type '" + fib.type + "'");
    const auto& comps = require_key(f, "components", where);
    if (!comps.is_array()) throw ConfigError(where + ".components: expected an array");
    for (const auto& c : comps) {
      const std::string name = require_str(c, where + ".components[]");
      if (!cfg.has_curve(name)) throw ConfigError(where + ": unknown component '" + name + "'");
      fib.components.push_back(name);
    }
    fib.multiplicity = require_int(require_key(f, "multiplicity", where), where + ".multiplicity");
    if (fib.multiplicity < 1) throw ConfigError(where + ": multiplicity must be >= 1");
    cfg.fibers.push_back(std::move(fib));
  }

  const auto& canonical = require_key(j, "canonical", "config '" + id + "'");
  if (!canonical.is_array())
    throw ConfigError("config '" + id + "': 'canonical' must be an array");
  for (std::size_t k = 0; k < canonical.size(); ++k) {
    const std::string where = "config '" + id + "' canonical[" + std::to_string(k) + "]";
    const auto& e = canonical[k];
    if (!e.is_array() || e.size() != 2) throw ConfigError(where + ": expected [name, value]");
    const std::string name = require_str(e[0], where + "[0]");
    if (!cfg.has_curve(name)) throw ConfigError(where + ": unknown curve '" + name + "'");
    for (const auto& [existing, v] : cfg.canonical)
      if (existing == name) throw ConfigError(where + ": curve '" + name + "' listed twice");
    cfg.canonical.emplace_back(name, require_int(e[1], where + "[1]"));
  }
  for (const auto& c : cfg.curves)
    if (std::none_of(cfg.canonical.begin(), cfg.canonical.end(),
                     [&](const auto& p) { return p.first == c.name; }))
      throw ConfigError("config '" + id + "': canonical pairing missing for curve '" + c.name +
                        "'");

  if (j.contains("case_params")) {
    const auto& p = j.at("case_params");
    const std::string where = "config '" + id + "' case_params";
    CaseParams cp;
    cp.alpha = require_int(require_key(p, "alpha", where), where + ".alpha");
    cp.beta = require_int(require_key(p, "beta", where), where + ".beta");
    cp.gamma = require_int(require_key(p, "gamma", where), where + ".gamma");
    cfg.case_params = cp;
  }
  return cfg;
}

inline nlohmann::json config_to_json(const SurfaceConfig& cfg) {
  nlohmann::json j;
  j["curves"] = nlohmann::json::array();
  for (const auto& c : cfg.curves)
    j["curves"].push_back({{"name", c.name},
                           {"self_intersection", c.self_intersection},
                           {"role", role_name(c.role)}});
  j["intersections"] = nlohmann::json::array();
  for (std::size_t i = 0; i < cfg.curves.size(); ++i)
    for (std::size_t k = i + 1; k < cfg.curves.size(); ++k)
      if (cfg.table.at(i, k) != 0)
        j["intersections"].push_back({cfg.curves[i].name, cfg.curves[k].name,
                                      static_cast<long long>(cfg.table.at(i, k))});
  j["fibers"] = nlohmann::json::array();
  for (const auto& f : cfg.fibers)
    j["fibers"].push_back(
        {{"type", f.type}, {"components", f.components}, {"multiplicity", f.multiplicity}});
  j["canonical"] = nlohmann::json::array();
  for (const auto& [name, v] : cfg.canonical) j["canonical"].push_back({name, v});
  if (cfg.case_params)
    j["case_params"] = {{"alpha", cfg.case_params->alpha},
                        {"beta", cfg.case_params->beta},
                        {"gamma", cfg.case_params->gamma}};
  return j;
}

inline SurfaceConfig load_config_file(const std::string& path, const std::string& id) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return config_from_json(j, id);
}

inline void save_config_file(const SurfaceConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << config_to_json(cfg).dump(2) << "\n";
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace fpp
