// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace qwalk {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys = {
    "dimensionality", "steps",  "halfwidth", "coin",          "defect",
    "phi",            "phases", "origin",    "initial_coin",  "boundary",
    "out",            "formats", "per_step", "phi_grid",      "sweep_defects",
    "threads",        "max_steps", "reference"};

const std::set<std::string> kDefectKinds = {"none", "line_y", "cross_xy", "point",
                                            "custom"};

int get_int(const json& doc, const std::string& key, int fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  return v.get<int>();
}

std::string get_string(const json& doc, const std::string& key, const std::string& fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

Complex parse_complex(const json& v, const std::string& key) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(key, "expected a number or [re, im] pair");
}

double angle_field(const json& obj, const std::string& field, const std::string& key) {
  if (!obj.contains(field)) return 0.0;
  return parse_angle(obj.at(field), key + "." + field);
}

Coin2 parse_coin2(const json& v, const std::string& key) {
  try {
    if (v.is_string()) {
      const auto name = v.get<std::string>();
      if (name == "hadamard") return hadamard();
      if (name == "identity") return Coin2::identity();
      if (name == "x") return Coin2::pauli_x();
      if (name == "z") return Coin2::pauli_z();
      throw ConfigError(key, "unknown coin '" + name + "'");
    }
    if (v.is_object() && v.value("type", "") == "su2") {
      return su2_from_angles(angle_field(v, "theta", key), angle_field(v, "psi", key),
                             angle_field(v, "phi", key));
    }
    if (v.is_object() && v.contains("matrix")) {
      const json& m = v.at("matrix");
      if (!m.is_array() || m.size() != 2) throw ConfigError(key, "matrix must be 2x2");
      Matrix2 out;
      for (int r = 0; r < 2; ++r) {
        if (!m[r].is_array() || m[r].size() != 2) throw ConfigError(key, "matrix must be 2x2");
        for (int c = 0; c < 2; ++c) out(r, c) = parse_complex(m[r][c], key);
      }
      return Coin2::from_matrix(out);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(key, e.what());
  }
  throw ConfigError(key, "expected a coin name or object");
}

Coin4 parse_coin4(const json& v, const std::string& key) {
  try {
    if (v.is_string()) {
      const auto name = v.get<std::string>();
      if (name == "hadamard") return tensor(hadamard(), hadamard());
      if (name == "identity") return Coin4::identity();
      if (name == "swap") return Coin4::swap();
      throw ConfigError(key, "unknown coin '" + name + "'");
    }
    if (!v.is_object()) throw ConfigError(key, "expected a coin name or object");
    const std::string type = v.value("type", "");
    if (type == "tensor") {
      if (!v.contains("a") || !v.contains("b")) {
        throw ConfigError(key, "tensor coin needs 'a' and 'b'");
      }
      return tensor(parse_coin2(v.at("a"), key + ".a"), parse_coin2(v.at("b"), key + ".b"));
    }
    if (type == "fractional_swap") {
      return fractional_swap(v.contains("tau") ? parse_angle(v.at("tau"), key + ".tau") : 0.0);
    }
    if (type == "su4") {
      auto factor = [&](const char* name) {
        return v.contains(name) ? parse_coin2(v.at(name), key + "." + name) : Coin2::identity();
      };
      auto exponent = [&](const char* name) {
        if (!v.contains(name)) return 0.0;
        if (!v.at(name).is_number()) throw ConfigError(key + "." + name, "expected a number");
        return v.at(name).get<double>();
      };
      return su4_compose(factor("u1"), factor("u2"), factor("v1"), factor("v2"),
                         exponent("alpha"), exponent("beta"), exponent("gamma"));
    }
    throw ConfigError(key, "unknown coin type '" + type + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(key, e.what());
  }
}

CoinState parse_initial_coin(const json& doc, int dimensionality) {
  const std::string key = "initial_coin";
  if (!doc.contains(key)) {
    return dimensionality == 1 ? CoinState::symmetric() : CoinState::symmetric_pair();
  }
  const json& v = doc.at(key);
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (name == "symmetric") {
      return dimensionality == 1 ? CoinState::symmetric() : CoinState::symmetric_pair();
    }
    if (name == "zero") {
      std::vector<Complex> c(dimensionality == 1 ? 2 : 4, Complex{});
      c[0] = 1.0;
      return CoinState(std::move(c));
    }
    throw ConfigError(key, "unknown initial coin '" + name + "'");
  }
  if (!v.is_array()) throw ConfigError(key, "expected a name or list of amplitudes");
  std::vector<Complex> c;
  for (const json& a : v) c.push_back(parse_complex(a, key));
  try {
    return CoinState(std::move(c));
  } catch (const Error& e) {
    throw ConfigError(key, e.what());
  }
}

}  // namespace

double parse_angle(const json& value, const std::string& key) {
  double out = 0.0;
  if (value.is_number()) {
    out = value.get<double>();
  } else if (value.is_string()) {
    const auto text = value.get<std::string>();
    const std::string prefix = "pi:";
    if (text.rfind(prefix, 0) != 0) {
      throw ConfigError(key, "angle string must look like 'pi:<multiple>', got '" + text + "'");
    }
    std::istringstream in(text.substr(prefix.size()));
    double k = 0.0;
    if (!(in >> k) || !in.eof()) {
      throw ConfigError(key, "cannot parse multiple of pi in '" + text + "'");
    }
    out = k * std::numbers::pi;
  } else {
    throw ConfigError(key, "expected a number or 'pi:<multiple>' string");
  }
  if (!std::isfinite(out)) throw ConfigError(key, "angle must be finite");
  return out;
}

DefectMap make_defect(const std::string& kind, double phi) {
  if (kind == "none") return DefectMap::none();
  if (kind == "line_y") return DefectMap::line_y(phi);
  if (kind == "cross_xy") return DefectMap::cross_xy(phi);
  if (kind == "point") return DefectMap::point(phi);
  throw ConfigError("defect", "unknown or table-only defect '" + kind + "'");
}

unsigned threads_from_environment() {
  const char* env = std::getenv("QWALK_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(n);
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kKnownKeys.count(key)) throw ConfigError(key, "unknown key");
  }

  RunConfig cfg;
  cfg.echo = doc;
  WalkSpec& walk = cfg.walk;

  walk.dimensionality = get_int(doc, "dimensionality", 2);
  if (walk.dimensionality != 1 && walk.dimensionality != 2) {
    throw ConfigError("dimensionality", "must be 1 or 2");
  }
  if (!doc.contains("steps")) throw ConfigError("steps", "missing required key");
  walk.steps = get_int(doc, "steps", 0);
  if (walk.steps < 0) throw ConfigError("steps", "must be nonnegative");
  cfg.max_steps = get_int(doc, "max_steps", kDefaultMaxSteps);
  if (walk.steps > cfg.max_steps) {
    throw ConfigError("steps", "exceeds max_steps (" + std::to_string(cfg.max_steps) + ")");
  }
  if (doc.contains("halfwidth")) {
    walk.halfwidth = get_int(doc, "halfwidth", 0);
    if (*walk.halfwidth < 1) throw ConfigError("halfwidth", "must be >= 1");
  }

  const json coin = doc.contains("coin") ? doc.at("coin") : json("hadamard");
  if (walk.dimensionality == 1) {
    walk.coin = CoinField1D(parse_coin2(coin, "coin"));
  } else {
    walk.coin = CoinField2D(parse_coin4(coin, "coin"));
  }

  cfg.defect_kind = get_string(doc, "defect", "none");
  if (!kDefectKinds.count(cfg.defect_kind)) {
    throw ConfigError("defect", "unknown defect '" + cfg.defect_kind + "'");
  }
  cfg.phi = doc.contains("phi") ? parse_angle(doc.at("phi"), "phi") : 0.0;
  try {
    if (cfg.defect_kind == "custom") {
      if (!doc.contains("phases") || !doc.at("phases").is_array()) {
        throw ConfigError("phases", "custom defect needs a list of [x, y, angle]");
      }
      std::map<Position, double> table;
      for (const json& e : doc.at("phases")) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
          throw ConfigError("phases", "entries must be [x, y, angle]");
        }
        table[{e[0].get<int>(), e[1].get<int>()}] = parse_angle(e[2], "phases");
      }
      walk.defect = DefectMap::custom(std::move(table));
    } else {
      walk.defect = make_defect(cfg.defect_kind, cfg.phi);
    }
    walk.defect.check_dimensionality(walk.dimensionality);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("defect", e.what());
  }

  if (doc.contains("origin")) {
    const json& o = doc.at("origin");
    if (!o.is_array() || o.size() != static_cast<std::size_t>(walk.dimensionality)) {
      throw ConfigError("origin", "expected one integer per axis");
    }
    for (const json& v : o) {
      if (!v.is_number_integer()) throw ConfigError("origin", "expected integers");
    }
    walk.origin = {o[0].get<int>(), walk.dimensionality == 2 ? o[1].get<int>() : 0};
  }
  walk.initial_coin = parse_initial_coin(doc, walk.dimensionality);

  const std::string boundary = get_string(doc, "boundary", "open");
  if (boundary == "open") {
    walk.boundary = Boundary::Open;
  } else if (boundary == "periodic") {
    walk.boundary = Boundary::Periodic;
  } else {
    throw ConfigError("boundary", "must be 'open' or 'periodic'");
  }

  cfg.out_dir = get_string(doc, "out", "qwalk_out");
  if (doc.contains("formats")) {
    const json& f = doc.at("formats");
    if (!f.is_array()) throw ConfigError("formats", "expected a list");
    cfg.write_csv = cfg.write_json = false;
    for (const json& v : f) {
      const std::string name = v.is_string() ? v.get<std::string>() : "";
      if (name == "csv") {
        cfg.write_csv = true;
      } else if (name == "json") {
        cfg.write_json = true;
      } else {
        throw ConfigError("formats", "entries must be 'csv' or 'json'");
      }
    }
  }
  if (doc.contains("per_step")) {
    if (!doc.at("per_step").is_boolean()) throw ConfigError("per_step", "expected a boolean");
    cfg.per_step = doc.at("per_step").get<bool>();
  }
  if (doc.contains("phi_grid")) {
    const json& g = doc.at("phi_grid");
    if (!g.is_array()) throw ConfigError("phi_grid", "expected a list of angles");
    for (const json& v : g) cfg.phi_grid.push_back(parse_angle(v, "phi_grid"));
  }
  if (doc.contains("sweep_defects")) {
    const json& g = doc.at("sweep_defects");
    if (!g.is_array()) throw ConfigError("sweep_defects", "expected a list of defect names");
    for (const json& v : g) {
      const std::string name = v.is_string() ? v.get<std::string>() : "";
      if (!kDefectKinds.count(name) || name == "custom") {
        throw ConfigError("sweep_defects", "unsupported defect '" + name + "'");
      }
      cfg.sweep_defects.push_back(name);
    }
  }
  if (doc.contains("threads")) {
    const int t = get_int(doc, "threads", 1);
    if (t < 1) throw ConfigError("threads", "must be >= 1");
    cfg.threads = static_cast<unsigned>(t);
  } else {
    cfg.threads = threads_from_environment();
  }
  if (doc.contains("reference")) cfg.reference = get_string(doc, "reference", "");

  try {
    walk.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("<walk>", e.what());
  }
  return cfg;
}

json read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
  }
}

void apply_overrides(json& doc, const Overrides& o) {
  if (!doc.is_object()) doc = json::object();
  if (o.steps) doc["steps"] = *o.steps;
  if (o.phi) {
    // Bare numbers stay numeric so the echo keeps their type.
    try {
      std::size_t used = 0;
      const double v = std::stod(*o.phi, &used);
      doc["phi"] = used == o.phi->size() ? json(v) : json(*o.phi);
    } catch (const std::exception&) {
      doc["phi"] = *o.phi;
    }
  }
  if (o.defect) doc["defect"] = *o.defect;
  if (o.out) doc["out"] = *o.out;
  if (o.threads) doc["threads"] = *o.threads;
  if (o.reference) doc["reference"] = *o.reference;
  if (o.per_step) doc["per_step"] = true;
}

}  // namespace qwalk
