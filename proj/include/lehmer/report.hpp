#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lehmer/cyclo.hpp"
#include "lehmer/divisibility.hpp"
#include "lehmer/factor.hpp"
#include "lehmer/poly_io.hpp"
#include "lehmer/sequences.hpp"
#include "lehmer/verifier.hpp"

namespace lehmer {

using json = nlohmann::ordered_json;

inline json field_json(const FieldDesc& f) {
  json j;
  if (f.kind == FieldKind::Rationals) {
    j["type"] = "q";
  } else {
    j["type"] = "fp";
    j["p"] = f.p;
  }
  return j;
}

inline json form_json(const BivarForm& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
  return arr;
}

template <class Field>
json factorization_json(const Factorization<Field>& fac) {
  json j;
  j["unit"] = fac.unit.field().to_string(fac.unit.value());
  j["factors"] = json::array();
  for (const auto& [q, e] : fac.factors) j["factors"].push_back({{"factor", to_string(q)}, {"exp", e}});
  return j;
}

template <class Field>
json gen_json(const SeqParams<Field>& params, const std::vector<Poly<Field>>& terms) {
  json j;
  j["kind"] = std::string(kind_name(params.kind()));
  j["field"] = field_json(params.field().desc());
  j["params"] = {{"a", to_string(params.a())}, {"b", to_string(params.b())}};
  j["terms"] = json::array();
  for (const auto& t : terms) j["terms"].push_back(to_string(t));
  return j;
}

template <class Field>
json primitive_json(const PrimitiveReport<Field>& r) {
  json j;
  j["n"] = r.n;
  if (r.position)
    j["position"] = *r.position;
  else
    j["position"] = nullptr;
  j["term"] = to_string(r.term);
  j["primitive_part"] = to_string(r.primitive_part);
  j["has_primitive"] = r.has_primitive;
  j["matches_phi"] = r.matches_phi;
  j["excluded"] = r.excluded;
  if (r.primitive_primes) {
    j["primitive_primes"] = json::array();
    for (const auto& [q, e] : *r.primitive_primes)
      j["primitive_primes"].push_back({{"factor", to_string(q)}, {"exp", e}});
  }
  return j;
}

inline json config_json(const CampaignConfig& c) {
  json j;
  j["field"] = field_json(c.field);
  j["kinds"] = json::array();
  for (auto k : c.kinds) j["kinds"].push_back(std::string(kind_name(k)));
  j["max_param_degree"] = c.max_param_degree;
  j["enumeration"] = std::string(enumeration_name(c.enumeration));
  if (c.enumeration == Enumeration::Exhaustive) j["normalization"] = "first parameter monic";
  if (c.enumeration == Enumeration::Random) {
    j["count"] = c.count;
    j["coef_bound"] = c.coef_bound;
  }
  j["seed"] = c.seed;
  if (c.enumeration == Enumeration::Explicit) {
    j["params"] = json::array();
    for (const auto& [a, b] : c.explicit_params) j["params"].push_back(json::array({a, b}));
  }
  j["n_max"] = c.n_max;
  j["m_max"] = c.m_max;
  j["vu_n_max"] = c.vu_n_max;
  j["vu_m_max"] = c.vu_m_max;
  j["lemma_odd_max"] = c.lemma_odd_max;
  j["checks"] = json::array();
  for (auto ch : c.checks) j["checks"].push_back(std::string(check_name(ch)));
  j["include_excluded"] = c.include_excluded;
  j["stop_on_failure"] = c.stop_on_failure;
  j["threads"] = c.threads;
  j["time_limit_s"] = c.time_limit_s;
  return j;
}

inline json failure_json(const Failure& f) {
  json j;
  j["case_index"] = f.case_index;
  j["kind"] = std::string(kind_name(f.kind));
  j["field"] = field_json(f.field);
  j["params"] = {{"a", f.a}, {"b", f.b}};
  j["check"] = std::string(check_name(f.check));
  j["indices"] = f.indices;
  json polys = json::object();
  for (const auto& [name, text] : f.polys) polys[name] = text;
  j["polys"] = polys;
  j["detail"] = f.detail;
  j["witness_count"] = f.witness_count;
  return j;
}

inline json report_json(const VerifyReport& r) {
  json j;
  j["config"] = config_json(r.config);
  j["candidates"] = r.candidates;
  j["params_enumerated"] = r.params_enumerated;
  j["rejected"] = json::object();
  for (const auto& [name, n] : r.rejected) j["rejected"][name] = n;
  j["cases_run"] = r.cases_run;
  j["cases_passed"] = r.cases_passed;
  j["per_check"] = json::object();
  for (const auto& [c, t] : r.per_check) j["per_check"][std::string(check_name(c))] = {{"run", t.run}, {"passed", t.passed}};
  j["failures"] = json::array();
  for (const auto& f : r.failures) j["failures"].push_back(failure_json(f));
  j["truncated"] = r.truncated;
  if (r.truncated) j["truncation_reason"] = r.truncation_reason;
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

/// Plain-text table: one row per check plus totals and the first failures.
inline std::string summary_table(const VerifyReport& r, std::size_t max_failures = 10) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %10s %10s %10s\n", "check", "run", "passed", "failed");
  os << line;
  for (const auto& [c, t] : r.per_check) {
    std::snprintf(line, sizeof line, "%-20s %10zu %10zu %10zu\n", std::string(check_name(c)).c_str(), t.run,
                  t.passed, t.run - t.passed);
    os << line;
  }
  std::snprintf(line, sizeof line, "%-20s %10zu %10zu %10zu\n", "total", r.cases_run, r.cases_passed,
                r.failures.size());
  os << line;
  os << "parameter sets: " << r.params_enumerated << " of " << r.candidates << " candidates";
  for (const auto& [name, n] : r.rejected) os << ", " << name << " " << n;
  os << "\n";
  std::snprintf(line, sizeof line, "wall time: %.3f s\n", r.wall_time_s);
  os << line;
  if (r.truncated) os << "truncated: " << r.truncation_reason << "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
    const auto& f = r.failures[i];
    os << "FAIL " << check_name(f.check) << " " << kind_name(f.kind) << " a=" << f.a << " b=" << f.b << " at";
    for (auto k : f.indices) os << " " << k;
    os << " (" << f.witness_count << " witnesses): " << f.detail << "\n";
  }
  if (r.failures.size() > max_failures) os << "... " << r.failures.size() - max_failures << " more failures\n";
  return os.str();
}

namespace detail {

[[noreturn]] inline void config_error(const std::string& msg) { throw Error(Errc::ConfigInvalid, msg); }

inline std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline unsigned long long to_uint(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    if (!v.empty() && v[0] == '-') throw std::invalid_argument("negative");
    auto x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    config_error("bad value for " + key + ": " + v);
  }
}

inline bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  config_error("bad boolean for " + key + ": " + v);
}

inline void set_kinds(CampaignConfig& c, const std::vector<std::string>& names) {
  c.kinds.clear();
  for (const auto& s : names) {
    auto k = parse_kind(s);
    if (!k) config_error("unknown kind " + s);
    c.kinds.push_back(*k);
  }
}

inline void set_checks(CampaignConfig& c, const std::vector<std::string>& names) {
  c.checks.clear();
  for (const auto& s : names) {
    if (s == "all") {
      c.checks.assign(std::begin(kAllChecks), std::end(kAllChecks));
      continue;
    }
    auto k = parse_check(s);
    if (!k) config_error("unknown check " + s);
    c.checks.push_back(*k);
  }
}

inline void set_enumeration(CampaignConfig& c, const std::string& v) {
  if (v == "exhaustive")
    c.enumeration = Enumeration::Exhaustive;
  else if (v == "random")
    c.enumeration = Enumeration::Random;
  else if (v == "explicit")
    c.enumeration = Enumeration::Explicit;
  else
    config_error("unknown enumeration " + v);
}

inline void set_field(CampaignConfig& c, const std::string& v) {
  if (v == "q")
    c.field = FieldDesc::rationals();
  else if (v == "fp")
    c.field = FieldDesc::prime(c.field.p ? c.field.p : 2);
  else
    config_error("unknown field " + v);
}

/// Applies one key=value setting.
inline void apply_setting(CampaignConfig& c, const std::string& key, const std::string& v) {
  if (key == "field") {
    set_field(c, v);
  } else if (key == "p") {
    c.field = FieldDesc::prime(to_uint(key, v));
  } else if (key == "kinds" || key == "kind") {
    set_kinds(c, split_list(v, ','));
  } else if (key == "checks") {
    set_checks(c, split_list(v, ','));
  } else if (key == "enumeration") {
    set_enumeration(c, v);
  } else if (key == "max_param_degree") {
    c.max_param_degree = static_cast<unsigned>(to_uint(key, v));
  } else if (key == "count") {
    c.count = to_uint(key, v);
  } else if (key == "seed") {
    c.seed = to_uint(key, v);
  } else if (key == "coef_bound") {
    c.coef_bound = static_cast<long>(to_uint(key, v));
  } else if (key == "params") {
    // a1,b1;a2,b2
    c.explicit_params.clear();
    for (const auto& pair : split_list(v, ';')) {
      auto parts = split_list(pair, ',');
      if (parts.size() != 2) config_error("params entries need the form a,b");
      c.explicit_params.emplace_back(parts[0], parts[1]);
    }
  } else if (key == "n_max") {
    c.n_max = static_cast<unsigned>(to_uint(key, v));
  } else if (key == "m_max") {
    c.m_max = static_cast<unsigned>(to_uint(key, v));
  } else if (key == "vu_n_max") {
    c.vu_n_max = static_cast<unsigned>(to_uint(key, v));
  } else if (key == "vu_m_max") {
    c.vu_m_max = static_cast<unsigned>(to_uint(key, v));
  } else if (key == "lemma_odd_max") {
    c.lemma_odd_max = static_cast<unsigned>(to_uint(key, v));
  } else if (key == "include_excluded") {
    c.include_excluded = to_bool(key, v);
  } else if (key == "stop_on_failure") {
    c.stop_on_failure = to_bool(key, v);
  } else if (key == "threads") {
    c.threads = static_cast<unsigned>(to_uint(key, v));
  } else if (key == "time_limit_s") {
    try {
      c.time_limit_s = std::stod(v);
    } catch (const std::exception&) {
      config_error("bad value for time_limit_s: " + v);
    }
  } else {
    config_error("unknown key " + key);
  }
}

inline std::string json_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  config_error("expected a scalar, got " + v.dump());
}

}  // namespace detail

inline CampaignConfig parse_config_kv(const std::string& text) {
  CampaignConfig c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) detail::config_error("expected key=value: " + line);
    detail::apply_setting(c, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  c.validate();
  return c;
}

inline CampaignConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    detail::config_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) detail::config_error("config must be a JSON object");
  CampaignConfig c;
  // p before field so that "field":"fp" picks it up
  if (j.contains("p")) detail::apply_setting(c, "p", detail::json_scalar(j["p"]));
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    if (key == "p") continue;
    if (key == "field" && v.is_object()) {
      if (v.contains("p")) detail::apply_setting(c, "p", detail::json_scalar(v["p"]));
      detail::apply_setting(c, "field", detail::json_scalar(v.value("type", json("q"))));
    } else if ((key == "kinds" || key == "checks") && v.is_array()) {
      std::vector<std::string> names;
      for (const auto& x : v) names.push_back(detail::json_scalar(x));
      if (key == "kinds")
        detail::set_kinds(c, names);
      else
        detail::set_checks(c, names);
    } else if (key == "params" && v.is_array()) {
      c.explicit_params.clear();
      for (const auto& x : v) {
        if (!x.is_array() || x.size() != 2) detail::config_error("params entries must be [a, b]");
        c.explicit_params.emplace_back(detail::json_scalar(x[0]), detail::json_scalar(x[1]));
      }
    } else {
      detail::apply_setting(c, key, detail::json_scalar(v));
    }
  }
  c.validate();
  return c;
}

/// JSON when the first non-blank character is '{', key=value otherwise.
inline CampaignConfig parse_config(const std::string& text) {
  auto b = text.find_first_not_of(" \t\r\n");
  if (b != std::string::npos && text[b] == '{') return parse_config_json(text);
  return parse_config_kv(text);
}

inline CampaignConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::config_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace lehmer
