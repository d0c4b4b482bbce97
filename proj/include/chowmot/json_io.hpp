#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "char_classes.hpp"
#include "correspondence.hpp"
#include "cycle.hpp"
#include "errors.hpp"
#include "k_shadow.hpp"
#include "motive.hpp"
#include "orbit.hpp"
#include "rational.hpp"
#include "variety.hpp"

namespace chowmot::json {

using nlohmann::json;

// ---- writers --------------------------------------------------------------

inline json to_json(const Variety& v) { return {{"factors", v.factors()}}; }

/// Terms are emitted in lexicographic order of exponents (the map's order).
inline json to_json(const Cycle& c) {
  json terms = json::array();
  for (const auto& [e, coeff] : c.terms()) terms.push_back({{"exps", e}, {"coeff", coeff.str()}});
  return {{"variety", to_json(c.variety())}, {"terms", std::move(terms)}};
}

inline json to_json(const GradedCorrespondence& c) {
  return {{"source", to_json(c.source())}, {"target", to_json(c.target())}, {"cycle", to_json(c.cycle())}};
}

inline json to_json(const BundleClass& e) {
  json j = {{"variety", to_json(e.variety())}, {"rank", e.rank()}, {"total_chern", to_json(e.total_chern())}};
  if (e.is_virtual()) j["virtual"] = true;
  return j;
}

inline json to_json(const KClass& k) { return {{"variety", to_json(k.variety())}, {"ch", to_json(k.ch())}}; }

inline json to_json(const KKernel& k) {
  return {{"source", to_json(k.source())}, {"target", to_json(k.target())}, {"ch", to_json(k.ch())}};
}

inline json to_json(const Motive& m) {
  return {{"variety", to_json(m.variety())}, {"twist", m.twist()}, {"idempotent", to_json(m.idempotent())}};
}

inline json to_json(const MotiveMorphism& f) {
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"corr", to_json(f.corr())}};
}

inline json to_json(const OrbitMorphism& f) {
  json comps = json::object();
  for (const auto& [i, c] : f.components()) comps[std::to_string(i)] = to_json(c);
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", std::move(comps)}};
}

// ---- readers --------------------------------------------------------------

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw parse_error("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

inline const json& field(const json& j, const std::string& where, const char* key) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

inline long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

inline int small_int(const json& j, const std::string& where) {
  const long long v = integer(j, where);
  if (v < -1000000 || v > 1000000) fail(where, "integer out of range");
  return static_cast<int>(v);
}

inline std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(small_int(j[i], where + "/" + std::to_string(i)));
  return out;
}

}  // namespace detail

inline Variety variety_from_json(const json& j, const std::string& where = "") {
  const std::vector<int> f = detail::int_list(detail::field(j, where, "factors"), where + "/factors");
  try {
    return Variety(f);
  } catch (const invalid_input& e) {
    detail::fail(where + "/factors", e.what());
  }
}

/// Rejects duplicate exponent vectors, out-of-range exponents and zero coefficients
/// are dropped as the canonical form requires.
inline Cycle cycle_from_json(const json& j, const std::string& where = "") {
  const Variety v = variety_from_json(detail::field(j, where, "variety"), where + "/variety");
  const json& terms = detail::field(j, where, "terms");
  if (!terms.is_array()) detail::fail(where + "/terms", "expected an array");
  Cycle c = Cycle::zero(v);
  std::map<Exponents, bool> seen;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + "/terms/" + std::to_string(i);
    const Exponents e = detail::int_list(detail::field(terms[i], at, "exps"), at + "/exps");
    if (e.size() != v.num_factors()) {
      detail::fail(at + "/exps", "expected " + std::to_string(v.num_factors()) + " exponents");
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 0 || e[k] > v.factor(k)) {
        detail::fail(at + "/exps/" + std::to_string(k), "exponent outside [0, " + std::to_string(v.factor(k)) + "]");
      }
    }
    if (!seen.emplace(e, true).second) detail::fail(at + "/exps", "duplicate exponent vector");
    const json& cj = detail::field(terms[i], at, "coeff");
    Rational coeff;
    if (cj.is_string()) {
      try {
        coeff = Rational::parse(cj.get<std::string>());
      } catch (const error& err) {
        detail::fail(at + "/coeff", err.what());
      }
    } else if (cj.is_number_integer()) {
      coeff = Rational(static_cast<long>(cj.get<long long>()));
    } else {
      detail::fail(at + "/coeff", "expected a rational string \"p/q\" or an integer");
    }
    c.add_term(e, coeff);
  }
  return c;
}

inline GradedCorrespondence correspondence_from_json(const json& j, const std::string& where = "") {
  const Variety x = variety_from_json(detail::field(j, where, "source"), where + "/source");
  const Variety y = variety_from_json(detail::field(j, where, "target"), where + "/target");
  Cycle c = cycle_from_json(detail::field(j, where, "cycle"), where + "/cycle");
  return {x, y, std::move(c)};
}

inline BundleClass bundle_from_json(const json& j, const std::string& where = "") {
  const Variety v = variety_from_json(detail::field(j, where, "variety"), where + "/variety");
  const long rank = static_cast<long>(detail::integer(detail::field(j, where, "rank"), where + "/rank"));
  Cycle c = cycle_from_json(detail::field(j, where, "total_chern"), where + "/total_chern");
  bool virt = false;
  if (j.contains("virtual")) {
    if (!j["virtual"].is_boolean()) detail::fail(where + "/virtual", "expected a boolean");
    virt = j["virtual"].get<bool>();
  }
  return {v, rank, std::move(c), virt};
}

inline KClass kclass_from_json(const json& j, const std::string& where = "") {
  const Variety v = variety_from_json(detail::field(j, where, "variety"), where + "/variety");
  Cycle c = cycle_from_json(detail::field(j, where, "ch"), where + "/ch");
  if (c.variety() != v) detail::fail(where + "/ch", "ch lives on " + c.variety().name() + ", expected " + v.name());
  return KClass(std::move(c));
}

inline KKernel kernel_from_json(const json& j, const std::string& where = "") {
  const Variety x = variety_from_json(detail::field(j, where, "source"), where + "/source");
  const Variety y = variety_from_json(detail::field(j, where, "target"), where + "/target");
  Cycle c = cycle_from_json(detail::field(j, where, "ch"), where + "/ch");
  return {x, y, KClass(std::move(c))};
}

inline Motive motive_from_json(const json& j, const std::string& where = "") {
  const Variety v = variety_from_json(detail::field(j, where, "variety"), where + "/variety");
  const int r = detail::small_int(detail::field(j, where, "twist"), where + "/twist");
  Cycle a = cycle_from_json(detail::field(j, where, "idempotent"), where + "/idempotent");
  return {v, r, std::move(a)};
}

inline MotiveMorphism motive_morphism_from_json(const json& j, const std::string& where = "") {
  Motive m = motive_from_json(detail::field(j, where, "source"), where + "/source");
  Motive n = motive_from_json(detail::field(j, where, "target"), where + "/target");
  GradedCorrespondence c = correspondence_from_json(detail::field(j, where, "corr"), where + "/corr");
  return {std::move(m), std::move(n), std::move(c)};
}

inline OrbitMorphism orbit_from_json(const json& j, const std::string& where = "") {
  Motive m = motive_from_json(detail::field(j, where, "source"), where + "/source");
  Motive n = motive_from_json(detail::field(j, where, "target"), where + "/target");
  const json& comps = detail::field(j, where, "components");
  if (!comps.is_object()) detail::fail(where + "/components", "expected an object keyed by integer index");
  OrbitMorphism::ComponentMap map;
  for (const auto& [key, val] : comps.items()) {
    const std::string at = where + "/components/" + key;
    std::size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size()) detail::fail(at, "component key is not an integer");
    if (map.count(idx) != 0) detail::fail(at, "duplicate component index");
    map.emplace(idx, correspondence_from_json(val, at));
  }
  return {std::move(m), std::move(n), std::move(map)};
}

/// Parses text, reporting the byte offset of syntax errors.
inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace chowmot::json
