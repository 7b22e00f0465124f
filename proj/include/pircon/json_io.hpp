#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pircon/coxeter.hpp"
#include "pircon/error.hpp"
#include "pircon/klpoly.hpp"
#include "pircon/matching.hpp"
#include "pircon/poly.hpp"
#include "pircon/poset.hpp"

namespace pircon {

using Json = nlohmann::ordered_json;

// ----- polynomials: ascending coefficient arrays, zero = [] -----

inline Json poly_to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i));
  return a;
}

inline IntPolynomial poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error("BadInput", "a polynomial must be an array of coefficients");
  std::vector<long long> c;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw Error("BadInput", "polynomial coefficients must be integers");
    c.push_back(v.get<long long>());
  }
  return IntPolynomial(std::move(c));
}

// ----- posets -----

inline Json poset_to_json(const GradedPoset& p) {
  Json j;
  j["elements"] = Json::array();
  for (int i = 0; i < p.size(); ++i) j["elements"].push_back(p.id(i));
  j["covers"] = Json::array();
  for (const auto& [a, b] : p.covers()) j["covers"].push_back(Json::array({p.id(a), p.id(b)}));
  return j;
}

inline GradedPoset::Ptr poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw Error("BadInput", "a poset needs 'elements' and 'covers'");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw Error("BadInput", "poset elements must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw Error("BadInput", "each cover must be a pair of element ids");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return GradedPoset::build(elements, covers);
}

// ----- matchings: non-fixed pairs listed once, lower index first -----

inline Json matching_to_json(const SpecialPartialMatching& M) {
  Json pairs = Json::object();
  for (int i = 0; i < M.base->size(); ++i)
    if (M(i) > i) pairs[M.base->id(i)] = M.base->id(M(i));
  return Json{{"map", pairs}};
}

inline std::map<std::string, std::string> pair_map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("map") || !j.at("map").is_object())
    throw Error("BadInput", "a matching needs a 'map' object of matched pairs");
  std::map<std::string, std::string> pairs;
  for (const auto& [k, v] : j.at("map").items()) {
    if (!v.is_string()) throw Error("BadInput", "matched pairs must map ids to ids");
    pairs[k] = v.get<std::string>();
  }
  return pairs;
}

inline SpecialPartialMatching matching_from_json(GradedPoset::Ptr base, const Json& j) {
  return spm_from_ids(std::move(base), pair_map_from_json(j));
}

// ----- refinements: element id -> matching of its ideal -----

inline Json refinement_to_json(const std::map<std::string, std::map<std::string, std::string>>& r) {
  Json j = Json::object();
  for (const auto& [top, pairs] : r) {
    Json m = Json::object();
    for (const auto& [a, b] : pairs) m[a] = b;
    j[top] = Json{{"map", m}};
  }
  return j;
}

inline std::map<std::string, std::map<std::string, std::string>> refinement_from_json(
    const Json& j) {
  if (!j.is_object()) throw Error("BadInput", "a refinement must map element ids to matchings");
  std::map<std::string, std::map<std::string, std::string>> r;
  for (const auto& [top, m] : j.items()) r[top] = pair_map_from_json(m);
  return r;
}

// ----- Coxeter groups -----

inline Json group_to_json(const CoxeterSystem& W) {
  switch (W.kind()) {
    case CoxeterSystem::Kind::Symmetric:
      return Json{{"type", "symmetric"}, {"n", W.symmetric_n()}};
    case CoxeterSystem::Kind::Dihedral:
      return Json{{"type", "dihedral"}, {"m", W.coxeter_m(0, 1)}};
    default: {
      Json gens = Json::array();
      for (int i = 0; i < W.num_generators(); ++i) gens.push_back(W.gen_name(i));
      Json labels = Json::object();
      for (int i = 0; i < W.num_generators(); ++i)
        for (int k = i + 1; k < W.num_generators(); ++k)
          if (W.coxeter_m(i, k) != 2)
            labels[W.gen_name(i) + "," + W.gen_name(k)] = W.coxeter_m(i, k);
      return Json{{"type", "matrix"}, {"generators", gens}, {"m", labels}};
    }
  }
}

inline CoxeterSystem group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw Error("BadInput", "a group spec needs a 'type'");
  std::string type = j.at("type").get<std::string>();
  if (type == "symmetric") {
    if (!j.contains("n")) throw Error("BadInput", "symmetric groups need 'n'");
    return CoxeterSystem::symmetric(j.at("n").get<int>());
  }
  if (type == "dihedral") {
    if (!j.contains("m")) throw Error("BadInput", "dihedral groups need 'm'");
    return CoxeterSystem::dihedral(j.at("m").get<int>());
  }
  if (type == "matrix") {
    if (!j.contains("generators") || !j.contains("m"))
      throw Error("BadInput", "matrix groups need 'generators' and 'm'");
    std::vector<std::string> names;
    for (const auto& g : j.at("generators")) names.push_back(g.get<std::string>());
    size_t n = names.size();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    auto gen_index = [&](const std::string& name) {
      for (size_t i = 0; i < n; ++i)
        if (names[i] == name) return static_cast<int>(i);
      throw Error("BadInput", "label names unknown generator '" + name + "'");
    };
    for (const auto& [key, val] : j.at("m").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw Error("BadInput", "label keys must look like 's,t', got '" + key + "'");
      int a = gen_index(key.substr(0, comma));
      int b = gen_index(key.substr(comma + 1));
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] = val.get<int>();
      m[static_cast<size_t>(b)][static_cast<size_t>(a)] = val.get<int>();
    }
    return CoxeterSystem::from_matrix(names, m);
  }
  throw Error("BadInput", "unknown group type '" + type + "'");
}

/// An element given either as a word "s1-s2" or, for the symmetric
/// backend, as a one-line permutation [3,4,1,2].
inline CoxWord element_from_json(const CoxeterSystem& W, const Json& j) {
  if (j.is_string()) return W.parse(j.get<std::string>());
  if (j.is_array()) {
    Perm p;
    for (const auto& v : j) {
      if (!v.is_number_integer())
        throw Error("BadInput", "permutation entries must be integers");
      p.push_back(v.get<int>() - 1);
    }
    int n = W.symmetric_n();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    if (static_cast<int>(p.size()) != n)
      throw Error("BadInput", "permutation length must match the group");
    for (int v : p) {
      if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
        throw Error("BadInput", "not a permutation of 1.." + std::to_string(n));
      seen[static_cast<size_t>(v)] = 1;
    }
    return W.word_of_perm(p);
  }
  throw Error("BadInput", "an element must be a word string or a permutation array");
}

// ----- polynomial tables -----

inline Json table_to_json(const RTable& t) {
  Json j;
  j["x"] = x_name(t.x);
  j["poset"] = poset_to_json(*t.base);
  Json entries = Json::array();
  for (int u = 0; u < t.base->size(); ++u)
    for (int w = 0; w < t.base->size(); ++w) {
      if (!t.base->leq(u, w)) continue;
      entries.push_back(
          Json{{"u", t.base->id(u)}, {"w", t.base->id(w)}, {"poly", poly_to_json(t.at(u, w))}});
    }
  j["entries"] = entries;
  return j;
}

inline RTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("poset") || !j.contains("entries"))
    throw Error("BadInput", "a table needs 'x', 'poset' and 'entries'");
  RTable t;
  t.x = parse_x(j.at("x").get<std::string>());
  t.base = poset_from_json(j.at("poset"));
  size_t n = static_cast<size_t>(t.base->size());
  t.entries.assign(n, std::vector<IntPolynomial>(n));
  for (const auto& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("u") || !e.contains("w") || !e.contains("poly"))
      throw Error("BadInput", "each table entry needs 'u', 'w' and 'poly'");
    int u = t.base->index(e.at("u").get<std::string>());
    int w = t.base->index(e.at("w").get<std::string>());
    if (!t.base->leq(u, w))
      throw Error("NotComparable", "table entry at ('" + t.base->id(u) + "', '" +
                                       t.base->id(w) + "') relates incomparable elements");
    t.entries[static_cast<size_t>(u)][static_cast<size_t>(w)] = poly_from_json(e.at("poly"));
  }
  return t;
}

}  // namespace pircon
