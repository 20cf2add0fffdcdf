#pragma once

/// @file json_io.hpp
/// @brief JSON and text forms for root systems, group elements and classes.
///
/// nlohmann::json objects keep keys sorted, so every dump is byte-stable.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qseidel/nilhecke.hpp"
#include "qseidel/qh.hpp"

namespace qseidel {

using Json = nlohmann::json;

inline Json to_json(const IVec& v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

inline Json to_json(const RootSystem& rs) {
  Json cartan = Json::array();
  for (int i = 0; i < rs.rank(); ++i) cartan.push_back(to_json(rs.cartan().row(i)));
  Json roots = Json::array();
  for (const auto& a : rs.positive_roots()) roots.push_back(to_json(a));
  std::vector<int> f;
  for (int i = 1; i <= rs.rank(); ++i) f.push_back(rs.involution(i));
  return {{"type", rs.name()},
          {"rank", rs.rank()},
          {"cartan", cartan},
          {"positive_roots", roots},
          {"highest_root", to_json(rs.highest_root())},
          {"minuscule", rs.minuscule_nodes()},
          {"involution", f}};
}

inline Json to_json(const WeylElt& w) { return Json(w.reduced_word()); }

inline Json to_json(const ExtAffElt& x) {
  return {{"w", x.finite_part().reduced_word()}, {"lambda", to_json(x.translation_part())}};
}

inline ExtAffElt ext_aff_from_json(const RootSystemPtr& rs, const Json& j) {
  if (!j.is_object() || !j.contains("w") || !j.contains("lambda"))
    throw Error("affine element JSON needs keys \"w\" and \"lambda\"");
  auto word = j.at("w").get<std::vector<int>>();
  for (int i : word) rs->check_node(i);
  auto lam = j.at("lambda").get<std::vector<std::int64_t>>();
  return {WeylElt::from_word(rs, word), IVec(lam.begin(), lam.end())};
}

/// Polynomial as an exponent map {"e1,...,en": coeff}.
inline Json to_json(const SPoly& p) {
  Json out = Json::object();
  for (const auto& [m, c] : p.terms()) {
    std::string key;
    for (std::size_t k = 0; k < m.size(); ++k) key += (k ? "," : "") + std::to_string(m[k]);
    out[key] = c;
  }
  return out;
}

inline SPoly spoly_from_json(const Json& j, int nvars) {
  SPoly p(nvars);
  if (j.is_number_integer()) return SPoly::constant(nvars, j.get<std::int64_t>());
  if (!j.is_object()) throw Error("coefficient must be an integer or an exponent map");
  for (const auto& [key, val] : j.items()) {
    IVec m;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        m.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw Error("bad exponent key \"" + key + "\"");
      }
    }
    if (static_cast<int>(m.size()) != nvars) throw Error("exponent key \"" + key + "\" has wrong length");
    for (auto e : m)
      if (e < 0) throw Error("negative exponent in key \"" + key + "\"");
    p.add_term(m, val.get<std::int64_t>());
  }
  return p;
}

inline Json to_json(const QHClass& c) {
  const auto& rs = c.root_system();
  Json terms = Json::array();
  for (const auto& [k, coeff] : c.terms())
    terms.push_back({{"w", k.w.reduced_word()}, {"q", to_json(k.q)}, {"coeff", to_json(coeff)}});
  return {{"type", rs->name()}, {"parabolic", c.parabolic().nodes()}, {"terms", terms}};
}

/// Reads a class; "type" and "parabolic" in the JSON must match the context when given.
inline QHClass qh_class_from_json(const RootSystemPtr& rs, const ParabolicSet& P, const Json& j) {
  if (j.contains("type") && j.at("type").get<std::string>() != rs->name())
    throw Error("class type " + j.at("type").get<std::string>() + " does not match " + rs->name());
  if (j.contains("parabolic") && ParabolicSet(*rs, j.at("parabolic").get<std::vector<int>>()) != P)
    throw Error("class parabolic set does not match");
  QHClass c(rs, P);
  for (const auto& t : j.at("terms")) {
    WeylElt w = WeylElt::from_word(rs, t.at("w").get<std::vector<int>>());
    IVec q(P.nodes().size(), 0);
    if (t.contains("q")) {
      auto qv = t.at("q").get<std::vector<std::int64_t>>();
      q.assign(qv.begin(), qv.end());
    }
    SPoly coeff = t.contains("coeff") ? spoly_from_json(t.at("coeff"), rs->rank()) : SPoly::constant(rs->rank(), 1);
    c.add(w, q, coeff);
  }
  return c;
}

inline Json to_json(const NilHecke& nh, const NilHeckeElt& a) {
  Json out = Json::array();
  for (const auto& [k, c] : a.terms()) {
    Json tau = k.tau.is_identity() ? Json(nullptr) : Json(k.tau.node);
    out.push_back({{"tau", tau}, {"x", nh.affine().reduced_word(k.x)}, {"coeff", to_json(c)}});
  }
  return out;
}

// -- text forms --------------------------------------------------------------

inline std::string sigma_string(const WeylElt& w) {
  return "sigma(" + (w.is_identity() ? std::string("e") : word_string(w.reduced_word())) + ")";
}

/// "q1^a q2^b" over the nodes of I_P; empty for the zero exponent.
inline std::string q_string(const IVec& q, const ParabolicSet& P) {
  std::string s;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] == 0) continue;
    if (!s.empty()) s += " ";
    s += "q" + std::to_string(P.nodes()[k]);
    if (q[k] != 1) s += "^" + std::to_string(q[k]);
  }
  return s;
}

inline std::string to_text(const QHClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [k, coeff] : c.terms()) {
    std::string term;
    const bool is_const = coeff.terms().size() == 1 && coeff.constant_term() != 0;
    if (is_const) {
      auto v = coeff.constant_term();
      if (v == -1)
        term = "-";
      else if (v != 1)
        term = std::to_string(v) + " ";
    } else {
      term = "(" + coeff.to_string() + ") ";
    }
    std::string q = q_string(k.q, c.parabolic());
    if (!q.empty()) term += q + " ";
    term += sigma_string(k.w);
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

inline std::string to_text(const ExtAffElt& x) {
  const auto word = x.finite_part().reduced_word();
  return (word.empty() ? std::string("e") : word_string(word)) + " t" + to_string(x.translation_part());
}

}  // namespace qseidel
