#pragma once

// JSON interchange forms for every public value type (nlohmann/json).

#include <string>

#include "json.hpp"
#include "rspin/moduli.hpp"
#include "rspin/orbits.hpp"
#include "rspin/presentation.hpp"
#include "rspin/roots.hpp"
#include "rspin/seifert.hpp"
#include "rspin/twist.hpp"

namespace rspin {

using json = nlohmann::json;

// {"genus": g, "cone_points": [a, ...]}
inline void to_json(json& j, const signature& sig) {
  j = json{{"genus", sig.genus}, {"cone_points", sig.cone_points}};
}
inline void from_json(const json& j, signature& sig) {
  sig = signature(j.at("genus").get<int>(), j.value("cone_points", std::vector<std::int64_t>{}));
}

inline void to_json(json& j, const rational& q) { j = q.str(); }
inline void from_json(const json& j, rational& q) {
  q = j.is_number_integer() ? rational(j.get<std::int64_t>()) : rational::parse(j.get<std::string>());
}

// {"genus": g, "b": b, "pairs": [[alpha, beta], ...]}
inline void to_json(json& j, const seifert_invariants& inv) {
  json pairs = json::array();
  for (const auto& f : inv.fibres) pairs.push_back({f.alpha, f.beta});
  j = json{{"genus", inv.genus}, {"b", inv.b}, {"pairs", pairs}};
}
inline void from_json(const json& j, seifert_invariants& inv) {
  inv.genus = j.at("genus").get<int>();
  inv.b = j.at("b").get<std::int64_t>();
  inv.fibres.clear();
  for (const auto& p : j.value("pairs", json::array())) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("each pair must be [alpha, beta]");
    inv.fibres.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
  }
}

// {"signature": ..., "r": r, "b": b, "pairs": [[a, b], ...], "k": [...], "euler_number": "p/q"}
inline void to_json(json& j, const root_context& ctx) {
  json pairs = json::array();
  for (const auto& f : ctx.invariants.fibres) pairs.push_back({f.alpha, f.beta});
  j = json{{"signature", ctx.sig},       {"r", ctx.order}, {"b", ctx.invariants.b},
           {"pairs", pairs},             {"k", ctx.k},     {"euler_number", ctx.euler_number}};
}
inline void from_json(const json& j, root_context& ctx) {
  ctx.sig = j.at("signature").get<signature>();
  ctx.order = j.at("r").get<std::int64_t>();
  ctx.invariants.genus = ctx.sig.genus;
  ctx.invariants.b = j.at("b").get<std::int64_t>();
  ctx.invariants.fibres.clear();
  for (const auto& p : j.at("pairs")) ctx.invariants.fibres.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
  ctx.k = j.at("k").get<std::vector<std::int64_t>>();
  ctx.euler_number = j.at("euler_number").get<rational>();
}

// {"r": r, "coords": [s1, t1, ...]}
inline void to_json(json& j, const root_tuple& root) {
  j = json{{"r", root.order()}, {"coords", std::vector<std::int64_t>(root.coords().begin(), root.coords().end())}};
}
inline void from_json(const json& j, root_tuple& root) {
  root = root_tuple(j.at("r").get<std::int64_t>(), j.at("coords").get<std::vector<std::int64_t>>());
}

// {"family": "U"|"V"|"W", "index": i, "power": p}
inline void to_json(json& j, const twist_generator& gen) {
  j = json{{"family", std::string(1, to_char(gen.family))}, {"index", gen.index}, {"power", gen.power}};
}
inline void from_json(const json& j, twist_generator& gen) {
  const auto fam = j.at("family").get<std::string>();
  if (fam == "U")
    gen.family = twist_family::U;
  else if (fam == "V")
    gen.family = twist_family::V;
  else if (fam == "W")
    gen.family = twist_family::W;
  else
    throw std::invalid_argument("unknown twist family '" + fam + "'");
  gen.index = j.at("index").get<int>();
  gen.power = j.value("power", std::int64_t{1});
}

// {"kind": "genus0"|"genus1"|"all_zero"|"last_one", "d": d}
inline void to_json(json& j, const standard_form& f) {
  j = json{{"kind", to_string(f.type)}};
  if (f.type == standard_form::kind::genus_one) j["d"] = f.d;
}

/// Labels do not carry (r, g) on the wire; callers supply them.
inline standard_form standard_form_from_json(const json& j, std::int64_t order, int genus) {
  standard_form f;
  f.order = order;
  f.genus = genus;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "genus0") {
    f.type = standard_form::kind::genus_zero;
  } else if (kind == "genus1") {
    f.type = standard_form::kind::genus_one;
    f.d = j.at("d").get<std::int64_t>();
  } else if (kind == "all_zero") {
    f.type = standard_form::kind::all_zero;
  } else if (kind == "last_one") {
    f.type = standard_form::kind::last_one;
  } else {
    throw std::invalid_argument("unknown standard form kind '" + kind + "'");
  }
  return f;
}

// {"r": r, "g": g, "orbits": [{"rep": [...], "size": n, "label": {...}}, ...]}
inline void to_json(json& j, const orbit_partition& p) {
  json orbits = json::array();
  for (const auto& o : p.orbits)
    orbits.push_back({{"rep", std::vector<std::int64_t>(o.representative.coords().begin(), o.representative.coords().end())},
                      {"size", o.size},
                      {"label", o.label}});
  j = json{{"r", p.order}, {"g", p.genus}, {"orbits", orbits}};
}
inline void from_json(const json& j, orbit_partition& p) {
  p.order = j.at("r").get<std::int64_t>();
  p.genus = j.at("g").get<int>();
  p.orbits.clear();
  for (const auto& o : j.at("orbits")) {
    orbit_entry e;
    e.representative = root_tuple(p.order, o.at("rep").get<std::vector<std::int64_t>>());
    e.size = o.at("size").get<std::uint64_t>();
    e.label = standard_form_from_json(o.at("label"), p.order, p.genus);
    p.orbits.push_back(std::move(e));
  }
}

inline void to_json(json& j, const moduli_report& rep) {
  json comps = json::array();
  for (const auto& c : rep.components) comps.push_back({{"label", c.label}, {"sheets", c.sheets}});
  j = json{{"context", rep.context},
           {"components", comps},
           {"total_sheets", rep.total_sheets()},
           {"base_note", rep.base_note},
           {"verified", rep.verified}};
}
inline void from_json(const json& j, moduli_report& rep) {
  rep.context = j.at("context").get<root_context>();
  rep.components.clear();
  for (const auto& c : j.at("components"))
    rep.components.push_back(
        {standard_form_from_json(c.at("label"), rep.context.order, rep.context.genus()), c.at("sheets").get<std::uint64_t>()});
  rep.base_note = j.value("base_note", std::string(moduli_base_note));
  rep.verified = j.value("verified", false);
}

inline json syllable_json(const presentation& p, const syllable& s) {
  if (s.type == syllable::kind::commutator)
    return json{{"commutator", {p.generators[s.gen].name(), p.generators[s.second].name()}}};
  return json{{"gen", p.generators[s.gen].name()}, {"exp", s.exponent}};
}

inline void to_json(json& j, const presentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators)
    gens.push_back({{"name", g.name()}, {"family", std::string(1, g.family)}, {"index", g.index}, {"shift", g.shift}});
  json rels = json::array();
  for (const auto& rel : p.relations) {
    if (rel.central) {
      rels.push_back({{"central", p.generators[rel.central_generator].name()}});
      continue;
    }
    json lhs = json::array(), rhs = json::array();
    for (const auto& s : rel.lhs) lhs.push_back(syllable_json(p, s));
    for (const auto& s : rel.rhs) rhs.push_back(syllable_json(p, s));
    rels.push_back({{"lhs", lhs}, {"rhs", rhs}});
  }
  j = json{{"group", to_string(p.kind)}, {"generators", gens}, {"relations", rels}};
}

}  // namespace rspin
