#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rspin/roots.hpp"
#include "rspin/seifert.hpp"

namespace rspin {

enum class group_kind {
  orbifold,  ///< pi^orb of the base orbifold
  tangent,   ///< pi_1 of the unit tangent bundle
  root,      ///< pi~ = ker delta, the fundamental group of the root
};

constexpr const char* to_string(group_kind kind) {
  switch (kind) {
    case group_kind::orbifold: return "orbifold";
    case group_kind::tangent: return "tangent";
    case group_kind::root: return "root";
  }
  return "?";
}

/// One generator, e.g. u~_1 = u_1 h^{-s_1}. `shift` is the h-exponent that
/// relates a root generator to the tangent-bundle one (0 elsewhere).
struct group_generator {
  char family = 'u';  ///< 'u', 'v', 'q' or 'h'
  int index = 0;      ///< 1-based; 0 for h
  bool lifted = false;
  std::int64_t shift = 0;

  std::string name() const {
    std::string out(1, family);
    if (lifted) out += "~";
    if (index > 0) out += std::to_string(index);
    return out;
  }
  friend bool operator==(const group_generator&, const group_generator&) = default;
};

/// Either gen^exponent or the commutator [gen, second].
struct syllable {
  enum class kind { power, commutator };
  kind type = kind::power;
  std::size_t gen = 0;
  std::size_t second = 0;
  std::int64_t exponent = 1;
  friend bool operator==(const syllable&, const syllable&) = default;
};

using group_word = std::vector<syllable>;

/// lhs = rhs, or "gen is central" when `central` is set.
struct group_relation {
  group_word lhs;
  group_word rhs;
  bool central = false;
  std::size_t central_generator = 0;
  friend bool operator==(const group_relation&, const group_relation&) = default;
};

struct presentation {
  group_kind kind = group_kind::root;
  std::vector<group_generator> generators;
  std::vector<group_relation> relations;
};

namespace detail {

inline syllable pow_syllable(std::size_t gen, std::int64_t e) { return {syllable::kind::power, gen, 0, e}; }
inline syllable comm_syllable(std::size_t a, std::size_t b) { return {syllable::kind::commutator, a, b, 1}; }

}  // namespace detail

/// Structured presentation of pi^orb, pi or pi~ for the given root.
///
///   pi^orb: prod [u_i,v_i] prod q_j = 1,  q_j^{alpha_j} = 1
///   pi:     prod [u_i,v_i] prod q_j = h^{2g-2},  q_j^{alpha_j} h^{alpha_j-1} = 1,  h central
///   pi~:    prod [u~_i,v~_i] prod q~_j = h~^b,  q~_j^{alpha_j} h~^{beta_j} = 1,  h~ central
///
/// with u~_i = u_i h^{-s_i}, v~_i = v_i h^{-t_i}, q~_j = q_j h^{-k_j}, h~ = h^r.
inline presentation root_group_presentation(const root_context& ctx, const root_tuple& root,
                                            group_kind kind = group_kind::root) {
  check_compatible(ctx, root);
  using detail::comm_syllable;
  using detail::pow_syllable;

  presentation p;
  p.kind = kind;
  const bool lifted = kind == group_kind::root;
  const int g = ctx.genus();
  const std::size_t n = ctx.sig.cone_count();

  for (int i = 1; i <= g; ++i) {
    p.generators.push_back({'u', i, lifted, lifted ? root.s(i) : 0});
    p.generators.push_back({'v', i, lifted, lifted ? root.t(i) : 0});
  }
  for (std::size_t j = 0; j < n; ++j)
    p.generators.push_back({'q', static_cast<int>(j + 1), lifted, lifted ? ctx.k[j] : 0});
  const bool has_h = kind != group_kind::orbifold;
  const std::size_t h = p.generators.size();
  if (has_h) p.generators.push_back({'h', 0, lifted, lifted ? ctx.order : 1});

  const auto u_gen = [](int i) { return static_cast<std::size_t>(2 * (i - 1)); };
  const auto q_gen = [g](std::size_t j) { return static_cast<std::size_t>(2 * g) + j; };

  group_relation long_rel;
  for (int i = 1; i <= g; ++i) long_rel.lhs.push_back(comm_syllable(u_gen(i), u_gen(i) + 1));
  for (std::size_t j = 0; j < n; ++j) long_rel.lhs.push_back(pow_syllable(q_gen(j), 1));
  if (kind == group_kind::tangent) long_rel.rhs.push_back(pow_syllable(h, 2 * static_cast<std::int64_t>(g) - 2));
  if (kind == group_kind::root) long_rel.rhs.push_back(pow_syllable(h, ctx.invariants.b));
  p.relations.push_back(long_rel);

  for (std::size_t j = 0; j < n; ++j) {
    group_relation torsion;
    const std::int64_t alpha = ctx.sig.cone_points[j];
    torsion.lhs.push_back(pow_syllable(q_gen(j), alpha));
    if (kind == group_kind::tangent) torsion.lhs.push_back(pow_syllable(h, alpha - 1));
    if (kind == group_kind::root) torsion.lhs.push_back(pow_syllable(h, ctx.invariants.fibres[j].beta));
    p.relations.push_back(torsion);
  }
  if (has_h) {
    group_relation central;
    central.central = true;
    central.central_generator = h;
    p.relations.push_back(central);
  }
  return p;
}

inline std::string render_word(const presentation& p, const group_word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& syl : w) {
    if (syl.type == syllable::kind::commutator) {
      out += "[" + p.generators[syl.gen].name() + "," + p.generators[syl.second].name() + "]";
      continue;
    }
    out += p.generators[syl.gen].name();
    if (syl.exponent != 1) out += "^" + std::to_string(syl.exponent);
  }
  return out;
}

/// Plain-text rendering, one generator definition or relation per line.
inline std::string render(const presentation& p) {
  std::string out = std::string(to_string(p.kind)) + " group\n  generators:";
  for (const auto& gen : p.generators) out += " " + gen.name();
  out += "\n";
  if (p.kind == group_kind::root) {
    for (const auto& gen : p.generators) {
      const std::string base(1, gen.family);
      const std::string plain = gen.index > 0 ? base + std::to_string(gen.index) : base;
      if (gen.family == 'h')
        out += "  " + gen.name() + " := h^" + std::to_string(gen.shift) + "\n";
      else
        out += "  " + gen.name() + " := " + plain + " h^" + std::to_string(-gen.shift) + "\n";
    }
  }
  out += "  relations:\n";
  for (const auto& rel : p.relations) {
    if (rel.central)
      out += "    " + p.generators[rel.central_generator].name() + " central\n";
    else
      out += "    " + render_word(p, rel.lhs) + " = " + render_word(p, rel.rhs) + "\n";
  }
  return out;
}

}  // namespace rspin
