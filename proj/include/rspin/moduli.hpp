#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rspin/orbits.hpp"
#include "rspin/seifert.hpp"
#include "rspin/twist.hpp"

namespace rspin {

inline constexpr const char* moduli_base_note =
    "possibly branched covering over the moduli space of hyperbolic metrics on the base orbifold";

/// One connected component of the moduli space of taut contact circles and
/// the number of sheets it contributes over the base moduli space.
struct moduli_component {
  standard_form label;
  std::uint64_t sheets = 0;
};

struct moduli_report {
  root_context context;
  std::vector<moduli_component> components;
  std::string base_note = moduli_base_note;
  bool verified = false;  ///< cross-checked against an exhaustive orbit partition

  std::uint64_t total_sheets() const {
    std::uint64_t n = 0;
    for (const auto& c : components) n += c.sheets;
    return n;
  }
};

struct moduli_options {
  std::uint64_t cap = default_state_cap;
  bool verify = true;
};

/// Component/sheet census: components correspond to orbits of the twist action
/// on the r-th roots, and sheets to orbit sizes.
inline moduli_report compute_moduli_report(const root_context& ctx, const moduli_options& opts = {}) {
  assert_hyperbolic(ctx.sig);
  if (!root_order_admissible(ctx.sig, ctx.order))
    fail(error_kind::inadmissible_order, "order " + std::to_string(ctx.order) + " is not admissible for " +
                                             ctx.sig.str());
  moduli_report rep;
  rep.context = ctx;
  const int g = ctx.genus();
  const std::int64_t r = ctx.order;
  const auto label = [&](standard_form::kind k, std::int64_t d = 0) {
    standard_form f;
    f.type = k;
    f.order = r;
    f.genus = g;
    f.d = d;
    return f;
  };

  if (g == 0) {
    rep.components.push_back({label(standard_form::kind::genus_zero), 1});
  } else if (g == 1) {
    for (auto d : divisors(r))
      rep.components.push_back({label(standard_form::kind::genus_one, d), genus_one_orbit_size(r, d)});
  } else {
    const auto counts = orbit_count_closed_form(g, r);
    if (!counts.split) {
      rep.components.push_back({label(standard_form::kind::all_zero), counts.total});
    } else {
      // (0,...,0) has A = g mod 2, so it is of even type exactly when g is even.
      const bool zero_even = g % 2 == 0;
      rep.components.push_back(
          {label(standard_form::kind::all_zero), zero_even ? counts.even_type : counts.odd_type});
      rep.components.push_back(
          {label(standard_form::kind::last_one), zero_even ? counts.odd_type : counts.even_type});
    }
  }

  const std::uint64_t states = saturating_pow(static_cast<std::uint64_t>(r), 2 * static_cast<unsigned>(g), opts.cap);
  if (opts.verify && states <= opts.cap) {
    const auto partition = partition_orbits(r, g, {opts.cap, {1}});
    bool same = partition.orbits.size() == rep.components.size();
    for (const auto& c : rep.components) {
      const auto it = std::find_if(partition.orbits.begin(), partition.orbits.end(),
                                   [&](const orbit_entry& o) { return o.label == c.label; });
      same = same && it != partition.orbits.end() && it->size == c.sheets;
    }
    if (!same)
      throw std::logic_error("moduli census for r=" + std::to_string(r) + ", g=" + std::to_string(g) +
                             " disagrees with the exhaustive orbit partition");
    rep.verified = true;
  }
  return rep;
}

}  // namespace rspin
