#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rspin/errors.hpp"
#include "rspin/number_theory.hpp"
#include "rspin/roots.hpp"
#include "rspin/twist.hpp"

namespace rspin {

struct orbit_options {
  std::uint64_t cap = default_state_cap;
  /// Twist powers used as generators, each together with its negative.
  /// {1} is the standard generating set; extra powers are redundant.
  std::vector<std::int64_t> powers{1};
};

/// Generators in search order: U_1, V_1, ..., U_g, V_g, W_1, ..., W_{g-1},
/// each power p before -p.
inline std::vector<twist_generator> orbit_generators(int genus, const std::vector<std::int64_t>& powers) {
  std::vector<twist_generator> gens;
  const auto add = [&](twist_family f, int i) {
    for (auto p : powers) {
      gens.push_back({f, i, p});
      gens.push_back({f, i, -p});
    }
  };
  for (int i = 1; i <= genus; ++i) {
    add(twist_family::U, i);
    add(twist_family::V, i);
  }
  for (int i = 1; i < genus; ++i) add(twist_family::W, i);
  return gens;
}

namespace detail {

/// Breadth-first closure of `start` inside the packed state space. Newly
/// reached states get `id` in `owner`; returns them in discovery order.
inline std::vector<std::uint64_t> bfs_orbit(const state_codec& codec, const std::vector<twist_generator>& gens,
                                            std::uint64_t start, std::vector<std::uint32_t>& owner,
                                            std::uint32_t id) {
  const std::size_t width = 2 * static_cast<std::size_t>(codec.genus());
  std::vector<std::int64_t> here(width), next(width);
  std::vector<std::uint64_t> members{start};
  owner[start] = id;
  for (std::size_t head = 0; head < members.size(); ++head) {
    codec.unpack(members[head], here);
    for (const auto& gen : gens) {
      next = here;
      apply_in_place(next, codec.order(), gen);
      const std::uint64_t idx = codec.pack(next);
      if (owner[idx] == std::numeric_limits<std::uint32_t>::max()) {
        owner[idx] = id;
        members.push_back(idx);
      }
    }
  }
  return members;
}

}  // namespace detail

/// The orbit of `root` under all twist generators, sorted lexicographically.
inline std::vector<root_tuple> orbit_of(const root_tuple& root, const orbit_options& opts = {}) {
  const state_codec codec(root.order(), root.genus(), opts.cap);
  std::vector<std::uint32_t> owner(codec.size(), std::numeric_limits<std::uint32_t>::max());
  auto members = detail::bfs_orbit(codec, orbit_generators(root.genus(), opts.powers), codec.pack(root), owner, 0);
  std::sort(members.begin(), members.end());
  std::vector<root_tuple> out;
  out.reserve(members.size());
  for (auto idx : members) out.push_back(codec.unpack(idx));
  return out;
}

struct orbit_entry {
  root_tuple representative;  ///< lexicographically least member
  std::uint64_t size = 0;
  standard_form label;
};

struct orbit_partition {
  std::int64_t order = 1;
  int genus = 0;
  std::vector<orbit_entry> orbits;

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (const auto& o : orbits) n += o.size;
    return n;
  }
};

/// Partitions all of Z_r^{2g} into orbits by exhaustive search. Orbits are
/// listed in order of their least member. Every member is checked to carry
/// the same canonical form as its representative.
inline orbit_partition partition_orbits(std::int64_t order, int genus, const orbit_options& opts = {}) {
  const state_codec codec(order, genus, opts.cap);
  const auto gens = orbit_generators(genus, opts.powers);
  std::vector<std::uint32_t> owner(codec.size(), std::numeric_limits<std::uint32_t>::max());
  std::vector<std::int64_t> scratch(2 * static_cast<std::size_t>(genus));

  orbit_partition out;
  out.order = order;
  out.genus = genus;
  for (std::uint64_t idx = 0; idx < codec.size(); ++idx) {
    if (owner[idx] != std::numeric_limits<std::uint32_t>::max()) continue;
    const auto id = static_cast<std::uint32_t>(out.orbits.size());
    const auto members = detail::bfs_orbit(codec, gens, idx, owner, id);

    orbit_entry entry;
    entry.representative = codec.unpack(idx);
    entry.size = members.size();
    entry.label = canonical_form(entry.representative);
    for (auto m : members) {
      codec.unpack(m, scratch);
      if (detail::canonical_form_of(scratch, order) != entry.label)
        throw std::logic_error("canonical form is not constant on the orbit of " + entry.representative.str());
    }
    out.orbits.push_back(std::move(entry));
  }
  return out;
}

inline orbit_partition partition_orbits(const root_context& ctx, const orbit_options& opts = {}) {
  return partition_orbits(ctx.order, ctx.genus(), opts);
}

/// Number of roots of each type for g >= 2.
struct orbit_counts {
  bool split = false;            ///< true for even r: two types
  std::uint64_t total = 0;       ///< r^{2g}
  std::uint64_t even_type = 0;   ///< r^{2g} (2^g + 1) / 2^{g+1}, even r only
  std::uint64_t odd_type = 0;    ///< r^{2g} (2^g - 1) / 2^{g+1}, even r only
};

inline orbit_counts orbit_count_closed_form(int genus, std::int64_t order) {
  if (genus < 2) fail(error_kind::invalid_argument, "closed-form orbit count needs genus >= 2");
  if (order < 1) fail(error_kind::invalid_argument, "root order must be positive");
  orbit_counts out;
  out.total = static_cast<std::uint64_t>(checked_pow(order, 2 * static_cast<unsigned>(genus)));
  if (order % 2 != 0) return out;
  out.split = true;
  // r^{2g} / 2^{g+1} is exact: r^{2g} carries at least 2^{2g} >= 2^{g+1}.
  const std::uint64_t unit = out.total >> (genus + 1);
  const std::uint64_t two_g = std::uint64_t{1} << genus;
  out.even_type = unit * (two_g + 1);
  out.odd_type = unit * (two_g - 1);
  return out;
}

/// |{(s, t) in Z_r^2 : gcd(s, t, r) = d}|, counted directly.
inline std::uint64_t genus_one_orbit_size(std::int64_t order, std::int64_t d) {
  if (order < 1) fail(error_kind::invalid_argument, "root order must be positive");
  if (d < 1 || d > order || order % d != 0)
    fail(error_kind::invalid_argument, std::to_string(d) + " is not a divisor of " + std::to_string(order));
  std::uint64_t count = 0;
  for (std::int64_t s = 0; s < order; ++s)
    for (std::int64_t t = 0; t < order; ++t)
      if (ideal_generator(s, t, order) == d) ++count;
  if (count != static_cast<std::uint64_t>(jordan_totient2(order / d)))
    throw std::logic_error("genus-one orbit count disagrees with J_2(r/d)");
  return count;
}

}  // namespace rspin
