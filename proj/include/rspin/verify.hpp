#pragma once

// Self-check suite behind `rspin verify`: closed forms against brute force
// over a grid of signatures.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rspin/moduli.hpp"
#include "rspin/orbifold.hpp"
#include "rspin/orbits.hpp"
#include "rspin/seifert.hpp"
#include "rspin/twist.hpp"

namespace rspin {

struct verify_range {
  int max_genus = 3;
  int max_cones = 3;
  std::int64_t max_multiplicity = 9;
  std::int64_t max_order = 60;
  std::uint64_t census_cap = std::uint64_t{1} << 20;
  int random_samples = 1000;
};

struct check_result {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

/// Hyperbolic signatures with genus <= max_genus and a non-decreasing cone
/// list of length <= max_cones drawn from {2, ..., max_multiplicity}.
inline std::vector<signature> signature_grid(int max_genus, int max_cones, std::int64_t max_multiplicity) {
  std::vector<signature> out;
  std::vector<std::int64_t> cones;
  const auto recurse = [&](auto&& self, int g, std::int64_t lo) -> void {
    const signature sig(g, cones);
    if (is_hyperbolic(sig)) out.push_back(sig);
    if (static_cast<int>(cones.size()) == max_cones) return;
    for (std::int64_t a = lo; a <= max_multiplicity; ++a) {
      cones.push_back(a);
      self(self, g, a);
      cones.pop_back();
    }
  };
  for (int g = 0; g <= max_genus; ++g) recurse(recurse, g, 2);
  return out;
}

namespace detail {

/// Searches beta_j in [1, alpha_j - 1] for a solution of the Raymond-Vasquez
/// relations without using the admissibility criterion.
inline bool raymond_vasquez_solvable_by_search(const signature& sig, std::int64_t r) {
  std::int64_t sum_k = 0;
  for (auto alpha : sig.cone_points) {
    bool found = false;
    for (std::int64_t beta = 1; beta < alpha && !found; ++beta) {
      if ((r * beta - alpha + 1) % alpha == 0) {
        sum_k += (r * beta - alpha + 1) / alpha;
        found = true;
      }
    }
    if (!found) return false;
  }
  return (2 * static_cast<std::int64_t>(sig.genus) - 2 - sum_k) % r == 0;
}

inline void record(check_result& c, bool ok, const std::string& what) {
  ++c.cases;
  if (ok) return;
  if (c.failures++ == 0) c.first_failure = what;
}

}  // namespace detail

inline check_result named_check(std::string name) {
  check_result c;
  c.name = std::move(name);
  return c;
}

inline std::vector<check_result> run_verification(const verify_range& range, std::uint64_t seed) {
  check_result existence = named_check("existence criterion vs brute-force Raymond-Vasquez search");
  check_result euler = named_check("r e = chi_orb for every solved context");
  check_result roundtrip = named_check("recognize(solve(sig, r)) round trip");
  check_result equal_alpha = named_check("equal multiplicities give equal beta and k");
  check_result census = named_check("moduli census vs exhaustive orbit partition");
  check_result genus_one = named_check("genus-one orbits match divisors of r");
  check_result a_inv = named_check("A-invariant preserved by every generator");
  check_result witness = named_check("reduction witness replays to the standard form");

  std::set<std::pair<int, std::int64_t>> shapes;
  for (const auto& sig : signature_grid(range.max_genus, range.max_cones, range.max_multiplicity)) {
    for (std::int64_t r = 1; r <= range.max_order; ++r) {
      const bool admissible = root_order_admissible(sig, r);
      const std::string tag = sig.str() + " r=" + std::to_string(r);
      detail::record(existence, admissible == detail::raymond_vasquez_solvable_by_search(sig, r), tag);
      if (!admissible) continue;
      const auto ctx = solve_raymond_vasquez(sig, r);
      detail::record(euler, rational(r) * ctx.euler_number == chi_orb(sig), tag);
      bool same = true;
      try {
        same = recognize_fibre_index(ctx.invariants) == ctx;
      } catch (const error&) {
        same = false;
      }
      detail::record(roundtrip, same, tag);
      bool eq = true;
      for (std::size_t a = 0; a < ctx.k.size(); ++a)
        for (std::size_t b = 0; b < ctx.k.size(); ++b)
          if (sig.cone_points[a] == sig.cone_points[b])
            eq = eq && ctx.k[a] == ctx.k[b] && ctx.invariants.fibres[a] == ctx.invariants.fibres[b];
      detail::record(equal_alpha, eq, tag);
      if (saturating_pow(static_cast<std::uint64_t>(r), 2 * static_cast<unsigned>(sig.genus), range.census_cap) <=
          range.census_cap)
        shapes.insert({sig.genus, r});
    }
  }

  for (const auto& [g, r] : shapes) {
    const std::string tag = "g=" + std::to_string(g) + " r=" + std::to_string(r);
    bool ok = true;
    try {
      const auto partition = partition_orbits(r, g, {range.census_cap, {1}});
      std::uint64_t expected_orbits = 1;
      if (g == 1) expected_orbits = divisors(r).size();
      if (g >= 2 && r % 2 == 0) expected_orbits = 2;
      ok = partition.orbits.size() == expected_orbits;
      if (g >= 2 && r % 2 == 0) {
        const auto counts = orbit_count_closed_form(g, r);
        std::multiset<std::uint64_t> got, want{counts.even_type, counts.odd_type};
        for (const auto& o : partition.orbits) got.insert(o.size);
        ok = ok && got == want;
      }
      ok = ok && partition.total() == saturating_pow(static_cast<std::uint64_t>(r), 2 * static_cast<unsigned>(g),
                                                     range.census_cap);
    } catch (const std::exception&) {
      ok = false;
    }
    detail::record(census, ok, tag);
  }

  for (std::int64_t r = 1; r <= 24; ++r) {
    const auto partition = partition_orbits(r, 1);
    bool ok = partition.orbits.size() == divisors(r).size() && partition.total() == static_cast<std::uint64_t>(r * r);
    for (const auto& o : partition.orbits) ok = ok && o.size == genus_one_orbit_size(r, o.label.d);
    detail::record(genus_one, ok, "r=" + std::to_string(r));
  }

  for (int g : {2, 3}) {
    for (std::int64_t r : {2, 4}) {
      const auto gens = orbit_generators(g, {1});
      for (const auto& root : root_stream(state_codec(r, g))) {
        const int a = a_invariant(root);
        for (const auto& gen : gens)
          detail::record(a_inv, a_invariant(apply_generator(root, gen)) == a, root.str() + " " + gen.str());
      }
    }
  }

  std::mt19937_64 rng(seed);
  for (int g = 0; g <= 3; ++g) {
    for (std::int64_t r = 1; r <= 6; ++r) {
      const state_codec codec(r, g);
      std::uniform_int_distribution<std::uint64_t> pick(0, codec.size() - 1);
      for (int n = 0; n < range.random_samples; ++n) {
        const auto root = codec.unpack(pick(rng));
        bool ok = false;
        try {
          const auto red = reduce_with_witness(root);
          ok = apply_word(root, red.witness) == red.form.representative();
        } catch (const std::exception&) {
          ok = false;
        }
        detail::record(witness, ok, root.str());
      }
    }
  }

  return {existence, euler, roundtrip, equal_alpha, census, genus_one, a_inv, witness};
}

}  // namespace rspin
