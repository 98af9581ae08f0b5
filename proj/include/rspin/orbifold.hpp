#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rspin/errors.hpp"
#include "rspin/number_theory.hpp"
#include "rspin/rational.hpp"

namespace rspin {

/// Closed orientable 2-orbifold: genus plus cone-point multiplicities.
///
/// Cone points carry no position, only a multiplicity. Their order is kept
/// for labelling output but every derived quantity is order-independent.
struct signature {
  int genus = 0;
  std::vector<std::int64_t> cone_points;

  signature() = default;
  signature(int g, std::vector<std::int64_t> cones) : genus(g), cone_points(std::move(cones)) {
    validate();
  }

  std::size_t cone_count() const noexcept { return cone_points.size(); }

  void validate() const {
    if (genus < 0) fail(error_kind::invalid_argument, "genus must be non-negative");
    for (auto a : cone_points)
      if (a < 2) fail(error_kind::invalid_argument, "cone multiplicity " + std::to_string(a) + " is below 2");
  }

  std::string str() const {
    std::string out = "(g=" + std::to_string(genus) + "; ";
    for (std::size_t j = 0; j < cone_points.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(cone_points[j]);
    }
    return out + ")";
  }

  friend bool operator==(const signature&, const signature&) = default;
};

/// chi_orb = 2 - 2g - n + sum 1/alpha_j.
inline rational chi_orb(const signature& sig) {
  rational chi(2 - 2 * static_cast<std::int64_t>(sig.genus) - static_cast<std::int64_t>(sig.cone_count()));
  for (auto a : sig.cone_points) chi += rational(1, a);
  return chi;
}

inline bool is_hyperbolic(const signature& sig) { return chi_orb(sig) < rational(0); }

inline void assert_hyperbolic(const signature& sig) {
  const rational chi = chi_orb(sig);
  if (!(chi < rational(0)))
    fail(error_kind::not_hyperbolic,
         "orbifold " + sig.str() + " has chi_orb = " + chi.str() + ", which is not negative");
}

/// alpha_1 ... alpha_n (empty product is 1).
inline std::int64_t cone_product(const signature& sig) {
  std::int64_t p = 1;
  for (auto a : sig.cone_points) p = checked_mul(p, a);
  return p;
}

/// The integer alpha_1 ... alpha_n * chi_orb.
inline std::int64_t scaled_euler_characteristic(const signature& sig) {
  const rational scaled = rational(cone_product(sig)) * chi_orb(sig);
  if (!scaled.is_integer())
    throw std::logic_error("alpha_1...alpha_n * chi_orb is not an integer for " + sig.str());
  return scaled.numerator();
}

/// r is admissible iff it is prime to every multiplicity and divides
/// alpha_1 ... alpha_n * chi_orb.
inline bool root_order_admissible(const signature& sig, std::int64_t r) {
  assert_hyperbolic(sig);
  if (r < 1) fail(error_kind::invalid_argument, "root order must be positive");
  for (auto a : sig.cone_points)
    if (std::gcd(r, a) != 1) return false;
  return abs64(scaled_euler_characteristic(sig)) % r == 0;
}

/// All admissible root orders, ascending. Always contains 1.
inline std::vector<std::int64_t> admissible_root_orders(const signature& sig) {
  assert_hyperbolic(sig);
  std::vector<std::int64_t> out;
  for (auto d : divisors(scaled_euler_characteristic(sig)))
    if (root_order_admissible(sig, d)) out.push_back(d);
  return out;
}

}  // namespace rspin
