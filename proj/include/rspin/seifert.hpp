#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rspin/errors.hpp"
#include "rspin/number_theory.hpp"
#include "rspin/orbifold.hpp"
#include "rspin/rational.hpp"

namespace rspin {

/// A multiple fibre (alpha, beta) of a Seifert fibration.
struct fibre {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  friend bool operator==(const fibre&, const fibre&) = default;
};

/// Normalised Seifert invariants {g; b; (alpha_j, beta_j)} with
/// 1 <= beta_j <= alpha_j - 1.
struct seifert_invariants {
  int genus = 0;
  std::int64_t b = 0;
  std::vector<fibre> fibres;

  friend bool operator==(const seifert_invariants&, const seifert_invariants&) = default;

  signature base() const {
    std::vector<std::int64_t> cones;
    cones.reserve(fibres.size());
    for (const auto& f : fibres) cones.push_back(f.alpha);
    return signature(genus, std::move(cones));
  }

  bool normalized() const {
    for (const auto& f : fibres)
      if (f.alpha < 2 || f.beta < 1 || f.beta > f.alpha - 1) return false;
    return true;
  }

  /// e = -(b + sum beta_j / alpha_j).
  rational euler_number() const {
    rational s(b);
    for (const auto& f : fibres) s += rational(f.beta, f.alpha);
    return -s;
  }
};

/// A solved r-th root: the base orbifold, the order r, the Seifert invariants
/// of the root, the Raymond-Vasquez integers k_j and the Euler number e.
///
/// Invariants: r b = 2g - 2 - sum k_j, r beta_j = alpha_j - 1 + k_j alpha_j,
/// and r e = chi_orb.
struct root_context {
  signature sig;
  std::int64_t order = 1;
  seifert_invariants invariants;
  std::vector<std::int64_t> k;
  rational euler_number;

  int genus() const noexcept { return sig.genus; }

  friend bool operator==(const root_context&, const root_context&) = default;
};

namespace detail {

inline bool raymond_vasquez_holds(const signature& sig, std::int64_t r, std::int64_t b,
                                  const std::vector<fibre>& fibres, const std::vector<std::int64_t>& k) {
  if (fibres.size() != k.size()) return false;
  std::int64_t sum_k = 0;
  for (std::size_t j = 0; j < fibres.size(); ++j) {
    if (r * fibres[j].beta != fibres[j].alpha - 1 + k[j] * fibres[j].alpha) return false;
    sum_k += k[j];
  }
  return r * b == 2 * static_cast<std::int64_t>(sig.genus) - 2 - sum_k;
}

}  // namespace detail

/// Solves the Raymond-Vasquez relations for an admissible order r.
///
/// beta_j is the unique residue in [1, alpha_j - 1] with r beta_j = alpha_j - 1
/// (mod alpha_j), i.e. beta_j = -r^{-1} mod alpha_j; k_j and b then follow
/// and b is asserted to be integral.
inline root_context solve_raymond_vasquez(const signature& sig, std::int64_t r) {
  if (!root_order_admissible(sig, r))
    fail(error_kind::inadmissible_order,
         "order " + std::to_string(r) + " is not admissible for " + sig.str());

  root_context ctx;
  ctx.sig = sig;
  ctx.order = r;
  ctx.invariants.genus = sig.genus;
  std::int64_t sum_k = 0;
  for (auto alpha : sig.cone_points) {
    const std::int64_t beta = mod_floor(-mod_inverse(mod_floor(r, alpha), alpha), alpha);
    const std::int64_t numer = checked_add(checked_mul(r, beta), 1 - alpha);
    if (beta < 1 || numer % alpha != 0) throw std::logic_error("Raymond-Vasquez congruence has no normalized solution");
    ctx.invariants.fibres.push_back({alpha, beta});
    ctx.k.push_back(numer / alpha);
    sum_k += numer / alpha;
  }
  const std::int64_t rb = 2 * static_cast<std::int64_t>(sig.genus) - 2 - sum_k;
  if (rb % r != 0) throw std::logic_error("r does not divide 2g - 2 - sum k_j for an admissible order");
  ctx.invariants.b = rb / r;
  ctx.euler_number = ctx.invariants.euler_number();
  if (rational(r) * ctx.euler_number != chi_orb(sig))
    throw std::logic_error("r e != chi_orb after solving Raymond-Vasquez relations");
  return ctx;
}

/// Normalised invariants {g; 2g-2; (alpha_j, alpha_j - 1)} of ST Sigma.
inline root_context unit_tangent_bundle(const signature& sig) { return solve_raymond_vasquez(sig, 1); }

/// Recovers the fibre index r of a left-quotient of the universal cover of
/// SL2 from its normalised Seifert invariants, with r = chi_orb / e.
inline root_context recognize_fibre_index(const seifert_invariants& inv) {
  if (!inv.normalized())
    fail(error_kind::invalid_argument, "Seifert invariants are not normalized (need 1 <= beta < alpha)");
  const signature sig = inv.base();
  assert_hyperbolic(sig);

  const rational e = inv.euler_number();
  if (!(e < rational(0)))
    fail(error_kind::not_sl2_quotient, "Euler number " + e.str() + " is not negative");
  const rational ratio = chi_orb(sig) / e;
  if (!ratio.is_integer() || ratio.numerator() < 1)
    fail(error_kind::not_sl2_quotient, "chi_orb / e = " + ratio.str() + " is not a positive integer");
  const std::int64_t r = ratio.numerator();

  std::vector<std::int64_t> k;
  for (const auto& f : inv.fibres) {
    const std::int64_t numer = r * f.beta - f.alpha + 1;
    if (numer % f.alpha != 0)
      fail(error_kind::not_sl2_quotient, "r beta_j - alpha_j + 1 is not divisible by alpha_j for fibre (" +
                                             std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")");
    k.push_back(numer / f.alpha);
  }
  if (!detail::raymond_vasquez_holds(sig, r, inv.b, inv.fibres, k))
    fail(error_kind::not_sl2_quotient, "Raymond-Vasquez relation r b = 2g - 2 - sum k_j fails");

  root_context ctx;
  ctx.sig = sig;
  ctx.order = r;
  ctx.invariants = inv;
  ctx.k = std::move(k);
  ctx.euler_number = e;
  return ctx;
}

}  // namespace rspin
