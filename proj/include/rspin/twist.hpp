#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "rspin/errors.hpp"
#include "rspin/number_theory.hpp"
#include "rspin/roots.hpp"

namespace rspin {

enum class twist_family { U, V, W };

constexpr char to_char(twist_family f) {
  switch (f) {
    case twist_family::U: return 'U';
    case twist_family::V: return 'V';
    case twist_family::W: return 'W';
  }
  return '?';
}

/// f^{u_i}, f^{v_i} or f^{w_{i,i+1}} raised to a nonzero power; positive
/// powers are right-handed twists.
struct twist_generator {
  twist_family family = twist_family::U;
  int index = 1;
  std::int64_t power = 1;

  twist_generator inverse() const { return {family, index, -power}; }

  std::string str() const {
    std::string out = std::string(1, to_char(family)) + std::to_string(index);
    if (power != 1) out += "^" + std::to_string(power);
    return out;
  }

  friend bool operator==(const twist_generator&, const twist_generator&) = default;
};

using twist_word = std::vector<twist_generator>;

inline twist_word inverse(const twist_word& word) {
  twist_word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(it->inverse());
  return out;
}

inline std::string to_string(const twist_word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += " ";
    out += word[i].str();
  }
  return out;
}

inline void validate(const twist_generator& gen, int genus) {
  const int top = gen.family == twist_family::W ? genus - 1 : genus;
  if (gen.index < 1 || gen.index > top)
    fail(error_kind::index_out_of_range, "generator " + gen.str() + " is out of range for genus " +
                                             std::to_string(genus));
  if (gen.power == 0) fail(error_kind::invalid_argument, "twist power must be nonzero");
}

namespace detail {

/// Applies gen to residues in place. Unchecked; callers validate.
///
///   f^{u_i}:        t_i <- t_i - s_i
///   f^{v_i}:        s_i <- s_i + t_i
///   f^{w_{i,i+1}}:  t_i <- t_i - w,  t_{i+1} <- t_{i+1} + w,  w = s_i - s_{i+1} + 1
///
/// A power m applies the map m times. The W-twist leaves every s fixed, so w
/// does not change between iterations and all three maps are affine in m.
inline void apply_in_place(std::span<std::int64_t> c, std::int64_t r, const twist_generator& gen) {
  const std::int64_t m = mod_floor(gen.power, r);
  const std::size_t si = 2 * static_cast<std::size_t>(gen.index - 1);
  const std::size_t ti = si + 1;
  switch (gen.family) {
    case twist_family::U:
      c[ti] = mod_floor(c[ti] - mod_floor(m * c[si], r), r);
      break;
    case twist_family::V:
      c[si] = mod_floor(c[si] + mod_floor(m * c[ti], r), r);
      break;
    case twist_family::W: {
      const std::int64_t w = mod_floor(c[si] - c[si + 2] + 1, r);
      const std::int64_t shift = mod_floor(m * w, r);
      c[ti] = mod_floor(c[ti] - shift, r);
      c[ti + 2] = mod_floor(c[ti + 2] + shift, r);
      break;
    }
  }
}

}  // namespace detail

inline root_tuple apply_generator(const root_tuple& root, const twist_generator& gen) {
  validate(gen, root.genus());
  std::vector<std::int64_t> c(root.coords().begin(), root.coords().end());
  detail::apply_in_place(c, root.order(), gen);
  return root_tuple(root.order(), std::move(c));
}

/// Left-to-right composition; the empty word is the identity.
inline root_tuple apply_word(const root_tuple& root, const twist_word& word) {
  for (const auto& gen : word) validate(gen, root.genus());
  std::vector<std::int64_t> c(root.coords().begin(), root.coords().end());
  for (const auto& gen : word) detail::apply_in_place(c, root.order(), gen);
  return root_tuple(root.order(), std::move(c));
}

/// delta(w_{i,i+1}) = s_i - s_{i+1} + 1 mod r.
inline std::int64_t w_value(const root_tuple& root, int i) {
  if (i < 1 || i > root.genus() - 1)
    fail(error_kind::index_out_of_range, "w-curve index " + std::to_string(i) + " out of range for genus " +
                                             std::to_string(root.genus()));
  return mod_floor(root.s(i) - root.s(i + 1) + 1, root.order());
}

/// A(delta) = sum (s_i + 1)(t_i + 1) mod 2; only defined for even r.
inline int a_invariant(const root_tuple& root) {
  if (root.order() % 2 != 0)
    fail(error_kind::odd_order, "A-invariant is undefined for odd r = " + std::to_string(root.order()));
  std::int64_t sum = 0;
  for (int i = 1; i <= root.genus(); ++i) sum += ((root.s(i) + 1) % 2) * ((root.t(i) + 1) % 2);
  return static_cast<int>(sum % 2);
}

/// Canonical orbit label.
///
/// genus 0: the only root. genus 1: (0, d) with d | r, where d = r stands for
/// the zero class. genus >= 2: (0,...,0,0) or, for even r only, (0,...,0,1).
struct standard_form {
  enum class kind { genus_zero, genus_one, all_zero, last_one };

  kind type = kind::genus_zero;
  std::int64_t order = 1;
  int genus = 0;
  std::int64_t d = 0;  ///< genus_one only

  root_tuple representative() const {
    auto rep = root_tuple::zero(order, genus);
    std::vector<std::int64_t> c(rep.coords().begin(), rep.coords().end());
    if (type == kind::genus_one) c[1] = d;
    if (type == kind::last_one) c.back() = 1;
    return root_tuple(order, std::move(c));
  }

  std::string str() const {
    switch (type) {
      case kind::genus_zero: return "genus0";
      case kind::genus_one: return "genus1(d=" + std::to_string(d) + ")";
      case kind::all_zero: return "all_zero";
      case kind::last_one: return "last_one";
    }
    return "?";
  }

  friend bool operator==(const standard_form&, const standard_form&) = default;
  friend auto operator<=>(const standard_form&, const standard_form&) = default;
};

constexpr const char* to_string(standard_form::kind k) {
  switch (k) {
    case standard_form::kind::genus_zero: return "genus0";
    case standard_form::kind::genus_one: return "genus1";
    case standard_form::kind::all_zero: return "all_zero";
    case standard_form::kind::last_one: return "last_one";
  }
  return "?";
}

namespace detail {

inline standard_form canonical_form_of(std::span<const std::int64_t> c, std::int64_t r) {
  standard_form f;
  f.order = r;
  f.genus = static_cast<int>(c.size() / 2);
  if (f.genus == 0) {
    f.type = standard_form::kind::genus_zero;
  } else if (f.genus == 1) {
    f.type = standard_form::kind::genus_one;
    f.d = ideal_generator(c[0], c[1], r);
  } else if (r % 2 != 0) {
    f.type = standard_form::kind::all_zero;
  } else {
    std::int64_t a = 0;
    for (std::size_t i = 0; i < c.size(); i += 2) a += ((c[i] + 1) % 2) * ((c[i + 1] + 1) % 2);
    // A(0,...,0) = g mod 2, A(0,...,0,1) = g - 1 mod 2.
    f.type = a % 2 == f.genus % 2 ? standard_form::kind::all_zero : standard_form::kind::last_one;
  }
  return f;
}

}  // namespace detail

inline standard_form canonical_form(const root_tuple& root) {
  return detail::canonical_form_of(root.coords(), root.order());
}

struct reduction {
  standard_form form;
  twist_word witness;
};

namespace detail {

/// Appends generators to a word while tracking their effect on a tuple.
class word_builder {
 public:
  explicit word_builder(const root_tuple& root)
      : order_(root.order()), coords_(root.coords().begin(), root.coords().end()) {}

  void emit(twist_family family, int index, std::int64_t power) {
    power = mod_centered(power, order_);
    if (power == 0) return;
    const twist_generator gen{family, index, power};
    apply_in_place(coords_, order_, gen);
    word_.push_back(gen);
  }

  std::int64_t s(int i) const { return coords_[2 * static_cast<std::size_t>(i - 1)]; }
  std::int64_t t(int i) const { return coords_[2 * static_cast<std::size_t>(i - 1) + 1]; }
  std::int64_t order() const { return order_; }
  root_tuple current() const { return root_tuple(order_, coords_); }
  twist_word take() { return std::move(word_); }

  /// (s, t) -> (-s, -t) on handle i via (V U V)^2; V U V maps (s, t) to (t, -s).
  void negate_handle(int i) {
    for (int rep = 0; rep < 2; ++rep) {
      emit(twist_family::V, i, 1);
      emit(twist_family::U, i, 1);
      emit(twist_family::V, i, 1);
    }
  }

  /// Brings handle i to (0, d) with d = gcd(s_i, t_i, r) by a signed Euclid
  /// run on integer representatives. The representatives are picked so that
  /// their integer gcd already equals d.
  void euclid_handle(int i) {
    const std::int64_t r = order_;
    const std::int64_t d = ideal_generator(s(i), t(i), r);
    if (s(i) == 0 && t(i) == mod_floor(d, r)) return;

    std::int64_t a = mod_centered(s(i), r);
    if (a == 0) a = r;
    const std::int64_t t0 = mod_centered(t(i), r);
    std::int64_t b = t0;
    for (std::int64_t step = 1; std::gcd(a, b) != d; ++step)
      b = t0 + (step % 2 ? 1 : -1) * ((step + 1) / 2) * r;

    const auto nearest = [](std::int64_t x, std::int64_t y) {
      std::int64_t q = x / y;
      const std::int64_t rem = x - q * y;
      if (2 * abs64(rem) > abs64(y)) q += ((rem < 0) == (y < 0)) ? 1 : -1;
      return q;
    };

    while (a != 0 && b != 0) {
      if (abs64(b) >= abs64(a)) {
        const std::int64_t q = nearest(b, a);
        emit(twist_family::U, i, q);
        b -= q * a;
      } else {
        const std::int64_t q = nearest(a, b);
        emit(twist_family::V, i, -q);
        a -= q * b;
      }
    }
    if (b == 0) {
      // (a, 0) -> (a, a) -> (0, a)
      emit(twist_family::U, i, -1);
      emit(twist_family::V, i, -1);
      b = a;
    }
    if (b < 0) negate_handle(i);
  }

  /// (.., 0, 0, 0, D) -> (.., 0, 0, 0, D +- 2) using w_{g-1,g} and handle g-1.
  void shift_last_by_two(int genus, int direction) {
    emit(twist_family::W, genus - 1, direction);
    negate_handle(genus - 1);
    emit(twist_family::W, genus - 1, direction);
  }

 private:
  std::int64_t order_;
  std::vector<std::int64_t> coords_;
  twist_word word_;
};

}  // namespace detail

/// Reduces a root to its standard form and returns the twist word doing it.
///
/// Handles are first brought to (0, d_i) by Euclid, then merged into the last
/// handle along the w-curves (each w-value is 1 at that point), and the last
/// entry is finally moved in steps of +-2 to 0, or to its parity for even r.
inline reduction reduce_with_witness(const root_tuple& root) {
  reduction out;
  out.form = canonical_form(root);
  const int g = root.genus();
  const std::int64_t r = root.order();
  detail::word_builder builder(root);

  if (g >= 1 && r > 1) {
    for (int i = 1; i <= g; ++i) builder.euclid_handle(i);
  }
  if (g >= 2 && r > 1) {
    for (int i = 1; i < g; ++i) builder.emit(twist_family::W, i, builder.t(i));

    const std::int64_t last = builder.t(g);
    const std::int64_t target = r % 2 == 0 ? last % 2 : 0;
    const std::int64_t period = r % 2 == 0 ? r / 2 : r;
    const std::int64_t plus = r % 2 == 0 ? mod_floor(target - last, r) / 2
                                         : mod_floor(mod_floor(target - last, r) * mod_inverse(2, r), r);
    const std::int64_t minus = plus == 0 ? 0 : period - plus;
    if (plus <= minus) {
      for (std::int64_t k = 0; k < plus; ++k) builder.shift_last_by_two(g, +1);
    } else {
      for (std::int64_t k = 0; k < minus; ++k) builder.shift_last_by_two(g, -1);
    }
  }

  if (builder.current() != out.form.representative())
    throw std::logic_error("reduction of " + root.str() + " ended at " + builder.current().str() +
                           " instead of the standard form " + out.form.representative().str());
  out.witness = builder.take();
  return out;
}

}  // namespace rspin
