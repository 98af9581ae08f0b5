#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// library's arithmetic or twist code, so they can be used to check it.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using tuple = std::vector<std::int64_t>;

inline std::int64_t md(std::int64_t x, std::int64_t r) { return ((x % r) + r) % r; }

/// chi_orb as a reduced fraction (num, den) by direct summation.
inline std::pair<std::int64_t, std::int64_t> chi(int g, const std::vector<std::int64_t>& cones) {
  std::int64_t num = 2 - 2 * g - static_cast<std::int64_t>(cones.size());
  std::int64_t den = 1;
  for (auto a : cones) {
    num = num * a + den;
    den *= a;
    const auto c = std::gcd(num, den);
    num /= c;
    den /= c;
  }
  return {num, den};
}

/// Whether integers beta_j in [1, alpha_j-1], k_j and b satisfying the
/// Raymond-Vasquez relations exist; searches every beta tuple.
inline bool rv_solvable(int g, const std::vector<std::int64_t>& cones, std::int64_t r) {
  std::vector<std::int64_t> beta(cones.size(), 1);
  for (;;) {
    bool ok = true;
    std::int64_t sum_k = 0;
    for (std::size_t j = 0; j < cones.size() && ok; ++j) {
      const std::int64_t numer = r * beta[j] - cones[j] + 1;
      if (numer % cones[j] != 0)
        ok = false;
      else
        sum_k += numer / cones[j];
    }
    if (ok && (2 * g - 2 - sum_k) % r == 0) return true;
    std::size_t j = 0;
    while (j < cones.size() && ++beta[j] == cones[j]) beta[j++] = 1;
    if (j == cones.size()) return false;
  }
}

/// The three twist maps, written out independently.
inline std::vector<tuple> neighbours(const tuple& x, std::int64_t r) {
  std::vector<tuple> out;
  const std::size_t g = x.size() / 2;
  for (std::size_t i = 0; i < g; ++i) {
    for (int sign : {1, -1}) {
      tuple u = x;
      u[2 * i + 1] = md(x[2 * i + 1] - sign * x[2 * i], r);
      out.push_back(u);
      tuple v = x;
      v[2 * i] = md(x[2 * i] + sign * x[2 * i + 1], r);
      out.push_back(v);
      if (i + 1 < g) {
        const std::int64_t w = x[2 * i] - x[2 * i + 2] + 1;
        tuple t = x;
        t[2 * i + 1] = md(x[2 * i + 1] - sign * w, r);
        t[2 * i + 3] = md(x[2 * i + 3] + sign * w, r);
        out.push_back(t);
      }
    }
  }
  return out;
}

inline std::set<tuple> orbit(const tuple& start, std::int64_t r) {
  std::set<tuple> seen{start};
  std::vector<tuple> todo{start};
  while (!todo.empty()) {
    const tuple x = todo.back();
    todo.pop_back();
    for (auto& y : neighbours(x, r))
      if (seen.insert(y).second) todo.push_back(y);
  }
  return seen;
}

/// All orbit sizes of Z_r^{2g}, as a sorted list.
inline std::vector<std::size_t> orbit_sizes(int g, std::int64_t r) {
  std::set<tuple> done;
  std::vector<std::size_t> sizes;
  tuple x(2 * static_cast<std::size_t>(g), 0);
  for (;;) {
    if (!done.count(x)) {
      const auto o = orbit(x, r);
      done.insert(o.begin(), o.end());
      sizes.push_back(o.size());
    }
    std::size_t j = x.size();
    while (j > 0 && ++x[j - 1] == r) x[--j] = 0;
    if (j == 0) break;
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// gcd(s, t, r) computed with the convention gcd(0, r) = r.
inline std::int64_t ideal(std::int64_t s, std::int64_t t, std::int64_t r) {
  return std::gcd(std::gcd(md(s, r), md(t, r)), r);
}

inline std::int64_t pairs_with_ideal(std::int64_t r, std::int64_t d) {
  std::int64_t n = 0;
  for (std::int64_t s = 0; s < r; ++s)
    for (std::int64_t t = 0; t < r; ++t) n += ideal(s, t, r) == d;
  return n;
}

}  // namespace oracle
