#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rspin {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Intermediate products are formed in 128 bits; a result that does not fit
/// back into 64 bits raises std::overflow_error. Values arising from orbifold
/// data stay tiny, so this never triggers in practice.
class rational {
 public:
  constexpr rational() = default;
  constexpr rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend rational operator+(const rational& a, const rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend rational operator-(const rational& a, const rational& b) { return a + (-b); }
  friend rational operator*(const rational& a, const rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  rational operator-() const {
    rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  rational& operator+=(const rational& o) { return *this = *this + o; }
  rational& operator-=(const rational& o) { return *this = *this - o; }

  friend bool operator==(const rational&, const rational&) = default;
  friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Inverse of str(); also accepts non-reduced input such as "4/6".
  static rational parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto parse_int = [](std::string_view s) {
      std::int64_t v = 0;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
      return v;
    };
    if (slash == std::string_view::npos) return rational(parse_int(text));
    return rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& q) { return os << q.str(); }

 private:
  static rational make(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational out of 64-bit range");
    rational out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }

  void assign(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace rspin
