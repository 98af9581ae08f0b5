#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "rspin/errors.hpp"
#include "rspin/number_theory.hpp"
#include "rspin/seifert.hpp"

namespace rspin {

/// Default upper bound on r^{2g} for anything that materializes the whole of
/// Z_r^{2g}.
inline constexpr std::uint64_t default_state_cap = std::uint64_t{1} << 24;

/// An r-th root as the tuple (s_1, t_1, ..., s_g, t_g) in Z_r^{2g}, with
/// s_i = delta(u_i) and t_i = delta(v_i). delta(h) = 1 and delta(q_j) = k_j
/// are fixed by the context and not stored here.
class root_tuple {
 public:
  root_tuple() = default;
  root_tuple(std::int64_t order, std::vector<std::int64_t> coords) : order_(order), coords_(std::move(coords)) {
    if (order_ < 1) fail(error_kind::invalid_argument, "root order must be positive");
    if (coords_.size() % 2 != 0) fail(error_kind::dimension_mismatch, "root tuple must have even length");
    for (auto& c : coords_) c = mod_floor(c, order_);
  }

  static root_tuple zero(std::int64_t order, int genus) {
    return root_tuple(order, std::vector<std::int64_t>(2 * static_cast<std::size_t>(genus), 0));
  }

  std::int64_t order() const noexcept { return order_; }
  int genus() const noexcept { return static_cast<int>(coords_.size() / 2); }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  /// 1-based handle accessors.
  std::int64_t s(int i) const { return coords_.at(2 * static_cast<std::size_t>(i - 1)); }
  std::int64_t t(int i) const { return coords_.at(2 * static_cast<std::size_t>(i - 1) + 1); }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(coords_[i]);
    }
    return out;
  }

  friend bool operator==(const root_tuple&, const root_tuple&) = default;
  friend auto operator<=>(const root_tuple& a, const root_tuple& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.coords_ <=> b.coords_;
  }

 private:
  friend class state_codec;
  std::int64_t order_ = 1;
  std::vector<std::int64_t> coords_;
};

/// Mixed-radix packing of Z_r^{2g} into [0, r^{2g}); the first coordinate is
/// most significant, so index order is lexicographic order.
class state_codec {
 public:
  state_codec(std::int64_t order, int genus, std::uint64_t cap = default_state_cap)
      : order_(order), genus_(genus) {
    if (order < 1) fail(error_kind::invalid_argument, "root order must be positive");
    if (genus < 0) fail(error_kind::invalid_argument, "genus must be non-negative");
    const auto width = 2 * static_cast<unsigned>(genus);
    size_ = saturating_pow(static_cast<std::uint64_t>(order), width, cap);
    if (size_ > cap)
      fail(error_kind::count_overflow, std::to_string(order) + "^" + std::to_string(width) +
                                           " states exceed the cap of " + std::to_string(cap));
    weights_.assign(width, 1);
    for (std::size_t i = width; i-- > 1;)
      weights_[i - 1] = weights_[i] * static_cast<std::uint64_t>(order);
  }

  std::uint64_t size() const noexcept { return size_; }
  std::int64_t order() const noexcept { return order_; }
  int genus() const noexcept { return genus_; }
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

  std::uint64_t pack(std::span<const std::int64_t> coords) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) idx += static_cast<std::uint64_t>(coords[i]) * weights_[i];
    return idx;
  }
  std::uint64_t pack(const root_tuple& root) const { return pack(root.coords()); }

  void unpack(std::uint64_t index, std::span<std::int64_t> out) const {
    const auto r = static_cast<std::uint64_t>(order_);
    for (std::size_t i = out.size(); i-- > 0;) {
      out[i] = static_cast<std::int64_t>(index % r);
      index /= r;
    }
  }
  root_tuple unpack(std::uint64_t index) const {
    root_tuple out;
    out.order_ = order_;
    out.coords_.assign(weights_.size(), 0);
    unpack(index, out.coords_);
    return out;
  }

 private:
  std::int64_t order_;
  int genus_;
  std::uint64_t size_ = 1;
  std::vector<std::uint64_t> weights_;
};

/// Lazily generated, lexicographically ordered sequence of all r^{2g} roots.
class root_stream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = root_tuple;
    using difference_type = std::ptrdiff_t;
    using pointer = const root_tuple*;
    using reference = root_tuple;

    iterator() = default;
    iterator(const state_codec* codec, std::uint64_t index) : codec_(codec), index_(index) {}

    root_tuple operator*() const { return codec_->unpack(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const state_codec* codec_ = nullptr;
    std::uint64_t index_ = 0;
  };

  explicit root_stream(state_codec codec) : codec_(std::move(codec)) {}

  iterator begin() const { return {&codec_, 0}; }
  iterator end() const { return {&codec_, codec_.size()}; }
  std::uint64_t size() const noexcept { return codec_.size(); }

  /// Random access into the lexicographic order; lets workers split ranges.
  root_tuple at(std::uint64_t index) const {
    if (index >= codec_.size()) fail(error_kind::index_out_of_range, "root index out of range");
    return codec_.unpack(index);
  }

 private:
  state_codec codec_;
};

inline root_stream enumerate_roots(const root_context& ctx, std::uint64_t cap = default_state_cap) {
  return root_stream(state_codec(ctx.order, ctx.genus(), cap));
}

/// Values of delta on h and on the q_j, which every root shares.
struct determined_values_t {
  std::int64_t h_value = 0;
  std::vector<std::int64_t> q_values;
  friend bool operator==(const determined_values_t&, const determined_values_t&) = default;
};

inline determined_values_t determined_values(const root_context& ctx) {
  determined_values_t out;
  out.h_value = mod_floor(1, ctx.order);
  for (auto kj : ctx.k) out.q_values.push_back(mod_floor(kj, ctx.order));
  return out;
}

inline void check_compatible(const root_context& ctx, const root_tuple& root) {
  if (root.order() != ctx.order || root.genus() != ctx.genus())
    fail(error_kind::dimension_mismatch, "root tuple (r=" + std::to_string(root.order()) + ", g=" +
                                             std::to_string(root.genus()) + ") does not match context (r=" +
                                             std::to_string(ctx.order) + ", g=" + std::to_string(ctx.genus()) + ")");
}

}  // namespace rspin
