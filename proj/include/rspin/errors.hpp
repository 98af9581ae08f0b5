#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rspin {

enum class error_kind {
  not_hyperbolic,
  inadmissible_order,
  not_sl2_quotient,
  count_overflow,
  odd_order,
  index_out_of_range,
  dimension_mismatch,
  invalid_argument,
};

constexpr std::string_view to_string(error_kind kind) noexcept {
  switch (kind) {
    case error_kind::not_hyperbolic: return "NotHyperbolic";
    case error_kind::inadmissible_order: return "InadmissibleOrder";
    case error_kind::not_sl2_quotient: return "NotSL2Quotient";
    case error_kind::count_overflow: return "CountOverflow";
    case error_kind::odd_order: return "OddOrder";
    case error_kind::index_out_of_range: return "IndexOutOfRange";
    case error_kind::dimension_mismatch: return "DimensionMismatch";
    case error_kind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above, so
/// callers (the CLI in particular) can map it without parsing messages.
class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

[[noreturn]] inline void fail(error_kind kind, const std::string& what) {
  throw error(kind, what);
}

}  // namespace rspin
