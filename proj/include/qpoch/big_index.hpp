#ifndef QPOCH_BIG_INDEX_HPP
#define QPOCH_BIG_INDEX_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qpoch {

/// Arbitrary-precision non-negative integer used as an exponent or a
/// pentagonal family index.
class BigIndex {
 public:
  BigIndex() = default;
  BigIndex(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT
  /// Throws UsageError if v < 0.
  explicit BigIndex(mpz_class v);

  /// Decimal digits only; no sign, no exponent notation, no separators.
  static BigIndex from_decimal(std::string_view text);
  /// 10^e.
  static BigIndex power_of_ten(unsigned e);

  const mpz_class& value() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(10); }
  bool fits_u64() const noexcept { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }
  /// Only meaningful when fits_u64().
  std::uint64_t to_u64() const noexcept { return value_.get_ui(); }
  bool is_even() const noexcept { return mpz_even_p(value_.get_mpz_t()) != 0; }

  BigIndex& operator+=(const BigIndex& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  BigIndex& operator*=(const BigIndex& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  friend BigIndex operator+(BigIndex a, const BigIndex& b) { return a += b; }
  friend BigIndex operator*(BigIndex a, const BigIndex& b) { return a *= b; }
  /// Exact floor(value / 2).
  BigIndex half() const;

  friend bool operator==(const BigIndex& a, const BigIndex& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigIndex& a, const BigIndex& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigIndex& b) {
    return os << b.to_string();
  }

 private:
  mpz_class value_;
};

}  // namespace qpoch

#endif  // QPOCH_BIG_INDEX_HPP
