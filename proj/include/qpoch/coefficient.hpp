#ifndef QPOCH_COEFFICIENT_HPP
#define QPOCH_COEFFICIENT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qpoch {

/// Exact signed integer coefficient.
///
/// Values that fit in an int64 live inline; anything larger is promoted to a
/// GMP integer and demoted again as soon as it fits. The promotion is
/// invisible to callers: every operation is exact.
class Coefficient {
 public:
  Coefficient() noexcept = default;
  Coefficient(std::int64_t v) noexcept : small_(v) {}  // NOLINT: implicit by intent
  Coefficient(int v) noexcept : small_(v) {}           // NOLINT
  explicit Coefficient(const mpz_class& v);

  Coefficient(const Coefficient& other)
      : small_(other.small_),
        big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}
  Coefficient(Coefficient&&) noexcept = default;
  Coefficient& operator=(const Coefficient& other) {
    if (this != &other) {
      small_ = other.small_;
      if (other.big_) {
        if (big_) {
          *big_ = *other.big_;
        } else {
          big_ = std::make_unique<mpz_class>(*other.big_);
        }
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Coefficient& operator=(Coefficient&&) noexcept = default;

  /// Parses an optionally signed decimal numeral.
  static Coefficient from_string(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  /// Only meaningful when is_small().
  std::int64_t small_value() const noexcept { return small_; }

  mpz_class to_mpz() const;
  std::string to_string() const;

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  int sign() const noexcept;
  Coefficient abs() const;
  /// Number of decimal digits of |value| (1 for zero).
  std::size_t digits() const;

  Coefficient& operator+=(const Coefficient& rhs) {
    std::int64_t r;
    if (!big_ && !rhs.big_ && !__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
    return add_slow(rhs, 1);
  }

  Coefficient& operator-=(const Coefficient& rhs) {
    std::int64_t r;
    if (!big_ && !rhs.big_ && !__builtin_sub_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
    return add_slow(rhs, -1);
  }

  /// *this += factor * x
  void add_scaled(const Coefficient& x, std::int64_t factor) {
    std::int64_t p;
    std::int64_t r;
    if (!big_ && !x.big_ && !__builtin_mul_overflow(x.small_, factor, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    add_scaled_slow(x, factor);
  }

  /// *this += a * b
  void add_product(const Coefficient& a, const Coefficient& b) {
    std::int64_t p;
    std::int64_t r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    add_product_slow(a, b);
  }

  Coefficient& operator*=(const Coefficient& rhs);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator-(const Coefficient& a);

  friend bool operator==(const Coefficient& a, const Coefficient& b) noexcept;
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b);

  /// Three-way comparison of |a| and |b|.
  friend std::strong_ordering compare_abs(const Coefficient& a, const Coefficient& b);

  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c) {
    return os << c.to_string();
  }

 private:
  Coefficient& add_slow(const Coefficient& rhs, int sign);
  void add_scaled_slow(const Coefficient& x, std::int64_t factor);
  void add_product_slow(const Coefficient& a, const Coefficient& b);
  void assign(const mpz_class& v);

  // Invariant: big_ is engaged iff the value does not fit in int64.
  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace qpoch

#endif  // QPOCH_COEFFICIENT_HPP
