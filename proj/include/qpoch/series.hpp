#ifndef QPOCH_SERIES_HPP
#define QPOCH_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpoch/coefficient.hpp"

namespace qpoch {

/// Number of factors in a product, or of summands in a sum; nullopt means
/// "until every further term vanishes modulo q^(N+1)".
using Length = std::optional<std::size_t>;
inline constexpr std::nullopt_t kInfinite = std::nullopt;

/// Formal power series in q known exactly modulo q^(order+1).
///
/// Binary operations require equal orders and throw UsageError otherwise;
/// changing the order is always an explicit call (truncate, shift_up,
/// drop_low, as_polynomial).
class TruncSeries {
 public:
  /// The zero series of the given order.
  explicit TruncSeries(std::size_t order);
  /// Takes coefficients 0..size-1; order = size - 1. Throws on empty input.
  explicit TruncSeries(std::vector<Coefficient> coeffs);

  static TruncSeries one(std::size_t order);
  static TruncSeries monomial(std::size_t exponent, const Coefficient& c, std::size_t order);
  /// Sum of c*q^e; terms with e > order vanish and are dropped.
  static TruncSeries from_terms(std::initializer_list<std::pair<std::size_t, std::int64_t>> terms,
                                std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Coefficient& operator[](std::size_t t) const noexcept { return coeffs_[t]; }
  Coefficient& operator[](std::size_t t) noexcept { return coeffs_[t]; }
  /// Bounds-checked access; UsageError past the order.
  const Coefficient& at(std::size_t t) const;
  std::span<const Coefficient> coeffs() const noexcept { return coeffs_; }

  /// Largest exponent with a nonzero coefficient, nullopt for zero.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return !degree().has_value(); }

  /// *this *= (1 + c q^d), one descending pass.
  void mul_binomial_inplace(std::size_t d, std::int64_t c);
  /// *this /= (1 - q^d), one ascending pass of stride-d prefix sums.
  void div_binomial_inplace(std::size_t d);
  /// Lowers the order in place; new_order must not exceed order().
  void truncate_inplace(std::size_t new_order);

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<Coefficient> coeffs_;
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries negate(const TruncSeries& a);
/// Cauchy product truncated at the common order.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries mul_binomial(TruncSeries a, std::size_t d, std::int64_t c);
TruncSeries div_binomial(TruncSeries a, std::size_t d);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator-(const TruncSeries& a) { return negate(a); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

/// q^s * A; known modulo q^(order+s+1).
TruncSeries shift_up(const TruncSeries& a, std::size_t s);
/// A / q^s; coefficients below s must vanish (ConsistencyError otherwise).
TruncSeries drop_low(const TruncSeries& a, std::size_t s);
/// A modulo q^(order+1); order must not exceed a.order().
TruncSeries truncate(const TruncSeries& a, std::size_t order);
/// Re-orders a series the caller knows to be a polynomial: coefficients
/// past a.order() are taken to be zero. Throws if the polynomial has degree
/// above the requested order.
TruncSeries as_polynomial(const TruncSeries& a, std::size_t order);

/// prod_{i < length} (1 - q^(start + step*i)) modulo q^(order+1).
TruncSeries pochhammer(std::size_t start, std::size_t step, Length length, std::size_t order);

Coefficient coeff(const TruncSeries& a, std::size_t t);

struct MaxAbs {
  Coefficient value;
  std::size_t witness;  // smallest exponent attaining value
};

MaxAbs max_abs(const TruncSeries& a, std::size_t upto);
inline MaxAbs max_abs(const TruncSeries& a) { return max_abs(a, a.order()); }
/// Largest |c| over a contiguous coefficient run.
MaxAbs max_abs(std::span<const Coefficient> coeffs);

bool is_bloch_polya(const TruncSeries& a, std::size_t upto);
inline bool is_bloch_polya(const TruncSeries& a) { return is_bloch_polya(a, a.order()); }

/// Exponents whose coefficient lies outside {-1, 0, 1}, ascending, up to upto.
std::vector<std::size_t> bloch_polya_violations(const TruncSeries& a, std::size_t upto);

/// Human-readable "1 - q - q^2 + 2*q^5" rendering, for diagnostics.
std::string to_string(const TruncSeries& a);

/// (q;q)_m as an exact polynomial, advanced one factor at a time in place.
class PochhammerStream {
 public:
  PochhammerStream() : coeffs_{Coefficient(1)} {}
  explicit PochhammerStream(std::size_t m);

  std::size_t m() const noexcept { return m_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  /// (q;q)_m -> (q;q)_(m+1)
  void advance();
  std::span<const Coefficient> coeffs() const noexcept { return coeffs_; }
  /// The polynomial as a series of the given order (truncating or padding).
  TruncSeries to_series(std::size_t order) const;

 private:
  std::size_t m_ = 0;
  std::vector<Coefficient> coeffs_;
};

}  // namespace qpoch

#endif  // QPOCH_SERIES_HPP
