#ifndef QPOCH_F_SERIES_HPP
#define QPOCH_F_SERIES_HPP

#include <cstddef>

#include "qpoch/series.hpp"

namespace qpoch {

/// F_{k,M}(q) = sum_{j=0}^{M} q^{kj} (q;q)_j modulo q^(order+1). With
/// M = kInfinite the sum stops at j = floor(order/k).
TruncSeries F_direct(std::size_t k, Length M, std::size_t order);

/// F_k(q) from the finite back-substituted form
///   q^{k(k+1)/2} F_k = sum_{i<k} (-1)^i (q^{k-i};q)_i q^{(k-1-i)(k-i)/2}
///                      + (-1)^k (q;q)_{k-1} (q;q)_inf,
/// with (q;q)_inf taken from the pentagonal series.
TruncSeries F_backsolve(std::size_t k, std::size_t order);

/// Exact degree of q^{k+1} F_{k+1,M}, the order the recurrence check needs.
std::size_t recurrence_degree(std::size_t k, std::size_t M);

/// q^{k+1} F_{k+1,M} == 1 + (q^k - 1) F_{k,M} - q^{k(M+1)} (q;q)_{M+1}
/// as polynomials. UsageError if order < recurrence_degree(k, M).
bool recurrence_check(std::size_t k, std::size_t M, std::size_t order);
inline bool recurrence_check(std::size_t k, std::size_t M) {
  return recurrence_check(k, M, recurrence_degree(k, M));
}

/// q F_{1,M} == 1 - (q;q)_{M+1}.
bool f1_identity_check(std::size_t M);

/// sum_{j=0}^{M} q^{kj+1} (q;q^k)_j == 1 - (q;q^k)_{M+1}.
bool one_mod_k_identity_check(std::size_t k, std::size_t M);

/// F_k = head + tail_factor * tail on [0, order], where
///   tail_factor = (q;q)_{k-1},
///   tail = (-1)^k sum_{n >= n*} (-1)^n (q^{p1(n)-shift} + q^{p2(n)-shift}),
///   n* = k(k-1)/2 + 1, shift = k(k+1)/2.
/// Pentagonal gaps from n* on exceed deg (q;q)_{k-1}, so the shifted
/// copies of tail_factor in the tail never overlap.
struct TailSplit {
  std::size_t k;
  TruncSeries head;
  std::size_t head_degree;
  TruncSeries tail_factor;
  TruncSeries tail;
  std::size_t tail_start_n;
  std::size_t shift;
  int tail_sign;

  /// First tail exponent in F_k, p1(n*) - shift.
  std::size_t tail_start_exponent() const;
  /// First tail exponent in the q^shift F_k normalization, p1(n*).
  std::size_t tail_start_pentagonal() const;
  TruncSeries reconstruct() const;
};

/// Smallest order tail_split accepts: two tail terms past the start.
std::size_t tail_split_min_order(std::size_t k);
TailSplit tail_split(std::size_t k, std::size_t order);

/// A finite polynomial f such that F_k - f is Bloch-Polya.
struct CorrectionPoly {
  std::size_t k;
  TruncSeries poly;  // order = degree (0 for the zero polynomial)

  TruncSeries as_series(std::size_t order) const { return as_polynomial(poly, order); }
};

/// Known corrections for k in {1, 2, 3, 4, 6}; NoCorrectionError for any
/// other k, where no polynomial correction exists.
CorrectionPoly correction(std::size_t k);
bool has_correction(std::size_t k);

/// (-q)^k F_k(q) modulo q^(order+1).
TruncSeries eden_series(std::size_t k, std::size_t order);

}  // namespace qpoch

#endif  // QPOCH_F_SERIES_HPP
