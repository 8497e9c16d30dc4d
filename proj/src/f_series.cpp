#include "qpoch/f_series.hpp"

#include <utility>
#include <vector>

#include "qpoch/errors.hpp"
#include "qpoch/pentagonal.hpp"

namespace qpoch {

namespace {

void require_positive_k(std::size_t k, const char* op) {
  if (k == 0) {
    throw UsageError(std::string(op) + ": k must be positive");
  }
}

std::size_t triangular(std::size_t n) { return n * (n + 1) / 2; }

// Finite part of the back-substituted form:
//   sum_{i<k} (-1)^i (q^{k-i};q)_i q^{(k-1-i)(k-i)/2}
TruncSeries backsolve_polynomial_part(std::size_t k, std::size_t order) {
  TruncSeries r(order);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t s = (k - 1 - i) * (k - i) / 2;
    if (s > order) {
      continue;
    }
    TruncSeries term = shift_up(pochhammer(k - i, 1, i, order - s), s);
    if (i % 2 == 0) {
      r += term;
    } else {
      r -= term;
    }
  }
  return r;
}

// Partial pentagonal sum over n < n_end, n = 0 counted once.
TruncSeries pentagonal_head(std::size_t n_end, std::size_t order) {
  TruncSeries r(order);
  for (std::size_t n = 0; n < n_end; ++n) {
    const Coefficient sign(n % 2 == 0 ? 1 : -1);
    if (p1(n) <= order) {
      r[p1(n)] += sign;
    }
    if (n > 0 && p2(n) <= order) {
      r[p2(n)] += sign;
    }
  }
  return r;
}

const std::vector<std::pair<std::size_t, int>>& f6_terms() {
  static const std::vector<std::pair<std::size_t, int>> terms = {
      {29, 1},   {32, -1},  {36, 1},  {38, -1},  {43, 1},   {45, -1},  {50, 1},
      {56, -1},  {57, 1},   {58, 1},  {62, -1},  {63, -1},  {64, 1},   {71, 1},
      {80, -1},  {81, -1},  {84, 1},  {85, 1},   {106, 1},  {110, -1}, {239, -1},
      {241, 1},  {280, 1},  {281, -1},
  };
  return terms;
}

}  // namespace

TruncSeries F_direct(std::size_t k, Length M, std::size_t order) {
  require_positive_k(k, "F_direct");
  TruncSeries result(order);
  // running = (q;q)_j, only ever needed modulo q^(order - kj + 1)
  TruncSeries running = TruncSeries::one(order);
  for (std::size_t j = 0; (!M || j <= *M) && k * j <= order; ++j) {
    const std::size_t base = k * j;
    for (std::size_t t = 0; t + base <= order; ++t) {
      result[base + t] += running[t];
    }
    const std::size_t next_base = base + k;
    if (next_base > order) {
      break;
    }
    running.truncate_inplace(order - next_base);
    running.mul_binomial_inplace(j + 1, -1);
  }
  return result;
}

TruncSeries F_backsolve(std::size_t k, std::size_t order) {
  require_positive_k(k, "F_backsolve");
  const std::size_t shift = triangular(k);
  const std::size_t w = order + shift;
  TruncSeries rhs = backsolve_polynomial_part(k, w);
  TruncSeries tail = mul(pochhammer(1, 1, k - 1, w), pnt_series(w));
  if (k % 2 == 0) {
    rhs += tail;
  } else {
    rhs -= tail;
  }
  try {
    return drop_low(rhs, shift);
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(std::string("F_backsolve: right side not divisible by q^shift: ") +
                           e.what());
  }
}

std::size_t recurrence_degree(std::size_t k, std::size_t M) {
  return (k + 1) * (M + 1) + triangular(M);
}

bool recurrence_check(std::size_t k, std::size_t M, std::size_t order) {
  require_positive_k(k, "recurrence_check");
  const std::size_t need = recurrence_degree(k, M);
  if (order < need) {
    throw UsageError("recurrence_check: order " + std::to_string(order) +
                     " below required degree " + std::to_string(need));
  }
  TruncSeries lhs = shift_up(F_direct(k + 1, M, order - (k + 1)), k + 1);

  TruncSeries f = F_direct(k, M, order);
  TruncSeries rhs = TruncSeries::one(order);
  rhs += shift_up(truncate(f, order - k), k);
  rhs -= f;
  const std::size_t tail_shift = k * (M + 1);
  rhs -= shift_up(pochhammer(1, 1, M + 1, order - tail_shift), tail_shift);
  return lhs == rhs;
}

bool f1_identity_check(std::size_t M) {
  const std::size_t order = triangular(M + 1);
  TruncSeries lhs = shift_up(F_direct(1, M, order - 1), 1);
  TruncSeries rhs = TruncSeries::one(order) - pochhammer(1, 1, M + 1, order);
  return lhs == rhs;
}

bool one_mod_k_identity_check(std::size_t k, std::size_t M) {
  require_positive_k(k, "one_mod_k_identity_check");
  const std::size_t order = (M + 1) + k * triangular(M);
  TruncSeries middle(order);
  TruncSeries running = TruncSeries::one(order);  // (q;q^k)_j
  for (std::size_t j = 0; j <= M; ++j) {
    const std::size_t s = k * j + 1;
    for (std::size_t t = 0; t + s <= order; ++t) {
      middle[t + s] += running[t];
    }
    running.mul_binomial_inplace(1 + k * j, -1);
  }
  TruncSeries rhs = TruncSeries::one(order) - pochhammer(1, k, M + 1, order);
  return middle == rhs;
}

std::size_t TailSplit::tail_start_exponent() const { return p1(tail_start_n) - shift; }

std::size_t TailSplit::tail_start_pentagonal() const { return p1(tail_start_n); }

TruncSeries TailSplit::reconstruct() const { return head + tail_factor * tail; }

std::size_t tail_split_min_order(std::size_t k) {
  const std::size_t n_star = triangular(k - 1) + 1;
  return p1(n_star + 2) - triangular(k);
}

TailSplit tail_split(std::size_t k, std::size_t order) {
  if (k < 2) {
    throw UsageError("tail_split: k must be at least 2");
  }
  const std::size_t n_star = triangular(k - 1) + 1;
  const std::size_t shift = triangular(k);
  if (order < tail_split_min_order(k)) {
    throw UsageError("tail_split: order " + std::to_string(order) + " below " +
                     std::to_string(tail_split_min_order(k)) + " for k = " + std::to_string(k));
  }
  const int sign = k % 2 == 0 ? 1 : -1;
  const std::size_t w = order + shift;

  // q^shift * head = polynomial part + sign * (q;q)_{k-1} * (pentagonal terms with n < n*)
  TruncSeries factor_w = pochhammer(1, 1, k - 1, w);
  TruncSeries scaled = backsolve_polynomial_part(k, w);
  TruncSeries head_pent = mul(factor_w, pentagonal_head(n_star, w));
  if (sign > 0) {
    scaled += head_pent;
  } else {
    scaled -= head_pent;
  }
  TruncSeries head = drop_low(scaled, shift);

  TruncSeries tail(order);
  for (std::size_t n = n_star;; ++n) {
    if (p1(n) - shift > order) {
      break;
    }
    const Coefficient c((n % 2 == 0 ? 1 : -1) * sign);
    tail[p1(n) - shift] += c;
    if (p2(n) - shift <= order) {
      tail[p2(n) - shift] += c;
    }
  }

  const std::size_t head_degree = head.degree().value_or(0);
  return TailSplit{k,
                   std::move(head),
                   head_degree,
                   pochhammer(1, 1, k - 1, order),
                   std::move(tail),
                   n_star,
                   shift,
                   sign};
}

bool has_correction(std::size_t k) {
  return k == 1 || k == 2 || k == 3 || k == 4 || k == 6;
}

CorrectionPoly correction(std::size_t k) {
  switch (k) {
    case 1:
    case 2:
      return {k, TruncSeries(0)};
    case 3:
      return {k, TruncSeries::from_terms({{9, 1}}, 9)};
    case 4:
      return {k, TruncSeries::from_terms({{16, 1}, {18, -1}, {30, -1}, {31, 1}}, 31)};
    case 6: {
      TruncSeries f(281);
      for (const auto& [e, c] : f6_terms()) {
        f[e] = Coefficient(c);
      }
      return {k, std::move(f)};
    }
    default:
      throw NoCorrectionError("no polynomial makes F_" + std::to_string(k) +
                              " Bloch-Polya");
  }
}

TruncSeries eden_series(std::size_t k, std::size_t order) {
  require_positive_k(k, "eden_series");
  if (order < k) {
    return TruncSeries(order);
  }
  TruncSeries r = shift_up(F_direct(k, kInfinite, order - k), k);
  return k % 2 == 0 ? r : negate(r);
}

}  // namespace qpoch
