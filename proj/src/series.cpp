#include "qpoch/series.hpp"

#include <algorithm>
#include <sstream>

#include "qpoch/errors.hpp"

namespace qpoch {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw UsageError("TruncSeries needs at least one coefficient");
  }
}

TruncSeries TruncSeries::one(std::size_t order) { return monomial(0, Coefficient(1), order); }

TruncSeries TruncSeries::monomial(std::size_t exponent, const Coefficient& c, std::size_t order) {
  TruncSeries s(order);
  if (exponent <= order) {
    s.coeffs_[exponent] = c;
  }
  return s;
}

TruncSeries TruncSeries::from_terms(
    std::initializer_list<std::pair<std::size_t, std::int64_t>> terms, std::size_t order) {
  TruncSeries s(order);
  for (const auto& [e, c] : terms) {
    if (e <= order) {
      s.coeffs_[e] += Coefficient(c);
    }
  }
  return s;
}

const Coefficient& TruncSeries::at(std::size_t t) const {
  if (t > order()) {
    throw UsageError("exponent " + std::to_string(t) + " beyond truncation order " +
                     std::to_string(order()));
  }
  return coeffs_[t];
}

std::optional<std::size_t> TruncSeries::degree() const {
  for (std::size_t t = coeffs_.size(); t-- > 0;) {
    if (!coeffs_[t].is_zero()) {
      return t;
    }
  }
  return std::nullopt;
}

void TruncSeries::mul_binomial_inplace(std::size_t d, std::int64_t c) {
  if (d == 0) {
    throw UsageError("mul_binomial: d must be positive");
  }
  if (c == 0) {
    return;
  }
  for (std::size_t t = order(); t >= d; --t) {
    coeffs_[t].add_scaled(coeffs_[t - d], c);
  }
}

void TruncSeries::div_binomial_inplace(std::size_t d) {
  if (d == 0) {
    throw UsageError("div_binomial: d must be positive");
  }
  for (std::size_t t = d; t <= order(); ++t) {
    coeffs_[t] += coeffs_[t - d];
  }
}

void TruncSeries::truncate_inplace(std::size_t new_order) {
  if (new_order > order()) {
    throw UsageError("truncate: cannot raise order " + std::to_string(order()) + " to " +
                     std::to_string(new_order));
  }
  coeffs_.resize(new_order + 1);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_same_order(*this, rhs, "add");
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    coeffs_[t] += rhs.coeffs_[t];
  }
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_same_order(*this, rhs, "sub");
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    coeffs_[t] -= rhs.coeffs_[t];
  }
  return *this;
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r = a;
  return r += b;
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r = a;
  return r -= b;
}

TruncSeries negate(const TruncSeries& a) {
  TruncSeries r(a.order());
  for (std::size_t t = 0; t <= a.order(); ++t) {
    r[t] = -a[t];
  }
  return r;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b, "mul");
  const std::size_t n = a.order();
  TruncSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) {
        r[i + j].add_product(a[i], b[j]);
      }
    }
  }
  return r;
}

TruncSeries mul_binomial(TruncSeries a, std::size_t d, std::int64_t c) {
  a.mul_binomial_inplace(d, c);
  return a;
}

TruncSeries div_binomial(TruncSeries a, std::size_t d) {
  a.div_binomial_inplace(d);
  return a;
}

TruncSeries shift_up(const TruncSeries& a, std::size_t s) {
  TruncSeries r(a.order() + s);
  for (std::size_t t = 0; t <= a.order(); ++t) {
    r[t + s] = a[t];
  }
  return r;
}

TruncSeries drop_low(const TruncSeries& a, std::size_t s) {
  if (s > a.order()) {
    throw UsageError("drop_low: shift " + std::to_string(s) + " exceeds order " +
                     std::to_string(a.order()));
  }
  for (std::size_t t = 0; t < s; ++t) {
    if (!a[t].is_zero()) {
      throw ConsistencyError("drop_low: nonzero coefficient at q^" + std::to_string(t) +
                             " below q^" + std::to_string(s));
    }
  }
  TruncSeries r(a.order() - s);
  for (std::size_t t = s; t <= a.order(); ++t) {
    r[t - s] = a[t];
  }
  return r;
}

TruncSeries truncate(const TruncSeries& a, std::size_t order) {
  if (order > a.order()) {
    throw UsageError("truncate: cannot raise order " + std::to_string(a.order()) + " to " +
                     std::to_string(order));
  }
  return TruncSeries(std::vector<Coefficient>(a.coeffs().begin(), a.coeffs().begin() + order + 1));
}

TruncSeries as_polynomial(const TruncSeries& a, std::size_t order) {
  auto deg = a.degree();
  if (deg && *deg > order) {
    throw UsageError("as_polynomial: degree " + std::to_string(*deg) + " exceeds order " +
                     std::to_string(order));
  }
  TruncSeries r(order);
  const std::size_t upto = std::min(order, a.order());
  for (std::size_t t = 0; t <= upto; ++t) {
    r[t] = a[t];
  }
  return r;
}

TruncSeries pochhammer(std::size_t start, std::size_t step, Length length, std::size_t order) {
  if (start == 0 || step == 0) {
    throw UsageError("pochhammer: start and step must be positive");
  }
  TruncSeries r = TruncSeries::one(order);
  for (std::size_t i = 0; !length || i < *length; ++i) {
    const std::size_t e = start + step * i;
    if (e > order) {
      break;  // remaining factors are 1 modulo q^(order+1)
    }
    r.mul_binomial_inplace(e, -1);
  }
  return r;
}

Coefficient coeff(const TruncSeries& a, std::size_t t) { return a.at(t); }

MaxAbs max_abs(std::span<const Coefficient> coeffs) {
  MaxAbs best{Coefficient(0), 0};
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (compare_abs(coeffs[t], best.value) > 0) {
      best.value = coeffs[t];
      best.witness = t;
    }
  }
  best.value = best.value.abs();
  return best;
}

MaxAbs max_abs(const TruncSeries& a, std::size_t upto) {
  if (upto > a.order()) {
    throw UsageError("max_abs: upto " + std::to_string(upto) + " beyond order " +
                     std::to_string(a.order()));
  }
  return max_abs(a.coeffs().subspan(0, upto + 1));
}

bool is_bloch_polya(const TruncSeries& a, std::size_t upto) {
  return max_abs(a, upto).value <= Coefficient(1);
}

std::vector<std::size_t> bloch_polya_violations(const TruncSeries& a, std::size_t upto) {
  if (upto > a.order()) {
    throw UsageError("bloch_polya_violations: upto beyond order");
  }
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t <= upto; ++t) {
    if (compare_abs(a[t], Coefficient(1)) > 0) {
      out.push_back(t);
    }
  }
  return out;
}

std::string to_string(const TruncSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t <= a.order(); ++t) {
    const Coefficient& c = a[t];
    if (c.is_zero()) {
      continue;
    }
    Coefficient mag = c.abs();
    if (first) {
      if (c.sign() < 0) {
        os << "-";
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Coefficient(1);
    if (t == 0) {
      os << mag;
    } else {
      if (!unit) {
        os << mag << "*";
      }
      os << "q";
      if (t > 1) {
        os << "^" << t;
      }
    }
  }
  if (first) {
    os << "0";
  }
  os << " + O(q^" << a.order() + 1 << ")";
  return os.str();
}

PochhammerStream::PochhammerStream(std::size_t m) : PochhammerStream() {
  coeffs_.reserve(m * (m + 1) / 2 + 1);
  while (m_ < m) {
    advance();
  }
}

void PochhammerStream::advance() {
  const std::size_t d = m_ + 1;
  const std::size_t old_size = coeffs_.size();
  coeffs_.resize(old_size + d);
  // new[t] = old[t] - old[t - d]; walking downward keeps old[t - d] intact.
  for (std::size_t t = coeffs_.size(); t-- > d;) {
    if (!coeffs_[t - d].is_zero()) {
      coeffs_[t].add_scaled(coeffs_[t - d], -1);
    }
  }
  m_ = d;
}

TruncSeries PochhammerStream::to_series(std::size_t order) const {
  TruncSeries r(order);
  const std::size_t upto = std::min(order, degree());
  for (std::size_t t = 0; t <= upto; ++t) {
    r[t] = coeffs_[t];
  }
  return r;
}

}  // namespace qpoch
