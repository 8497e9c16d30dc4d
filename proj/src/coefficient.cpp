#include "qpoch/coefficient.hpp"

#include <cctype>

#include "qpoch/errors.hpp"

namespace qpoch {

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP long interop assumes LP64");

mpz_class widen(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Coefficient::Coefficient(const mpz_class& v) { assign(v); }

void Coefficient::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = v.get_si();
    big_.reset();
  } else if (big_) {
    *big_ = v;
  } else {
    big_ = std::make_unique<mpz_class>(v);
  }
}

Coefficient Coefficient::from_string(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    pos = 1;
  }
  if (pos == text.size()) {
    throw UsageError("malformed integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw UsageError("malformed integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Coefficient(mpz_class(digits, 10));
}

mpz_class Coefficient::to_mpz() const { return big_ ? *big_ : widen(small_); }

std::string Coefficient::to_string() const {
  return big_ ? big_->get_str(10) : std::to_string(small_);
}

int Coefficient::sign() const noexcept {
  if (big_) {
    return sgn(*big_);
  }
  return (small_ > 0) - (small_ < 0);
}

Coefficient Coefficient::abs() const {
  if (!big_ && small_ != INT64_MIN) {
    return Coefficient(small_ < 0 ? -small_ : small_);
  }
  return Coefficient(mpz_class(::abs(to_mpz())));
}

std::size_t Coefficient::digits() const {
  // mpz_sizeinbase may overshoot by one; the string is exact.
  return abs().to_string().size();
}

Coefficient& Coefficient::add_slow(const Coefficient& rhs, int sign) {
  mpz_class r = to_mpz();
  if (sign > 0) {
    r += rhs.to_mpz();
  } else {
    r -= rhs.to_mpz();
  }
  assign(r);
  return *this;
}

void Coefficient::add_scaled_slow(const Coefficient& x, std::int64_t factor) {
  mpz_class r = to_mpz();
  mpz_class f = widen(factor);
  if (x.big_) {
    r += *x.big_ * f;
  } else {
    r += widen(x.small_) * f;
  }
  assign(r);
}

void Coefficient::add_product_slow(const Coefficient& a, const Coefficient& b) {
  mpz_class r = to_mpz();
  r += a.to_mpz() * b.to_mpz();
  assign(r);
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  std::int64_t p;
  if (!big_ && !rhs.big_ && !__builtin_mul_overflow(small_, rhs.small_, &p)) {
    small_ = p;
    return *this;
  }
  assign(to_mpz() * rhs.to_mpz());
  return *this;
}

Coefficient operator-(const Coefficient& a) {
  if (!a.big_ && a.small_ != INT64_MIN) {
    return Coefficient(-a.small_);
  }
  return Coefficient(mpz_class(-a.to_mpz()));
}

bool operator==(const Coefficient& a, const Coefficient& b) noexcept {
  // Normalization makes the representation canonical.
  if (!a.big_ && !b.big_) {
    return a.small_ == b.small_;
  }
  if (a.big_ && b.big_) {
    return *a.big_ == *b.big_;
  }
  return false;
}

std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
  if (!a.big_ && !b.big_) {
    return a.small_ <=> b.small_;
  }
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare_abs(const Coefficient& a, const Coefficient& b) {
  if (!a.big_ && !b.big_ && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
    std::int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    std::int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    return x <=> y;
  }
  int c = mpz_cmpabs(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace qpoch
