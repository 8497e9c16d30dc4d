#include "qpoch/pentagonal.hpp"

#include <functional>

#include "qpoch/errors.hpp"

namespace qpoch {

namespace {

mpz_class penta1(const mpz_class& n) {
  mpz_class r = n * (3 * n - 1);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
  return r;
}

mpz_class penta2(const mpz_class& n) {
  mpz_class r = n * (3 * n + 1);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
  return r;
}

// Largest n >= 0 with f(n) <= target, for f strictly increasing with
// f(0) <= target. Every f used here grows like 6n^2, so isqrt(target/6)
// brackets the answer to within a few steps; the bracket is verified and
// widened by doubling if it ever fails, and the final step is a plain
// exact bisection.
mpz_class largest_below(const std::function<mpz_class(const mpz_class&)>& f,
                        const mpz_class& target) {
  mpz_class guess = 0;
  if (target > 0) {
    mpz_class t6 = target / 6;
    mpz_sqrt(guess.get_mpz_t(), t6.get_mpz_t());
  }
  mpz_class lo = guess > 2 ? mpz_class(guess - 2) : mpz_class(0);
  if (f(lo) > target) {
    lo = 0;
  }
  mpz_class hi = guess + 2;
  while (f(hi) <= target) {
    hi = 2 * hi + 1;
  }
  // f(lo) <= target < f(hi)
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (f(mid) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t checked_penta(std::uint64_t n, int offset) {
  if (n == 0) {
    return 0;
  }
  using u128 = unsigned __int128;
  const u128 v = static_cast<u128>(n) * (3 * static_cast<u128>(n) + offset) / 2;
  if (v > UINT64_MAX) {
    throw UsageError("pentagonal number overflows 64 bits at n = " + std::to_string(n));
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t p1(std::uint64_t n) { return checked_penta(n, -1); }
std::uint64_t p2(std::uint64_t n) { return checked_penta(n, 1); }

BigIndex p1(const BigIndex& n) { return BigIndex(penta1(n.value())); }
BigIndex p2(const BigIndex& n) { return BigIndex(penta2(n.value())); }

TruncSeries pnt_series(std::size_t order) {
  TruncSeries s(order);
  for (std::uint64_t n = 0;; ++n) {
    const std::uint64_t e1 = p1(n);
    if (e1 > order) {
      break;
    }
    const int sign = (n % 2 == 0) ? 1 : -1;
    s[e1] = Coefficient(sign);
    const std::uint64_t e2 = p2(n);
    if (n > 0 && e2 <= order) {
      s[e2] = Coefficient(sign);
    }
  }
  return s;
}

std::optional<PentagonalHit> pentagonal_lookup(std::uint64_t e) {
  // e = p1(n) <=> 24e+1 = (6n-1)^2 ;  e = p2(n) <=> 24e+1 = (6n+1)^2
  mpz_class d = mpz_class(static_cast<unsigned long>(e)) * 24 + 1;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
  const unsigned long r = mpz_fdiv_ui(s.get_mpz_t(), 6);
  if (r == 5) {
    mpz_class n = (s + 1) / 6;
    return PentagonalHit{PentagonalFamily::first, n.get_ui()};
  }
  if (r == 1) {
    mpz_class n = (s - 1) / 6;
    if (n == 0) {
      return PentagonalHit{PentagonalFamily::first, 0};
    }
    return PentagonalHit{PentagonalFamily::second, n.get_ui()};
  }
  return std::nullopt;
}

bool gap_check(std::uint64_t gap, std::uint64_t n_max) {
  for (std::uint64_t n = gap + 1; n <= n_max; ++n) {
    if (p2(n) - p1(n) <= gap || p1(n + 1) - p2(n) <= gap) {
      return false;
    }
  }
  return true;
}

std::string to_string(Segment s) {
  switch (s) {
    case Segment::a_plus: return "a_plus";
    case Segment::a_zero_after_plus: return "a_zero_after_plus";
    case Segment::a_minus: return "a_minus";
    case Segment::a_zero_after_minus: return "a_zero_after_minus";
    case Segment::b_constant: return "b_constant";
    case Segment::b_rising: return "b_rising";
    case Segment::b_alternating: return "b_alternating";
    case Segment::b_falling: return "b_falling";
  }
  return "?";
}

PentaBlock locate_block_a(const BigIndex& j) {
  const mpz_class& x = j.value();
  mpz_class n = largest_below([](const mpz_class& k) { return penta2(2 * k); }, x);
  const mpz_class two_n = 2 * n;

  Segment seg;
  if (x < penta1(two_n + 1)) {
    seg = Segment::a_plus;
  } else if (x < penta2(two_n + 1)) {
    seg = Segment::a_zero_after_plus;
  } else if (x < penta1(two_n + 2)) {
    seg = Segment::a_minus;
  } else {
    seg = Segment::a_zero_after_minus;
  }
  return PentaBlock{BigIndex(n), BlockKind::a_series, seg, BigIndex(penta2(two_n)),
                    BigIndex(penta2(two_n + 2)), false};
}

PentaBlock locate_block_b(const BigIndex& i) {
  const mpz_class& x = i.value();
  // p1(2n) - 2 <= x  <=>  p1(2n) <= x + 2
  mpz_class n = largest_below([](const mpz_class& k) { return penta1(2 * k); }, x + 2);
  const mpz_class two_n = 2 * n;

  Segment seg;
  if (x <= penta2(two_n) - 1) {
    seg = Segment::b_constant;
  } else if (x <= penta1(two_n + 1) - 2) {
    seg = Segment::b_rising;
  } else if (x <= penta2(two_n + 1) - 2) {
    seg = Segment::b_alternating;
  } else {
    seg = Segment::b_falling;
  }
  mpz_class lower = penta1(two_n) - 2;
  if (lower < 0) {
    lower = 0;
  }
  return PentaBlock{BigIndex(n), BlockKind::b_series, seg, BigIndex(lower),
                    BigIndex(penta1(two_n + 2) - 3), true};
}

}  // namespace qpoch
