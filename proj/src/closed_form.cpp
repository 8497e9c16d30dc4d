#include "qpoch/closed_form.hpp"

#include <optional>

#include "qpoch/errors.hpp"

namespace qpoch {

namespace {

mpz_class pent1(const mpz_class& n) { return p1(BigIndex(n)).value(); }
mpz_class pent2(const mpz_class& n) { return p2(BigIndex(n)).value(); }

mpz_class floor_half(const mpz_class& x) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), 1);
  return r;
}

mpz_class ceil_half(const mpz_class& x) {
  mpz_class r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), 1);
  return r;
}

bool same_parity(const mpz_class& a, const mpz_class& b) {
  return mpz_even_p(a.get_mpz_t()) == mpz_even_p(b.get_mpz_t());
}

// Segment bounds of the b-block with index n, all closed.
struct BBlockBounds {
  mpz_class constant_lo, constant_hi;
  mpz_class rising_lo, rising_hi;
  mpz_class alt_lo, alt_hi;
  mpz_class falling_lo, falling_hi;
  mpz_class p2_2n, p2_2n1;
};

BBlockBounds b_bounds(const mpz_class& n) {
  const mpz_class t = 2 * n;
  BBlockBounds b;
  b.p2_2n = pent2(t);
  b.p2_2n1 = pent2(t + 1);
  b.constant_lo = pent1(t) - 2;
  if (b.constant_lo < 0) {
    b.constant_lo = 0;
  }
  b.constant_hi = b.p2_2n - 1;
  b.rising_lo = b.p2_2n;
  b.rising_hi = pent1(t + 1) - 2;
  b.alt_lo = pent1(t + 1) - 1;
  b.alt_hi = b.p2_2n1 - 2;
  b.falling_lo = b.p2_2n1 - 1;
  b.falling_hi = pent1(t + 2) - 3;
  return b;
}

void keep_min(std::optional<mpz_class>& best, const mpz_class& candidate) {
  if (!best || candidate < *best) {
    best = candidate;
  }
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::a_plus: return "a_plus";
    case CaseTag::a_minus: return "a_minus";
    case CaseTag::a_zero: return "a_zero";
    case CaseTag::b_constant: return "b_constant";
    case CaseTag::b_rising: return "b_rising";
    case CaseTag::b_alternating_high: return "b_alternating_high";
    case CaseTag::b_alternating_low: return "b_alternating_low";
    case CaseTag::b_falling: return "b_falling";
  }
  return "?";
}

CoeffAnswer a_coeff(const BigIndex& j) {
  PentaBlock block = locate_block_a(j);
  switch (block.segment) {
    case Segment::a_plus:
      return {Coefficient(1), std::move(block), CaseTag::a_plus};
    case Segment::a_minus:
      return {Coefficient(-1), std::move(block), CaseTag::a_minus};
    case Segment::a_zero_after_plus:
    case Segment::a_zero_after_minus:
      return {Coefficient(0), std::move(block), CaseTag::a_zero};
    default:
      throw ConsistencyError("locate_block_a returned a b-segment");
  }
}

CoeffAnswer b_coeff(const BigIndex& i) {
  PentaBlock block = locate_block_b(i);
  const mpz_class& x = i.value();
  const mpz_class& n = block.n.value();
  const mpz_class t = 2 * n;

  switch (block.segment) {
    case Segment::b_constant:
      return {Coefficient(mpz_class(-n)), std::move(block), CaseTag::b_constant};
    case Segment::b_rising: {
      mpz_class v = 1 - n + floor_half(x - pent2(t));
      return {Coefficient(v), std::move(block), CaseTag::b_rising};
    }
    case Segment::b_alternating:
      if (same_parity(x, pent2(t))) {
        return {Coefficient(mpz_class(n + 1)), std::move(block), CaseTag::b_alternating_high};
      }
      return {Coefficient(n), std::move(block), CaseTag::b_alternating_low};
    case Segment::b_falling: {
      mpz_class v = n - ceil_half(x - pent2(t + 1));
      return {Coefficient(v), std::move(block), CaseTag::b_falling};
    }
    default:
      throw ConsistencyError("locate_block_b returned an a-segment");
  }
}

BigIndex first_appearance(std::uint64_t magnitude) {
  if (magnitude == 0) {
    throw UsageError("first_appearance: magnitude must be positive");
  }
  const mpz_class c(static_cast<unsigned long>(magnitude));

  // Block n takes values in [-n, n+1], so the walk ends by n = magnitude.
  for (mpz_class n = 0;; ++n) {
    const BBlockBounds b = b_bounds(n);
    std::optional<mpz_class> best;

    if (b.constant_lo <= b.constant_hi && n == c) {
      keep_min(best, b.constant_lo);
    }

    // Rising: v(i) = 1 - n + floor((i - lo) / 2), first hit of t at lo + 2(t - (1 - n)).
    if (b.rising_lo <= b.rising_hi) {
      for (const mpz_class& target : {mpz_class(-c), c}) {
        mpz_class steps = target - (1 - n);
        if (steps >= 0) {
          mpz_class i = b.rising_lo + 2 * steps;
          if (i <= b.rising_hi) {
            keep_min(best, i);
          }
        }
      }
    }

    // Alternating: n + 1 on the parity of p2(2n), n on the other.
    if (b.alt_lo <= b.alt_hi) {
      for (const mpz_class& value : {mpz_class(n + 1), n}) {
        if (value != c) {
          continue;
        }
        const bool want_same = value == n + 1;
        mpz_class i = b.alt_lo;
        if (same_parity(i, b.p2_2n) != want_same) {
          i += 1;
        }
        if (i <= b.alt_hi) {
          keep_min(best, i);
        }
      }
    }

    // Falling: v(i) = n - ceil((i - p2(2n+1)) / 2), starting at lo = p2(2n+1) - 1.
    if (b.falling_lo <= b.falling_hi) {
      for (const mpz_class& target : {mpz_class(-c), c}) {
        mpz_class d = n - target;
        if (d < 0) {
          continue;
        }
        mpz_class i = d == 0 ? b.falling_lo : mpz_class(b.p2_2n1 + 2 * d - 1);
        if (i <= b.falling_hi) {
          keep_min(best, i);
        }
      }
    }

    if (best) {
      return BigIndex(*best);
    }
  }
}

}  // namespace qpoch
