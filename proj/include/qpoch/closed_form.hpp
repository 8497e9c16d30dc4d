#ifndef QPOCH_CLOSED_FORM_HPP
#define QPOCH_CLOSED_FORM_HPP

#include <cstdint>
#include <string>

#include "qpoch/big_index.hpp"
#include "qpoch/coefficient.hpp"
#include "qpoch/pentagonal.hpp"

namespace qpoch {

/// Which branch of the piecewise coefficient formula produced a value.
enum class CaseTag {
  a_plus,              // +1 run of (q^2;q)_inf
  a_minus,             // -1 run
  a_zero,              // zero run
  b_constant,          // -n
  b_rising,            // 1 - n + floor((i - p2(2n)) / 2)
  b_alternating_high,  // 1 + n, i = p2(2n) mod 2
  b_alternating_low,   // n,     i != p2(2n) mod 2
  b_falling,           // n - ceil((i - p2(2n+1)) / 2)
};

std::string to_string(CaseTag tag);

struct CoeffAnswer {
  Coefficient value;
  PentaBlock block;
  CaseTag case_tag;
};

/// Coefficient of q^j in (q^2;q)_inf; always -1, 0 or 1.
CoeffAnswer a_coeff(const BigIndex& j);

/// Coefficient of q^i in (q^3;q)_inf, exact at any index size.
CoeffAnswer b_coeff(const BigIndex& i);

/// Smallest i with |b_i| = magnitude, found by walking blocks and solving
/// each monotone branch for its first hit (no per-index scan).
BigIndex first_appearance(std::uint64_t magnitude);

}  // namespace qpoch

#endif  // QPOCH_CLOSED_FORM_HPP
