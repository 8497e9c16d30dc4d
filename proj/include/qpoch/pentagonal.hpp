#ifndef QPOCH_PENTAGONAL_HPP
#define QPOCH_PENTAGONAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qpoch/big_index.hpp"
#include "qpoch/series.hpp"

namespace qpoch {

/// n(3n-1)/2. Throws UsageError on 64-bit overflow.
std::uint64_t p1(std::uint64_t n);
/// n(3n+1)/2. Throws UsageError on 64-bit overflow.
std::uint64_t p2(std::uint64_t n);
BigIndex p1(const BigIndex& n);
BigIndex p2(const BigIndex& n);

/// (q;q)_inf modulo q^(order+1), generated term by term from the two
/// pentagonal families: (-1)^n at p1(n) and at p2(n).
TruncSeries pnt_series(std::size_t order);

enum class PentagonalFamily { first, second };

struct PentagonalHit {
  PentagonalFamily family;
  std::uint64_t n;
};

/// Inverse of p1/p2 on machine integers; 0 reports as (first, 0).
std::optional<PentagonalHit> pentagonal_lookup(std::uint64_t e);

/// True iff p2(n)-p1(n) > gap and p1(n+1)-p2(n) > gap for every gap < n <= n_max.
bool gap_check(std::uint64_t gap, std::uint64_t n_max);

/// Which interval structure a block belongs to: the a_j blocks
/// [p2(2n), p2(2n+2)) or the b_i blocks [p1(2n)-2, p1(2n+2)-3].
enum class BlockKind { a_series, b_series };

/// Sub-interval of a block that holds the queried index.
enum class Segment {
  a_plus,              // [p2(2n),   p1(2n+1))
  a_zero_after_plus,   // [p1(2n+1), p2(2n+1))
  a_minus,             // [p2(2n+1), p1(2n+2))
  a_zero_after_minus,  // [p1(2n+2), p2(2n+2))
  b_constant,          // [p1(2n)-2,   p2(2n)-1]
  b_rising,            // [p2(2n),     p1(2n+1)-2]
  b_alternating,       // [p1(2n+1)-1, p2(2n+1)-2]
  b_falling,           // [p2(2n+1)-1, p1(2n+2)-3]
};

std::string to_string(Segment s);

struct PentaBlock {
  BigIndex n;
  BlockKind kind;
  Segment segment;
  BigIndex lower;  // closed; the n = 0 b-block is clamped from -2 to 0
  BigIndex upper;
  bool upper_closed;

  bool contains(const BigIndex& x) const {
    return lower <= x && (upper_closed ? x <= upper : x < upper);
  }
};

/// The unique n with p2(2n) <= j < p2(2n+2), by exact search.
PentaBlock locate_block_a(const BigIndex& j);
/// The unique n with p1(2n)-2 <= i <= p1(2n+2)-3, by exact search.
PentaBlock locate_block_b(const BigIndex& i);

}  // namespace qpoch

#endif  // QPOCH_PENTAGONAL_HPP
