#ifndef QPOCH_ORACLE_HPP
#define QPOCH_ORACLE_HPP

// Brute-force partition enumeration. Nothing in here touches the series
// machinery; it is the independent ground truth the closed forms and
// identities are checked against.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qpoch/coefficient.hpp"

namespace qpoch {

/// Non-increasing sequence of positive parts with cached statistics.
class Partition {
 public:
  Partition() = default;
  /// Throws UsageError unless parts are positive and non-increasing.
  explicit Partition(std::vector<std::uint32_t> parts);

  std::span<const std::uint32_t> parts() const noexcept { return parts_; }
  std::size_t num_parts() const noexcept { return parts_.size(); }
  /// 0 for the empty partition.
  std::uint32_t smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
  std::uint32_t largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  std::uint64_t weight() const noexcept { return weight_; }
  bool is_distinct() const noexcept { return distinct_; }

 private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t weight_ = 0;
  bool distinct_ = true;
};

struct OracleBudget {
  std::size_t signed_sum_max_n = 300;
  std::size_t eden_max_n = 100;
};

/// Calls visit once for every partition of n into distinct parts in
/// [min_part, max_part], parts passed largest first. The empty partition is
/// visited for n = 0.
void for_each_distinct_partition(std::size_t n, std::size_t min_part, std::size_t max_part,
                                 const std::function<void(std::span<const std::uint32_t>)>& visit);

/// sum over distinct-part partitions pi of n with s(pi) >= min_part of (-1)^nu(pi).
Coefficient signed_distinct_sum(std::size_t n, std::size_t min_part,
                                const OracleBudget& budget = {});

/// signed_distinct_sum for every n in [0, n_max] from one enumeration.
std::vector<std::int64_t> signed_distinct_profile(std::size_t n_max, std::size_t min_part,
                                                  const OracleBudget& budget = {});

/// Number of distinct-part partitions of each n in [0, n_max] with all parts >= min_part.
std::vector<std::int64_t> distinct_count_profile(std::size_t n_max, std::size_t min_part,
                                                 const OracleBudget& budget = {});

/// Partitions of n into exactly m parts where the largest part occurs
/// exactly k times and the remaining parts are distinct.
std::uint64_t eden_count(std::size_t k, std::size_t n, std::size_t m,
                         const OracleBudget& budget = {});

/// sum_m (-1)^m eden_count(k, n, m).
Coefficient eden_signed_sum(std::size_t k, std::size_t n, const OracleBudget& budget = {});

/// sum of (-1)^(nu+1) over non-empty partitions of n into distinct parts
/// congruent to 1 mod k, with largest part <= l_max.
Coefficient one_mod_k_signed_sum(std::size_t k, std::size_t n, std::size_t l_max,
                                 const OracleBudget& budget = {});

}  // namespace qpoch

#endif  // QPOCH_ORACLE_HPP
