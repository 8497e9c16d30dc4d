#include "qpoch/oracle.hpp"

#include <algorithm>
#include <string>

#include "qpoch/errors.hpp"

namespace qpoch {

namespace {

void check_budget(std::size_t n, std::size_t limit, const char* op) {
  if (n > limit) {
    throw ResourceError(std::string(op) + ": n = " + std::to_string(n) +
                            " exceeds the enumeration budget " + std::to_string(limit),
                        0);
  }
}

// Sum of the distinct integers lo..hi (0 if hi < lo).
std::size_t range_sum(std::size_t lo, std::size_t hi) {
  return hi < lo ? 0 : (lo + hi) * (hi - lo + 1) / 2;
}

void descend(std::size_t remaining, std::size_t upper, std::size_t min_part,
             std::vector<std::uint32_t>& parts,
             const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (std::size_t p = std::min(upper, remaining); p >= min_part && p > 0; --p) {
    if (range_sum(min_part, p) < remaining) {
      break;  // even every part from min_part to p cannot reach remaining
    }
    parts.push_back(static_cast<std::uint32_t>(p));
    descend(remaining - p, p - 1, min_part, parts, visit);
    parts.pop_back();
  }
}

// Every set of distinct parts in [lo, below) with weight <= n_max adds
// weight_of(sign) to hist[weight]. Each set is one node of the descent.
void tally(std::size_t below, std::size_t lo, std::size_t weight, std::int64_t sign,
           std::size_t n_max, bool use_sign, std::vector<std::int64_t>& hist) {
  hist[weight] += use_sign ? sign : 1;
  const std::size_t room = n_max - weight;
  for (std::size_t q = std::min(below - 1, room); q >= lo && q > 0; --q) {
    tally(q, lo, weight + q, -sign, n_max, use_sign, hist);
  }
}

// Every distinct-part partition with parts >= min_part splits uniquely into
// its parts <= cut and its parts > cut. Both halves are enumerated by
// descent and tallied by weight; the convolution of the two tallies counts
// each whole partition exactly once.
std::vector<std::int64_t> split_profile(std::size_t n_max, std::size_t min_part, bool use_sign) {
  std::size_t cut = 0;
  while (range_sum(1, cut + 1) <= n_max) {
    ++cut;
  }
  cut = std::min(cut, n_max);

  std::vector<std::int64_t> small(n_max + 1, 0);
  if (min_part <= cut) {
    tally(cut + 1, min_part, 0, 1, n_max, use_sign, small);
  } else {
    small[0] = 1;
  }
  std::vector<std::int64_t> large(n_max + 1, 0);
  tally(n_max + 1, std::max(cut + 1, min_part), 0, 1, n_max, use_sign, large);

  std::vector<std::int64_t> out(n_max + 1, 0);
  for (std::size_t a = 0; a <= n_max; ++a) {
    if (small[a] == 0) {
      continue;
    }
    for (std::size_t b = 0; a + b <= n_max; ++b) {
      out[a + b] += small[a] * large[b];
    }
  }
  return out;
}

void require_min_part(std::size_t min_part) {
  if (min_part == 0) {
    throw UsageError("min_part must be positive");
  }
}

}  // namespace

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) {
      throw UsageError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw UsageError("partition parts must be non-increasing");
    }
    if (i > 0 && parts_[i] == parts_[i - 1]) {
      distinct_ = false;
    }
    weight_ += parts_[i];
  }
}

void for_each_distinct_partition(std::size_t n, std::size_t min_part, std::size_t max_part,
                                 const std::function<void(std::span<const std::uint32_t>)>& visit) {
  require_min_part(min_part);
  std::vector<std::uint32_t> parts;
  descend(n, max_part, min_part, parts, visit);
}

std::vector<std::int64_t> signed_distinct_profile(std::size_t n_max, std::size_t min_part,
                                                  const OracleBudget& budget) {
  require_min_part(min_part);
  check_budget(n_max, budget.signed_sum_max_n, "signed_distinct_profile");
  return split_profile(n_max, min_part, true);
}

std::vector<std::int64_t> distinct_count_profile(std::size_t n_max, std::size_t min_part,
                                                 const OracleBudget& budget) {
  require_min_part(min_part);
  check_budget(n_max, budget.signed_sum_max_n, "distinct_count_profile");
  return split_profile(n_max, min_part, false);
}

Coefficient signed_distinct_sum(std::size_t n, std::size_t min_part, const OracleBudget& budget) {
  return Coefficient(signed_distinct_profile(n, min_part, budget)[n]);
}

std::uint64_t eden_count(std::size_t k, std::size_t n, std::size_t m,
                         const OracleBudget& budget) {
  if (k == 0) {
    throw UsageError("eden_count: k must be positive");
  }
  check_budget(n, budget.eden_max_n, "eden_count");
  if (m < k) {
    return 0;
  }
  std::uint64_t count = 0;
  for (std::size_t largest = 1; k * largest <= n; ++largest) {
    for_each_distinct_partition(n - k * largest, 1, largest - 1,
                                [&](std::span<const std::uint32_t> rest) {
                                  if (rest.size() + k == m) {
                                    ++count;
                                  }
                                });
  }
  return count;
}

Coefficient eden_signed_sum(std::size_t k, std::size_t n, const OracleBudget& budget) {
  if (k == 0) {
    throw UsageError("eden_signed_sum: k must be positive");
  }
  check_budget(n, budget.eden_max_n, "eden_signed_sum");
  std::int64_t total = 0;
  for (std::size_t largest = 1; k * largest <= n; ++largest) {
    for_each_distinct_partition(n - k * largest, 1, largest - 1,
                                [&](std::span<const std::uint32_t> rest) {
                                  total += (rest.size() + k) % 2 == 0 ? 1 : -1;
                                });
  }
  return Coefficient(total);
}

Coefficient one_mod_k_signed_sum(std::size_t k, std::size_t n, std::size_t l_max,
                                 const OracleBudget& budget) {
  if (k == 0) {
    throw UsageError("one_mod_k_signed_sum: k must be positive");
  }
  check_budget(n, budget.signed_sum_max_n, "one_mod_k_signed_sum");
  if (n == 0) {
    return Coefficient(0);  // only the empty partition, which is excluded
  }
  std::int64_t total = 0;
  // parts are 1 + k*t; descend over t
  std::function<void(std::size_t, std::size_t, std::size_t)> go =
      [&](std::size_t remaining, std::size_t t_below, std::size_t count) {
        if (remaining == 0) {
          total += (count + 1) % 2 == 0 ? 1 : -1;
          return;
        }
        for (std::size_t t = t_below; t-- > 0;) {
          const std::size_t part = 1 + k * t;
          if (part <= remaining) {
            go(remaining - part, t, count + 1);
          }
        }
      };
  const std::size_t top = std::min(l_max, n);
  if (top >= 1) {
    go(n, (top - 1) / k + 1, 0);
  }
  return Coefficient(total);
}

}  // namespace qpoch
