#include "qpoch/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qpoch/closed_form.hpp"
#include "qpoch/errors.hpp"
#include "qpoch/f_series.hpp"
#include "qpoch/parallel.hpp"
#include "qpoch/pentagonal.hpp"
#include "qpoch/series.hpp"

namespace qpoch {

namespace {

std::size_t poch_degree(std::size_t m) { return m * (m + 1) / 2; }

// |coefficients of (q;q)_m| <= 2^m, so digits <= m log10(2) + 1.
std::size_t poch_digit_bound(std::size_t m) {
  return static_cast<std::size_t>(static_cast<double>(m) * 0.30103) + 1;
}

std::size_t estimate_bytes(std::size_t order, std::size_t digits) {
  const std::size_t limb_bytes = digits > 18 ? digits / 2 + sizeof(mpz_class) : 0;
  return (order + 1) * (sizeof(Coefficient) + limb_bytes);
}

void check_poch_budget(std::size_t m, const ResourceBudget& budget) {
  const std::size_t deg = poch_degree(m);
  const std::size_t digits = poch_digit_bound(m);
  if (deg > budget.max_order || digits > budget.max_digits) {
    throw ResourceError("(q;q)_" + std::to_string(m) + " needs degree " + std::to_string(deg) +
                            " (budget " + std::to_string(budget.max_order) + ") and up to " +
                            std::to_string(digits) + " digits (budget " +
                            std::to_string(budget.max_digits) + "); estimated " +
                            std::to_string(estimate_bytes(deg, digits)) + " bytes",
                        estimate_bytes(deg, digits));
  }
}

void check_eden_budget(std::size_t k, const ResourceBudget& budget) {
  const std::uint64_t bound = shat_bound(k);
  if (bound > budget.max_order) {
    throw ResourceError("F_" + std::to_string(k) + " must be examined to exponent " +
                            std::to_string(bound) + " (budget " +
                            std::to_string(budget.max_order) + "); estimated " +
                            std::to_string(estimate_bytes(bound, 0)) + " bytes",
                        estimate_bytes(bound, 0));
  }
}

ClassRecord record_of(SubjectKind kind, std::size_t index, std::span<const Coefficient> coeffs) {
  MaxAbs best = max_abs(coeffs);
  return ClassRecord{kind, index, std::move(best.value), best.witness, coeffs.size() - 1};
}

}  // namespace

std::uint64_t s_cutoff(std::uint64_t h) {
  if (h == 0) {
    throw UsageError("s_cutoff: h must be positive");
  }
  return (h + 2) * (6 * h + 17);
}

std::uint64_t shat_bound(std::uint64_t k) {
  if (k == 0) {
    throw UsageError("shat_bound: k must be positive");
  }
  return (k - 1) * (3 * k * k * k - 3 * k * k + 10 * k - 8) / 8;
}

ClassRecord poch_class(std::size_t m, const ResourceBudget& budget) {
  check_poch_budget(m, budget);
  PochhammerStream stream(m);
  return record_of(SubjectKind::pochhammer, m, stream.coeffs());
}

std::vector<ClassRecord> poch_sweep(std::size_t m_max, const SweepOptions& options) {
  check_poch_budget(m_max, options.budget);
  const std::size_t count = m_max + 1;
  const std::size_t chunks = std::max<std::size_t>(1, std::min(options.workers, count));
  std::vector<std::optional<ClassRecord>> slots(count);

  // Each chunk streams its own contiguous range of m.
  parallel_for(options.workers, chunks, [&](std::size_t c) {
    const std::size_t lo = c * count / chunks;
    const std::size_t hi = (c + 1) * count / chunks;
    if (lo >= hi) {
      return;
    }
    PochhammerStream stream(lo);
    for (std::size_t m = lo; m < hi; ++m) {
      if (m > lo) {
        stream.advance();
      }
      slots[m] = record_of(SubjectKind::pochhammer, m, stream.coeffs());
    }
  });

  std::vector<ClassRecord> out;
  out.reserve(count);
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

ClassRecord eden_class(std::size_t k, const ResourceBudget& budget) {
  if (k == 0) {
    throw UsageError("eden_class: k must be positive");
  }
  check_eden_budget(k, budget);
  const std::size_t bound = shat_bound(k);
  TruncSeries f = F_direct(k, kInfinite, bound);
  return record_of(SubjectKind::eden, k, f.coeffs());
}

std::vector<ClassRecord> eden_sweep(std::size_t k_max, const SweepOptions& options) {
  if (k_max == 0) {
    return {};
  }
  check_eden_budget(k_max, options.budget);
  std::vector<std::optional<ClassRecord>> slots(k_max);
  // Largest k first: it dominates the cost, so it should start earliest.
  parallel_for(options.workers, k_max, [&](std::size_t i) {
    const std::size_t k = k_max - i;
    slots[k - 1] = eden_class(k, options.budget);
  });
  std::vector<ClassRecord> out;
  out.reserve(k_max);
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

HTable s_table_from_records(std::uint64_t h_max, const std::vector<ClassRecord>& records) {
  HTable table{TableKind::s, {}, records.empty() ? 0 : records.back().index};
  for (std::uint64_t h = 1; h <= h_max; ++h) {
    table.rows[h] = HRow{{}, s_cutoff(h)};
  }
  for (const ClassRecord& r : records) {
    if (!r.h.is_small()) {
      continue;
    }
    const std::int64_t h = r.h.small_value();
    if (h >= 1 && static_cast<std::uint64_t>(h) <= h_max) {
      table.rows[static_cast<std::uint64_t>(h)].members.push_back(r.index);
    }
  }
  for (auto& [h, row] : table.rows) {
    std::sort(row.members.begin(), row.members.end());
  }
  return table;
}

HTable build_s_table(std::uint64_t h_max, const SweepOptions& options) {
  if (h_max == 0) {
    throw UsageError("build_s_table: h_max must be positive");
  }
  return s_table_from_records(h_max, poch_sweep(s_cutoff(h_max), options));
}

HTable shat_table_from_records(const std::vector<ClassRecord>& records) {
  HTable table{TableKind::shat, {}, records.empty() ? 0 : records.back().index};
  std::int64_t top = 0;
  for (const ClassRecord& r : records) {
    if (!r.h.is_small()) {
      throw ConsistencyError("F_" + std::to_string(r.index) + " has a huge coefficient");
    }
    top = std::max(top, r.h.small_value());
  }
  for (std::int64_t h = 1; h <= top; ++h) {
    table.rows[static_cast<std::uint64_t>(h)] = HRow{};
  }
  for (const ClassRecord& r : records) {
    if (r.h.small_value() >= 1) {
      table.rows[static_cast<std::uint64_t>(r.h.small_value())].members.push_back(r.index);
    }
  }
  for (auto& [h, row] : table.rows) {
    std::sort(row.members.begin(), row.members.end());
  }
  return table;
}

HTable build_shat_table(std::size_t k_max, const SweepOptions& options) {
  return shat_table_from_records(eden_sweep(k_max, options));
}

WindowTerms window_terms(std::size_t m, std::size_t exponent) {
  if (m == 0 || exponent < 2 * m || exponent >= 3 * m) {
    throw UsageError("window_terms: need 2m <= exponent < 3m, got m = " + std::to_string(m) +
                     ", exponent = " + std::to_string(exponent));
  }
  WindowTerms w{m, exponent, {}, {}, {}, {}};
  w.direct = coeff(pochhammer(1, 1, m - 1, exponent), exponent);
  w.pnt_term = coeff(pnt_series(exponent), exponent);
  w.a_term = a_coeff(BigIndex(exponent - m)).value;
  w.b_term = b_coeff(BigIndex(exponent - 2 * m)).value;
  return w;
}

bool window_check(std::size_t m) {
  if (m < 22) {
    throw UsageError("window_check: m must be at least 22");
  }
  if (m == 42) {
    return coeff(pochhammer(1, 1, 41, 51), 51) == Coefficient(2);
  }
  const std::size_t e = 2 * m + 69;
  const Coefficient c = coeff(pochhammer(1, 1, m - 1, e), e);
  const Coefficient hi(m > 69 ? 6 : 12);
  return Coefficient(2) <= c && c <= hi;
}

ConjectureReport conjecture_scan(std::uint64_t h_max, const SweepOptions& options) {
  ConjectureReport report{h_max, build_s_table(h_max, options), {}, true, true, true, {}, {}};

  std::optional<std::size_t> previous;
  for (const auto& [h, row] : report.table.rows) {
    if (h <= 16) {
      continue;
    }
    report.rows_above_16.push_back(h);
    if (row.members.size() > 1) {
      report.at_most_one_member = false;
    }
    if (!row.members.empty()) {
      if (previous && row.members.front() <= *previous) {
        report.increasing = false;
      }
      previous = row.members.front();
    }
  }

  std::set<std::size_t> seen;
  for (const auto& [h, row] : report.table.rows) {
    seen.insert(row.members.begin(), row.members.end());
    const std::size_t top = seen.empty() ? 0 : *seen.rbegin();
    if (!seen.empty() && seen.size() == top + 1 && *seen.begin() == 0) {
      report.consecutive_union[h] = top;
    } else {
      report.consecutive_union[h] = std::nullopt;
      if (h > 5) {
        report.consecutive = false;
      }
    }
    report.union_members[h] = std::vector<std::size_t>(seen.begin(), seen.end());
  }
  return report;
}

std::string ConjectureReport::to_text() const {
  std::ostringstream os;
  os << "EMPIRICAL conjecture scan over S_1..S_" << h_max << " (m <= "
     << table.subjects_upto << "); computational evidence only, not a proof\n";
  for (const auto& [h, row] : table.rows) {
    os << "  S_" << h << " = {";
    for (std::size_t i = 0; i < row.members.size(); ++i) {
      os << (i ? "," : "") << row.members[i];
    }
    os << "}\n";
  }
  if (rows_above_16.empty()) {
    os << "  singleton clause (h > 16): no rows in range; no counterexample, no evidence\n";
    os << "  increasing clause (h > 16): no rows in range; no counterexample, no evidence\n";
  } else {
    os << "  singleton clause (h > 16): "
       << (at_most_one_member ? "no counterexample" : "COUNTEREXAMPLE") << " in "
       << rows_above_16.size() << " rows\n";
    os << "  increasing clause (h > 16): "
       << (increasing ? "no counterexample" : "COUNTEREXAMPLE") << "\n";
  }
  bool any_clause_row = false;
  for (const auto& [h, top] : consecutive_union) {
    const bool in_clause = h > 5;
    any_clause_row = any_clause_row || in_clause;
    os << "  union S_1..S_" << h << ": ";
    if (top) {
      os << "{0.." << *top << "}";
    } else {
      const auto& members = union_members.at(h);
      os << "not consecutive, missing {";
      std::size_t expect = 0;
      bool first = true;
      for (std::size_t v : members) {
        for (; expect < v; ++expect) {
          os << (first ? "" : ",") << expect;
          first = false;
        }
        expect = v + 1;
      }
      os << "} below " << (members.empty() ? 0 : members.back());
      if (in_clause) {
        os << " (COUNTEREXAMPLE)";
      }
    }
    os << (in_clause ? "" : " (outside clause h > 5)") << "\n";
  }
  if (!any_clause_row) {
    os << "  consecutive clause (h > 5): no rows in range; no counterexample, no evidence\n";
  } else {
    os << "  consecutive clause (h > 5): " << (consecutive ? "no counterexample" : "COUNTEREXAMPLE")
       << "\n";
  }
  return os.str();
}

}  // namespace qpoch
