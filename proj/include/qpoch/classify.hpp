#ifndef QPOCH_CLASSIFY_HPP
#define QPOCH_CLASSIFY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpoch/coefficient.hpp"

namespace qpoch {

/// Hard limits for classification sweeps. Exceeding one throws
/// ResourceError up front; nothing is silently truncated.
struct ResourceBudget {
  std::size_t max_order = 2'000'000;  // largest series/polynomial degree built
  std::size_t max_digits = 100'000;   // largest coefficient size allowed, decimal digits
};

struct SweepOptions {
  std::size_t workers = 1;
  ResourceBudget budget{};
};

enum class SubjectKind { pochhammer, eden };

/// Largest |coefficient| of (q;q)_m or of F_k over the examined range.
struct ClassRecord {
  SubjectKind kind;
  std::size_t index;      // m or k
  Coefficient h;
  std::size_t witness;    // smallest exponent with |coefficient| = h
  std::size_t bound_used; // coefficients 0..bound_used were examined
};

/// (h+2)(6h+17) = p1(2h+5) - 1: every m beyond it has max |coefficient| > h.
std::uint64_t s_cutoff(std::uint64_t h);

/// (k-1)(3k^3-3k^2+10k-8)/8 = p1(k(k-1)/2 + 1) - k: F_k is classified by its
/// coefficients up to this exponent.
std::uint64_t shat_bound(std::uint64_t k);

ClassRecord poch_class(std::size_t m, const ResourceBudget& budget = {});

/// poch_class for every m in [0, m_max], streaming (q;q)_m in place.
std::vector<ClassRecord> poch_sweep(std::size_t m_max, const SweepOptions& options = {});

ClassRecord eden_class(std::size_t k, const ResourceBudget& budget = {});

/// eden_class for every k in [1, k_max].
std::vector<ClassRecord> eden_sweep(std::size_t k_max, const SweepOptions& options = {});

enum class TableKind { s, shat };

struct HRow {
  std::vector<std::size_t> members;    // ascending
  std::optional<std::uint64_t> cutoff; // S tables only
};

struct HTable {
  TableKind kind;
  std::map<std::uint64_t, HRow> rows;  // keyed by h
  /// Largest subject index that was classified.
  std::size_t subjects_upto = 0;
};

/// S_h for h = 1..h_max, from every m <= s_cutoff(h_max).
HTable build_s_table(std::uint64_t h_max, const SweepOptions& options = {});
HTable s_table_from_records(std::uint64_t h_max, const std::vector<ClassRecord>& records);

/// S-hat rows from F_1..F_k_max; rows run h = 1..(largest h seen).
HTable build_shat_table(std::size_t k_max, const SweepOptions& options = {});
HTable shat_table_from_records(const std::vector<ClassRecord>& records);

/// Coefficient of q^exponent in (q;q)_{m-1} alongside the three pieces
/// that produce it when 2m <= exponent < 3m:
///   [q^e](q;q)_inf + [q^(e-m)](q^2;q)_inf + [q^(e-2m)](q^3;q)_inf.
struct WindowTerms {
  std::size_t m;
  std::size_t exponent;
  Coefficient direct;
  Coefficient pnt_term;
  Coefficient a_term;
  Coefficient b_term;

  Coefficient three_term_sum() const { return pnt_term + a_term + b_term; }
};

WindowTerms window_terms(std::size_t m, std::size_t exponent);

/// Coefficient of q^(2m+69) in (q;q)_{m-1} lies in [2, 6] for m > 69 and in
/// [2, 12] for 22 <= m <= 69; m = 42 instead checks [q^51](q;q)_41 = 2.
bool window_check(std::size_t m);

struct ConjectureReport {
  std::uint64_t h_max;
  HTable table;
  /// Rows h > 16 that were computed.
  std::vector<std::uint64_t> rows_above_16;
  bool at_most_one_member = true;   // every computed S_h with h > 16
  bool increasing = true;           // i(h) increasing over nonempty rows h > 16
  bool consecutive = true;          // union S_1..S_h = {0..M(h)} for every computed h > 5
  /// Per h: top M of the union S_1..S_h if it is {0..M}, nullopt otherwise.
  std::map<std::uint64_t, std::optional<std::size_t>> consecutive_union;
  std::map<std::uint64_t, std::vector<std::size_t>> union_members;

  std::string to_text() const;
};

ConjectureReport conjecture_scan(std::uint64_t h_max, const SweepOptions& options = {});

}  // namespace qpoch

#endif  // QPOCH_CLASSIFY_HPP
