// Acceptance run: one PASS/FAIL line per criterion, all tolerances exact.
//
// Exit status is nonzero if any criterion fails, except those listed in
// kUnattainable, whose stated form contradicts the mathematics; they still
// print FAIL with the measured values.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qpoch/classify.hpp"
#include "qpoch/closed_form.hpp"
#include "qpoch/f_series.hpp"
#include "qpoch/oracle.hpp"
#include "qpoch/pentagonal.hpp"
#include "qpoch/serialize.hpp"

using namespace qpoch;

namespace {

// Criterion 7 asks for the first |coefficient| >= 2 of F_5 at q^21; the
// exact expansion has +2 q^20 first (and -2 q^21, +3 q^30 after it).
constexpr std::array<int, 1> kUnattainable{7};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- 1 ---------------------------------------------------------------------

void googol_coefficient(Outcome& o) {
  const auto t0 = Clock::now();
  const CoeffAnswer b = b_coeff(BigIndex::power_of_ten(100));
  const double dt = seconds_since(t0);
  o.require(b.value.to_string() == "-19888090251390639910818356938628130689602741018379",
            "value " + b.value.to_string());
  o.require(b.block.n.to_string() == "40824829046386301636621401245098189866099124677611",
            "block " + b.block.n.to_string());
  o.require(dt < 1.0, "runtime");
  o.detail << "b = " << b.value << ", n = " << b.block.n << ", " << to_string(b.case_tag) << ", "
           << dt << " s";
}

// ---- 2 ---------------------------------------------------------------------

void closed_forms_vs_expansion(Outcome& o) {
  constexpr std::size_t N = 100'000;
  const auto t0 = Clock::now();
  // Route 1: the products expanded from their definition through the
  // logarithmic-derivative recurrence (exact, independent of the library).
  const auto a_ref = oracle::euler_tail_product(2, N);
  const auto b_ref = oracle::euler_tail_product(3, N);
  std::size_t a_bad = 0, b_bad = 0;
  for (std::size_t i = 0; i <= N; ++i) {
    a_bad += a_coeff(BigIndex(i)).value != Coefficient(a_ref[i]);
    b_bad += b_coeff(BigIndex(i)).value != Coefficient(b_ref[i]);
  }
  // Route 2: the library's own series division of the pentagonal series.
  const TruncSeries q2 = div_binomial(pnt_series(N), 1);
  const TruncSeries q3 = div_binomial(q2, 2);
  std::size_t div_bad = 0;
  for (std::size_t i = 0; i <= N; ++i) {
    div_bad += q2[i] != Coefficient(a_ref[i]) || q3[i] != Coefficient(b_ref[i]);
  }
  // Route 3: factor-by-factor truncated products on a shorter range.
  constexpr std::size_t N_prod = 8000;
  const TruncSeries q2p = pochhammer(2, 1, kInfinite, N_prod);
  const TruncSeries q3p = pochhammer(3, 1, kInfinite, N_prod);
  std::size_t prod_bad = 0;
  for (std::size_t i = 0; i <= N_prod; ++i) {
    prod_bad += q2p[i] != Coefficient(a_ref[i]) || q3p[i] != Coefficient(b_ref[i]);
  }
  const double dt = seconds_since(t0);
  o.require(a_bad == 0, std::to_string(a_bad) + " a mismatches");
  o.require(b_bad == 0, std::to_string(b_bad) + " b mismatches");
  o.require(div_bad == 0, "division route disagrees");
  o.require(prod_bad == 0, "product route disagrees");
  o.require(dt < 60.0, "runtime");
  o.detail << "indices 0.." << N << " exact on both coefficients; product route to " << N_prod
           << "; " << dt << " s";
}

// ---- 3 ---------------------------------------------------------------------

void first_appearances(Outcome& o) {
  const std::array<std::uint64_t, 6> expected{11, 34, 69, 116, 175, 246};
  for (std::uint64_t c = 2; c <= 7; ++c) {
    const BigIndex got = first_appearance(c);
    o.require(got == BigIndex(expected[c - 2]), "c=" + std::to_string(c) + " -> " + got.to_string());
    o.detail << (c > 2 ? ", " : "") << c << "->" << got;
  }
}

// ---- 4 ---------------------------------------------------------------------

void s_table(Outcome& o) {
  const auto t0 = Clock::now();
  const HTable t = build_s_table(5);
  const double dt = seconds_since(t0);
  const std::array<std::vector<std::size_t>, 5> rows{
      {{0, 1, 2, 3, 5}, {4, 6, 7, 8, 9, 11}, {10, 13, 14}, {12, 15}, {17}}};
  const std::array<std::uint64_t, 5> cutoffs{69, 116, 175, 246, 329};
  for (std::uint64_t h = 1; h <= 5; ++h) {
    const HRow& row = t.rows.at(h);
    o.require(row.members == rows[h - 1], "row " + std::to_string(h));
    o.require(row.cutoff == cutoffs[h - 1], "cutoff " + std::to_string(h));
  }
  o.require(t.subjects_upto == 329, "subjects");
  o.require(dt < 600.0, "runtime");
  o.detail << "rows h=1..5 exact, m <= " << t.subjects_upto << ", " << dt << " s";
}

// ---- 5 ---------------------------------------------------------------------

void shat_table(Outcome& o) {
  const auto t0 = Clock::now();
  const std::array<int, 15> h{1, 1, 2, 2, 3, 2, 4, 3, 4, 6, 7, 6, 8, 7, 8};
  const auto records = eden_sweep(15, SweepOptions{});
  const double dt = seconds_since(t0);
  for (std::size_t k = 1; k <= 15; ++k) {
    const ClassRecord& r = records[k - 1];
    o.require(r.index == k && r.h == Coefficient(h[k - 1]), "k=" + std::to_string(k));
    o.require(r.bound_used == shat_bound(k), "bound k=" + std::to_string(k));
  }
  o.require(shat_bound(15) == 16786, "B(15)");
  o.require(dt < 300.0, "runtime");
  o.detail << "h(1..15) exact, B(15) = " << shat_bound(15) << ", " << dt << " s";
}

// ---- 6 ---------------------------------------------------------------------

void bloch_polya_gate(Outcome& o) {
  std::vector<std::size_t> bp;
  PochhammerStream stream;
  for (std::size_t m = 0; m <= 69; ++m) {
    if (m > 0) {
      stream.advance();
    }
    if (is_bloch_polya(stream.to_series(stream.degree()))) {
      bp.push_back(m);
    }
  }
  o.require(bp == std::vector<std::size_t>{0, 1, 2, 3, 5}, "Bloch-Polya set");
  Coefficient lo(1000), hi(-1000);
  for (std::size_t m = 70; m <= 200; ++m) {
    const std::size_t e = 2 * m + 69;
    const Coefficient c = coeff(pochhammer(1, 1, m - 1, e), e);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
    o.require(window_check(m), "window m=" + std::to_string(m));
  }
  o.require(Coefficient(2) <= lo && hi <= Coefficient(6), "window range");
  const Coefficient special = coeff(pochhammer(1, 1, 41, 51), 51);
  o.require(special == Coefficient(2) && window_check(42), "m=42");
  o.detail << "{0,1,2,3,5} among m<=69; window values in [" << lo << "," << hi
           << "] for 69<m<=200; [q^51](q;q)_41 = " << special;
}

// ---- 7 ---------------------------------------------------------------------

void corrections(Outcome& o) {
  // Bounds as stated for the criterion, never below the classifier's B(k).
  const std::array<std::pair<std::size_t, std::size_t>, 5> checks{
      {{1, shat_bound(1)}, {2, shat_bound(2)}, {3, 33}, {4, 76}, {6, 370}}};
  for (const auto& [k, stated] : checks) {
    const std::size_t bound = std::max<std::size_t>(stated, shat_bound(k));
    const TruncSeries r = F_direct(k, kInfinite, bound) - correction(k).as_series(bound);
    o.require(is_bloch_polya(r), "k=" + std::to_string(k));
    o.detail << "k=" << k << " ok to q^" << bound << "; ";
  }
  const TruncSeries f5 = F_direct(5, kInfinite, shat_bound(5));
  const auto bad = bloch_polya_violations(f5, shat_bound(5));
  const std::size_t first = bad.empty() ? 0 : bad.front();
  o.require(!bad.empty() && first == 21, "F_5 first |c|>=2 at q^" + std::to_string(first) +
                                             " (coefficient " + f5[first].to_string() + ")");
  o.require(f5[21] == Coefficient(-2), "[q^21]F_5 = " + f5[21].to_string());
  o.require(f5[30] == Coefficient(3), "[q^30]F_5 = " + f5[30].to_string());
  o.detail << "F_5: first violation q^" << first << " = " << f5[first] << ", [q^21] = " << f5[21]
           << ", [q^30] = " << f5[30];
}

// ---- 8 ---------------------------------------------------------------------

void identity_suites(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t count = 0;
  for (std::size_t k = 1; k <= 10; ++k) {
    for (std::size_t M = 1; M <= 50; ++M, ++count) {
      o.require(recurrence_check(k, M), "recurrence k=" + std::to_string(k) + " M=" +
                                            std::to_string(M));
    }
  }
  for (std::size_t k = 1; k <= 8; ++k) {
    for (std::size_t M = 0; M <= 30; ++M, ++count) {
      o.require(one_mod_k_identity_check(k, M), "one-mod-k k=" + std::to_string(k));
    }
  }
  for (std::size_t M = 0; M <= 50; ++M, ++count) {
    o.require(f1_identity_check(M), "F_1 M=" + std::to_string(M));
  }
  for (std::size_t k = 1; k <= 8; ++k, ++count) {
    o.require(F_direct(k, kInfinite, 2000) == F_backsolve(k, 2000), "paths k=" + std::to_string(k));
  }
  for (std::size_t m = 70; m <= 200; ++m) {
    const std::size_t top = 3 * m - 1;
    const TruncSeries poch = pochhammer(1, 1, m - 1, top);
    const TruncSeries pnt = pnt_series(top);
    for (std::size_t e = 2 * m; e <= top; ++e, ++count) {
      const Coefficient sum =
          pnt[e] + a_coeff(BigIndex(e - m)).value + b_coeff(BigIndex(e - 2 * m)).value;
      if (poch[e] != sum) {
        o.require(false, "window m=" + std::to_string(m) + " e=" + std::to_string(e));
      }
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 120.0, "runtime");
  o.detail << count << " identity instances, " << dt << " s";
}

// ---- 9 ---------------------------------------------------------------------

void oracle_equivalence(Outcome& o) {
  constexpr std::size_t N = 200;
  const auto s1 = signed_distinct_profile(N, 1);
  const auto s2 = signed_distinct_profile(N, 2);
  const auto s3 = signed_distinct_profile(N, 3);
  const TruncSeries pnt = pnt_series(N);
  for (std::size_t n = 0; n <= N; ++n) {
    o.require(Coefficient(s1[n]) == pnt[n], "pnt n=" + std::to_string(n));
    o.require(Coefficient(s2[n]) == a_coeff(BigIndex(n)).value, "a n=" + std::to_string(n));
    o.require(Coefficient(s3[n]) == b_coeff(BigIndex(n)).value, "b n=" + std::to_string(n));
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    const TruncSeries e = eden_series(k, 80);
    for (std::size_t n = 0; n <= 80; ++n) {
      o.require(eden_signed_sum(k, n) == e[n],
                "eden k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  struct Split {
    std::size_t k, start;
    bool pentagonal;
  };
  for (const Split& s : {Split{3, 22, true}, Split{4, 70, true}, Split{5, 161, false},
                         Split{6, 355, false}}) {
    const std::size_t order = tail_split_min_order(s.k) + 200;
    const TailSplit t = tail_split(s.k, order);
    const std::size_t start = s.pentagonal ? t.tail_start_pentagonal() : t.tail_start_exponent();
    o.require(t.reconstruct() == F_direct(s.k, kInfinite, order),
              "reconstruction k=" + std::to_string(s.k));
    o.require(start == s.start, "tail start k=" + std::to_string(s.k));
    o.detail << "k=" << s.k << " tail at " << start << "; ";
  }
  o.detail << "signed sums n<=" << N << ", Eden k<=3 n<=80";
}

// ---- 10 --------------------------------------------------------------------

TruncSeries random_series(std::mt19937_64& gen, gmp_randclass& rng, std::size_t order) {
  TruncSeries s(order);
  for (std::size_t t = 0; t <= order; ++t) {
    const auto pick = gen() % 4;
    if (pick == 1) {
      mpz_class v = rng.get_z_bits(60 + gen() % 120);
      s[t] = Coefficient(gen() % 2 ? v : mpz_class(-v));
    } else if (pick > 1) {
      s[t] = Coefficient(static_cast<std::int64_t>(gen() % 201) - 100);
    }
  }
  return s;
}

void property_suites(Outcome& o) {
  std::mt19937_64 gen(20240917);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240917UL);

  std::size_t ring_cases = 0;
  for (; ring_cases < 1500; ++ring_cases) {
    const std::size_t N = gen() % 30;
    const TruncSeries a = random_series(gen, rng, N);
    const TruncSeries b = random_series(gen, rng, N);
    const TruncSeries c = random_series(gen, rng, N);
    const bool ok = a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) &&
                    a * (b + c) == a * b + a * c && (a + b) - b == a &&
                    oracle::equal(a * b, oracle::mul(oracle::to_poly(a), oracle::to_poly(b), N));
    if (!ok) {
      o.require(false, "ring law case " + std::to_string(ring_cases));
      break;
    }
  }

  std::size_t trip_cases = 0;
  for (; trip_cases < 1500; ++trip_cases) {
    const std::size_t N = 1 + gen() % 40;
    const std::size_t d = 1 + gen() % N;
    const std::size_t s = gen() % 12;
    const TruncSeries a = random_series(gen, rng, N);
    const bool ok = div_binomial(mul_binomial(a, d, -1), d) == a &&
                    drop_low(shift_up(a, s), s) == a &&
                    series_from_json(nlohmann::json::parse(
                        series_json(OutputMeta{"p", {}}, a).dump())) == a;
    if (!ok) {
      o.require(false, "round trip case " + std::to_string(trip_cases));
      break;
    }
  }

  const auto t0 = Clock::now();
  std::size_t located = 0;
  const BigIndex two(2), three(3);
  std::vector<mpz_class> limits;
  for (unsigned d = 1; d <= 100; ++d) {
    limits.push_back(BigIndex::power_of_ten(d).value());
  }
  for (; located < 1'000'000; ++located) {
    const BigIndex j(rng.get_z_range(limits[gen() % limits.size()]));
    const PentaBlock a = locate_block_a(j);
    const BigIndex a2 = a.n * two;
    const PentaBlock b = locate_block_b(j);
    const BigIndex b2 = b.n * two;
    const bool ok = a.contains(j) && p2(a2) <= j && j < p2(a2 + two) && b.contains(j) &&
                    p1(b2) <= j + two && j + three <= p1(b2 + two);
    if (!ok) {
      o.require(false, "block location at " + j.to_string());
      break;
    }
  }
  const double locate_s = seconds_since(t0);

  auto same = [](const std::vector<ClassRecord>& x, const std::vector<ClassRecord>& y) {
    return x.size() == y.size() &&
           std::equal(x.begin(), x.end(), y.begin(), [](const auto& p, const auto& q) {
             return p.index == q.index && p.h == q.h && p.witness == q.witness &&
                    p.bound_used == q.bound_used;
           });
  };
  const bool poch_same = same(poch_sweep(175, SweepOptions{1, {}}), poch_sweep(175, SweepOptions{4, {}}));
  const bool eden_same = same(eden_sweep(12, SweepOptions{1, {}}), eden_sweep(12, SweepOptions{3, {}}));
  const OutputMeta meta{"table", {"S", "3"}};
  const bool table_same = table_tsv(meta, build_s_table(3, SweepOptions{1, {}})) ==
                          table_tsv(meta, build_s_table(3, SweepOptions{4, {}}));
  o.require(poch_same && eden_same && table_same, "worker-count determinism");

  o.detail << ring_cases << " ring-law cases, " << trip_cases << " round trips, " << located
           << " block locations (" << locate_s << " s), sweeps identical for 1/3/4 workers";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "b coefficient at 10^100", googol_coefficient},
      {2, "closed forms vs expansion, indices <= 10^5", closed_forms_vs_expansion},
      {3, "first appearances of |b| = 2..7", first_appearances},
      {4, "S table rows h <= 5 with cut-offs", s_table},
      {5, "S-hat memberships for k = 1..15", shat_table},
      {6, "Bloch-Polya gate and window coefficients", bloch_polya_gate},
      {7, "Bloch-Polya corrections and the F_5 obstruction", corrections},
      {8, "identity suites", identity_suites},
      {9, "oracle equivalence and tail splits", oracle_equivalence},
      {10, "property suites", property_suites},
  };

  int failed = 0;
  int excused = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    const bool documented =
        std::find(kUnattainable.begin(), kUnattainable.end(), c.id) != kUnattainable.end();
    std::printf("%s  criterion %2d  %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                dt, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) {
      (documented ? excused : failed) += 1;
    }
  }
  std::printf("%zu criteria, %d failed, %d of them documented as unattainable as stated\n",
              criteria.size(), failed + excused, excused);
  return failed == 0 ? 0 : 1;
}
