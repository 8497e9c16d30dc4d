#include "verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qpoch/closed_form.hpp"
#include "qpoch/f_series.hpp"
#include "qpoch/pentagonal.hpp"
#include "qpoch/series.hpp"

namespace qpoch::tools {

namespace {

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return CheckResult{std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

std::string first_mismatch(const std::string& what, std::size_t at) {
  return what + " differs at " + std::to_string(at);
}

}  // namespace

bool SuiteResult::all_pass() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Status::fail; });
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::info:
      return "INFO";
  }
  return "?";
}

SuiteResult verify_identities(const VerifyConfig&) {
  SuiteResult out;

  {
    std::string detail;
    bool ok = true;
    for (std::size_t k = 1; k <= 10 && ok; ++k) {
      for (std::size_t M = 1; M <= 50 && ok; ++M) {
        if (!recurrence_check(k, M)) {
          ok = false;
          detail = "fails at k=" + std::to_string(k) + " M=" + std::to_string(M);
        }
      }
    }
    out.checks.push_back(check("recurrence k<=10 M<=50", ok, detail));
  }

  {
    std::string detail;
    bool ok = true;
    for (std::size_t k = 1; k <= 8 && ok; ++k) {
      for (std::size_t M = 0; M <= 30 && ok; ++M) {
        if (!one_mod_k_identity_check(k, M)) {
          ok = false;
          detail = "fails at k=" + std::to_string(k) + " M=" + std::to_string(M);
        }
      }
    }
    out.checks.push_back(check("one-mod-k sum k<=8 M<=30", ok, detail));
  }

  {
    std::string detail;
    bool ok = true;
    for (std::size_t M = 0; M <= 50 && ok; ++M) {
      if (!f1_identity_check(M)) {
        ok = false;
        detail = "fails at M=" + std::to_string(M);
      }
    }
    out.checks.push_back(check("F_1 telescoping M<=50", ok, detail));
  }

  {
    constexpr std::size_t order = 2000;
    std::string detail;
    bool ok = true;
    for (std::size_t k = 1; k <= 8 && ok; ++k) {
      if (F_direct(k, kInfinite, order) != F_backsolve(k, order)) {
        ok = false;
        detail = "F_" + std::to_string(k) + " direct and back-substituted forms differ";
      }
    }
    out.checks.push_back(check("F_k direct vs back-substituted k<=8 N=2000", ok, detail));
  }

  {
    std::string detail;
    bool ok = true;
    for (std::size_t m = 70; m <= 200 && ok; ++m) {
      const std::size_t top = 3 * m - 1;
      const TruncSeries poch = pochhammer(1, 1, m - 1, top);
      const TruncSeries pnt = pnt_series(top);
      for (std::size_t e = 2 * m; e <= top; ++e) {
        const Coefficient sum =
            pnt[e] + a_coeff(BigIndex(e - m)).value + b_coeff(BigIndex(e - 2 * m)).value;
        if (poch[e] != sum) {
          ok = false;
          detail = "m=" + std::to_string(m) + " e=" + std::to_string(e);
          break;
        }
      }
    }
    out.checks.push_back(check("three-term window 69<m<=200", ok, detail));
  }
  return out;
}

SuiteResult verify_oracle(const VerifyConfig& cfg) {
  SuiteResult out;
  constexpr std::size_t n_max = 200;

  {
    const auto profile = signed_distinct_profile(n_max, 1, cfg.oracle);
    const TruncSeries pnt = pnt_series(n_max);
    std::string detail;
    bool ok = true;
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (pnt[n] != Coefficient(profile[n])) {
        ok = false;
        detail = first_mismatch("pentagonal series", n);
        break;
      }
    }
    out.checks.push_back(check("signed distinct sums s>=1 vs pentagonal n<=200", ok, detail));
  }

  for (std::size_t min_part : {2u, 3u}) {
    const auto profile = signed_distinct_profile(n_max, min_part, cfg.oracle);
    std::string detail;
    bool ok = true;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const Coefficient closed =
          min_part == 2 ? a_coeff(BigIndex(n)).value : b_coeff(BigIndex(n)).value;
      if (closed != Coefficient(profile[n])) {
        ok = false;
        detail = first_mismatch("closed form", n);
        break;
      }
    }
    out.checks.push_back(check("signed distinct sums s>=" + std::to_string(min_part) +
                                   " vs closed form n<=200",
                               ok, detail));
  }

  {
    constexpr std::size_t eden_n = 80;
    std::string detail;
    bool ok = true;
    for (std::size_t k = 1; k <= 3 && ok; ++k) {
      const TruncSeries e = eden_series(k, eden_n);
      for (std::size_t n = 0; n <= eden_n; ++n) {
        if (e[n] != eden_signed_sum(k, n, cfg.oracle)) {
          ok = false;
          detail = "k=" + std::to_string(k) + " n=" + std::to_string(n);
          break;
        }
      }
    }
    out.checks.push_back(check("repeated-largest-part counts vs (-q)^k F_k k<=3 n<=80", ok, detail));
  }

  {
    struct Expect {
      std::size_t k;
      std::size_t start;
      bool pentagonal_normalization;
    };
    constexpr std::array<Expect, 4> expected{{{3, 22, true}, {4, 70, true}, {5, 161, false},
                                              {6, 355, false}}};
    for (const Expect& x : expected) {
      const std::size_t order = tail_split_min_order(x.k) + 50;
      const TailSplit split = tail_split(x.k, order);
      const std::size_t start = x.pentagonal_normalization ? split.tail_start_pentagonal()
                                                           : split.tail_start_exponent();
      const bool rebuilt = split.reconstruct() == F_direct(x.k, kInfinite, order);
      std::ostringstream detail;
      detail << "tail starts at " << start << (x.pentagonal_normalization ? " (q^shift F_k)" : "")
             << ", expected " << x.start << "; reconstruction "
             << (rebuilt ? "exact" : "MISMATCH") << " to order " << order;
      out.checks.push_back(check("tail split k=" + std::to_string(x.k), rebuilt && start == x.start,
                                 detail.str()));
    }
  }
  return out;
}

SuiteResult verify_corrections(const VerifyConfig&) {
  SuiteResult out;
  for (std::size_t k = 1; k <= 12; ++k) {
    const std::size_t bound = shat_bound(k);
    const TruncSeries f = F_direct(k, kInfinite, bound);
    if (has_correction(k)) {
      const TruncSeries residual = f - correction(k).as_series(bound);
      const auto bad = bloch_polya_violations(residual, bound);
      out.checks.push_back(check(
          "correction k=" + std::to_string(k), bad.empty(),
          bad.empty() ? "F_k - f has coefficients in {-1,0,1} up to q^" + std::to_string(bound)
                      : first_mismatch("F_k - f leaves {-1,0,1}", bad.front())));
      continue;
    }
    const auto bad = bloch_polya_violations(f, bound);
    const MaxAbs peak = max_abs(f);
    std::ostringstream detail;
    detail << "no correction exists; max |coefficient| " << peak.value << " at q^" << peak.witness
           << " up to q^" << bound;
    out.checks.push_back(CheckResult{"correction k=" + std::to_string(k), Status::info, detail.str()});
    if (k == 5) {
      const bool ok = !bad.empty() && f[21] == Coefficient(-2) && f[30] == Coefficient(3);
      std::ostringstream d5;
      d5 << "first |coefficient| >= 2 at q^" << (bad.empty() ? 0 : bad.front()) << ", [q^21] = "
         << f[21] << ", [q^30] = " << f[30];
      out.checks.push_back(check("F_5 obstruction", ok, d5.str()));
    }
  }
  return out;
}

SuiteResult verify_windows(const VerifyConfig&) {
  SuiteResult out;
  {
    std::vector<std::size_t> bp;
    PochhammerStream stream;
    for (std::size_t m = 0; m <= 69; ++m) {
      if (m > 0) {
        stream.advance();
      }
      if (max_abs(stream.coeffs()).value <= Coefficient(1)) {
        bp.push_back(m);
      }
    }
    const bool ok = bp == std::vector<std::size_t>{0, 1, 2, 3, 5};
    std::string detail = "{";
    for (std::size_t i = 0; i < bp.size(); ++i) {
      detail += (i ? "," : "") + std::to_string(bp[i]);
    }
    detail += "}";
    out.checks.push_back(check("coefficients in {-1,0,1} exactly for m in {0,1,2,3,5}, m<=69", ok,
                               detail));
  }
  {
    std::string detail;
    bool ok = true;
    for (std::size_t m = 22; m <= 200 && ok; ++m) {
      if (!window_check(m)) {
        ok = false;
        detail = "fails at m=" + std::to_string(m);
      }
    }
    out.checks.push_back(check("window coefficient 22<=m<=200", ok, detail));
  }
  return out;
}

SuiteResult verify_conjecture(std::uint64_t h_max, const VerifyConfig& cfg) {
  SuiteResult out;
  const ConjectureReport report = conjecture_scan(std::max<std::uint64_t>(h_max, 5), cfg.sweep);

  const std::array<std::vector<std::size_t>, 5> table1{{{0, 1, 2, 3, 5},
                                                        {4, 6, 7, 8, 9, 11},
                                                        {10, 13, 14},
                                                        {12, 15},
                                                        {17}}};
  for (std::uint64_t h = 1; h <= 5; ++h) {
    const HRow& row = report.table.rows.at(h);
    out.checks.push_back(check("S_" + std::to_string(h) + " table row",
                               row.members == table1[h - 1] && row.cutoff == s_cutoff(h)));
  }
  out.report = report.to_text();
  return out;
}

}  // namespace qpoch::tools
