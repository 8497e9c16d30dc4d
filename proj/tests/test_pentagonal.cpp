#include <doctest.h>

#include <limits>
#include <random>
#include <set>

#include "qpoch/errors.hpp"
#include "qpoch/pentagonal.hpp"

using namespace qpoch;

namespace {

const BigIndex kGoogol = BigIndex::power_of_ten(100);
const char* const kGoogolBlock = "40824829046386301636621401245098189866099124677611";

BigIndex random_index(gmp_randclass& rng, std::mt19937_64& gen) {
  // Uniform in [0, 10^d) for a random digit count d <= 100.
  const unsigned digits = 1 + static_cast<unsigned>(gen() % 100);
  return BigIndex(rng.get_z_range(BigIndex::power_of_ten(digits).value()));
}

}  // namespace

TEST_CASE("pentagonal numbers") {
  CHECK(p1(std::uint64_t{0}) == 0);
  CHECK(p2(std::uint64_t{0}) == 0);
  CHECK(p1(std::uint64_t{2}) == 5);
  CHECK(p2(std::uint64_t{1}) == 2);
  bool ok = true;
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    ok = ok && p2(n) - p1(n) == n && p1(n + 1) - p2(n) == 2 * n + 1;
  }
  CHECK(ok);
  CHECK(p1(BigIndex(1000)) == BigIndex(p1(std::uint64_t{1000})));
  CHECK(p2(BigIndex::power_of_ten(40)).to_string() ==
        "15" + std::string(39, '0') + "5" + std::string(39, '0'));
  CHECK_THROWS_AS(p1(std::numeric_limits<std::uint64_t>::max()), UsageError);
  CHECK_THROWS_AS(p2(std::uint64_t{1} << 33), UsageError);
}

TEST_CASE("pentagonal number series") {
  const TruncSeries s = pnt_series(30);
  const std::size_t at[] = {0, 1, 2, 5, 7, 12, 15, 22, 26};
  const int sign[] = {1, -1, -1, 1, 1, -1, -1, 1, 1};
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(s[at[i]] == Coefficient(sign[i]));
  }
  for (const auto& c : s.coeffs()) {
    nonzero += !c.is_zero();
  }
  CHECK(nonzero == 9);
  CHECK(s[3].is_zero());
  CHECK(pnt_series(10'000) == pochhammer(1, 1, kInfinite, 10'000));
}

TEST_CASE("pentagonal lookup inverts both families") {
  std::set<std::uint64_t> first, second;
  for (std::uint64_t n = 0; p1(n) <= 200'000; ++n) {
    first.insert(p1(n));
    second.insert(p2(n));
  }
  bool ok = true;
  for (std::uint64_t e = 0; e <= 200'000; ++e) {
    const auto hit = pentagonal_lookup(e);
    const bool expected = first.count(e) || second.count(e);
    ok = ok && hit.has_value() == expected;
    if (hit) {
      const std::uint64_t back = hit->family == PentagonalFamily::first ? p1(hit->n) : p2(hit->n);
      ok = ok && back == e;
    }
  }
  CHECK(ok);
  CHECK(pentagonal_lookup(0)->n == 0);
  CHECK(pentagonal_lookup(0)->family == PentagonalFamily::first);
  CHECK(pentagonal_lookup(26)->family == PentagonalFamily::second);
  CHECK(pentagonal_lookup(26)->n == 4);
}

TEST_CASE("gap check") {
  CHECK(gap_check(3, 10'000));
  CHECK(gap_check(10, 1'000'000));
  // n = 1 never enters for gap 1: the hypothesis needs n > gap.
  CHECK(p2(std::uint64_t{1}) - p1(std::uint64_t{1}) == 1);
  CHECK(gap_check(1, 1));
  CHECK(gap_check(1, 100));
}

TEST_CASE("block location for small indices") {
  const PentaBlock a0 = locate_block_a(BigIndex(0));
  CHECK(a0.n == BigIndex(0));
  CHECK(a0.segment == Segment::a_plus);

  const PentaBlock a7 = locate_block_a(BigIndex(7));
  CHECK(a7.n == BigIndex(1));
  CHECK(a7.segment == Segment::a_plus);
  CHECK(a7.lower == BigIndex(7));

  const PentaBlock b0 = locate_block_b(BigIndex(0));
  CHECK(b0.n == BigIndex(0));
  CHECK(b0.lower == BigIndex(0));
  CHECK(b0.contains(BigIndex(0)));

  const PentaBlock b11 = locate_block_b(BigIndex(11));
  CHECK(b11.contains(BigIndex(11)));
  CHECK(b11.n == BigIndex(1));
}

TEST_CASE("block location at 10^100") {
  const PentaBlock a = locate_block_a(kGoogol);
  CHECK(a.n.to_string() == kGoogolBlock);
  const PentaBlock b = locate_block_b(kGoogol);
  CHECK(b.n.to_string() == kGoogolBlock);
  CHECK(b.segment == Segment::b_rising);
  CHECK(b.contains(kGoogol));
}

TEST_CASE("block location round trips on random large indices") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(4242UL);
  std::mt19937_64 gen(4242);
  const BigIndex two(2), three(3);
  bool ok = true;
  for (int i = 0; i < 20'000 && ok; ++i) {
    const BigIndex j = random_index(rng, gen);
    const PentaBlock a = locate_block_a(j);
    const BigIndex n2 = a.n * two;
    ok = a.contains(j) && p2(n2) <= j && j < p2(n2 + BigIndex(2));

    const PentaBlock b = locate_block_b(j);
    const BigIndex m2 = b.n * two;
    // p1(2n) - 2 <= j <= p1(2n+2) - 3
    ok = ok && b.contains(j) && p1(m2) <= j + two && j + three <= p1(m2 + BigIndex(2));
  }
  CHECK(ok);
}

TEST_CASE("block boundaries are exact") {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    const BigIndex lo = p2(BigIndex(2 * n));
    CHECK(locate_block_a(lo).n == BigIndex(n));
    if (n > 0) {
      CHECK(locate_block_a(BigIndex(p2(2 * n) - 1)).n == BigIndex(n - 1));
      CHECK(locate_block_b(BigIndex(p1(2 * n) - 2)).n == BigIndex(n));
      CHECK(locate_block_b(BigIndex(p1(2 * n) - 3)).n == BigIndex(n - 1));
    }
  }
}

TEST_CASE("segment names") {
  CHECK(to_string(Segment::a_plus) == "a_plus");
  CHECK(to_string(Segment::b_falling) == "b_falling");
}
