#include <doctest.h>

#include "bfact/conjectures.hpp"

using namespace bfact;

TEST_SUITE_BEGIN("conjectures");

TEST_CASE("c1 anchors") {
  const auto r1 = check_c1(1);
  CHECK(r1.status == CheckStatus::Verified);
  CHECK(*r1.ratio == FactoredNat::prime_power(2, 1));  // 2 = 2 w_2(1)

  const auto r2 = check_c1(2);
  CHECK(r2.status == CheckStatus::Verified);
  CHECK(*r2.ratio == FactoredNat::prime_power(2, 2));  // 4 = 2 w_2(2)

  const auto r3 = check_c1(3);
  CHECK(r3.status == CheckStatus::Verified);
  CHECK(*r3.ratio == FactoredNat::prime_power(2, 1));
}

TEST_CASE("c2 anchors") {
  const auto r1 = check_c2(1);
  CHECK(r1.status == CheckStatus::Verified);
  CHECK(*r1.ratio == FactoredNat::prime_power(2, 1));  // odd case: 2

  const auto r2 = check_c2(2);
  CHECK(r2.status == CheckStatus::Verified);
  CHECK(*r2.ratio == FactoredNat::from_factors({{2, 2}, {3, 1}}));  // 12

  const auto r3 = check_c2(3);
  CHECK(r3.status == CheckStatus::Verified);
  CHECK(*r3.ratio == FactoredNat::prime_power(2, 1));
}

TEST_CASE("c3 anchors") {
  const auto r1 = check_c3(1);
  CHECK(r1.status == CheckStatus::Verified);
  CHECK(r1.ratio->is_one());  // odd case: 1

  const auto r2 = check_c3(2);
  CHECK(r2.status == CheckStatus::Verified);
  CHECK(*r2.ratio == FactoredNat::prime_power(3, 1));  // 3 = 3 w_3(2)

  const auto r6 = check_c3(6);
  CHECK(r6.status == CheckStatus::Verified);
  CHECK(*r6.ratio == FactoredNat::prime_power(3, 2));  // 9 = 3 w_3(6)
}

TEST_CASE("parity dichotomy of the expected right-hand sides") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto c2 = check_c2(n);
    const auto c3 = check_c3(n);
    if (n % 2 == 1) {
      CHECK(*c2.expected == FactoredNat::prime_power(2, 1));
      CHECK(c3.expected->is_one());
    } else {
      CHECK(c2.expected->exponent_of(2) ==
            1 + padic_valuation(BigInt(static_cast<long>(n)), 2));
      CHECK(c2.expected->exponent_of(3) ==
            1 + padic_valuation(BigInt(static_cast<long>(n)), 3));
      CHECK(c3.expected->exponent_of(3) ==
            1 + padic_valuation(BigInt(static_cast<long>(n)), 3));
      CHECK(c3.expected->exponent_of(2) == 0);
    }
  }
}

TEST_CASE("ratio well-definedness: divisibility never fails on stable n") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const auto& r : {check_c1(n), check_c2(n), check_c3(n)}) {
      CHECK_FALSE(r.divisibility_failure);
      CHECK(r.status != CheckStatus::Inconclusive);
    }
  }
}

TEST_CASE("c4 anchors") {
  CHECK(check_c4(3).status == CheckStatus::Verified);

  const auto r4 = check_c4(4);
  CHECK(r4.status == CheckStatus::Verified);
  CHECK(r4.violations.empty());
  // p_4 = 7 vs 2+3, 3+2, 5+1: all strict under the n-k-1 indexing.
  CHECK(r4.equalities.empty());

  const auto r2 = check_c4(2, P0Convention::One);
  CHECK(r2.status == CheckStatus::Verified);
  REQUIRE(r2.equalities.size() == 1);
  CHECK(r2.equalities[0] == C4Witness{2, 1, 3, 2, 1});  // 3 = 2 + 1

  const auto r2s = check_c4(2, P0Convention::Skip);
  CHECK(r2s.status == CheckStatus::Verified);  // k range empty
  CHECK(r2s.equalities.empty());

  CHECK_THROWS_AS(check_c4(1), std::invalid_argument);
}

TEST_CASE("c4 scan over [2,100] verifies everything") {
  const auto report = scan(ConjectureId::C4, 2, 100);
  CHECK(report.verified == 99);
  CHECK(report.violated == 0);
  CHECK(report.inconclusive == 0);
  CHECK(report.worst() == CheckStatus::Verified);
}

TEST_CASE("one-verified implies skip-verified") {
  ScanOptions one, skip;
  one.p0 = P0Convention::One;
  skip.p0 = P0Convention::Skip;
  const auto r_one = scan(ConjectureId::C4, 2, 200, one);
  const auto r_skip = scan(ConjectureId::C4, 2, 200, skip);
  for (std::size_t i = 0; i < r_one.results.size(); ++i) {
    if (r_one.results[i].status == CheckStatus::Verified) {
      CHECK(r_skip.results[i].status == CheckStatus::Verified);
    }
  }
}

TEST_CASE("c1 scan over [1,8]") {
  const auto report = scan(ConjectureId::C1, 1, 8);
  CHECK(report.verified == 8);
  CHECK(report.results.size() == 8);
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    CHECK(report.results[i].n == static_cast<std::int64_t>(i) + 1);
  }
}

TEST_CASE("tiny truncation cap: inconclusive entries, never violated") {
  ScanOptions options;
  options.policy.max_members = 8;
  const auto report = scan(ConjectureId::C1, 1, 8, options);
  CHECK(report.inconclusive == 8);
  CHECK(report.violated == 0);
  CHECK(report.worst() == CheckStatus::Inconclusive);
  for (const auto& r : report.results) {
    CHECK(r.offending_prime == 2);  // explicit truncation diagnostic
    CHECK(r.truncation_used == 8);
  }
}

TEST_CASE("counts partition the range") {
  for (const auto& report :
       {scan(ConjectureId::C2, 1, 10), scan(ConjectureId::C4, 2, 50)}) {
    CHECK(report.verified + report.violated + report.inconclusive ==
          report.results.size());
    CHECK(report.results.size() ==
          static_cast<std::size_t>(report.n_hi - report.n_lo + 1));
  }
}

TEST_CASE("parallel scan matches sequential scan") {
  ScanOptions seq, par;
  par.jobs = 4;
  const auto a = scan(ConjectureId::C3, 1, 16, seq);
  const auto b = scan(ConjectureId::C3, 1, 16, par);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].status == b.results[i].status);
    CHECK(a.results[i].n == b.results[i].n);
    CHECK(bool(a.results[i].ratio) == bool(b.results[i].ratio));
    if (a.results[i].ratio) CHECK(*a.results[i].ratio == *b.results[i].ratio);
  }
  CHECK(a.verified == b.verified);
}

TEST_CASE("scan rejects invalid ranges") {
  CHECK_THROWS_AS(scan(ConjectureId::C1, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(scan(ConjectureId::C4, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(scan(ConjectureId::C1, 5, 4), std::invalid_argument);
}

TEST_SUITE_END();
