#include "bfact/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace bfact {

std::string to_string(ConjectureId id) {
  switch (id) {
    case ConjectureId::C1: return "c1";
    case ConjectureId::C2: return "c2";
    case ConjectureId::C3: return "c3";
    case ConjectureId::C4: return "c4";
  }
  throw std::domain_error("unknown conjecture id");
}

std::optional<ConjectureId> parse_conjecture(std::string_view token) {
  if (token == "c1") return ConjectureId::C1;
  if (token == "c2") return ConjectureId::C2;
  if (token == "c3") return ConjectureId::C3;
  if (token == "c4") return ConjectureId::C4;
  return std::nullopt;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Verified: return "verified";
    case CheckStatus::Inconclusive: return "inconclusive";
    case CheckStatus::Violated: return "violated";
  }
  throw std::domain_error("unknown status");
}

std::string to_string(P0Convention conv) {
  return conv == P0Convention::One ? "one" : "skip";
}

std::optional<P0Convention> parse_p0(std::string_view token) {
  if (token == "one") return P0Convention::One;
  if (token == "skip") return P0Convention::Skip;
  return std::nullopt;
}

namespace {

// Per-worker cache of sieved sets, so a scan does not resieve per n.
class SetCache {
 public:
  explicit SetCache(std::int64_t ceiling) : ceiling_(ceiling) {}

  ConstellationSet& get(ConstellationKind kind) {
    auto it = sets_.find(kind);
    if (it == sets_.end()) {
      it = sets_.emplace(kind, ConstellationSet(kind, ceiling_)).first;
    }
    return it->second;
  }

 private:
  std::int64_t ceiling_;
  std::map<ConstellationKind, ConstellationSet> sets_;
};

FactoredNat two_power(std::int64_t e) { return FactoredNat::prime_power(2, e); }

// Exact quotient of two set factorials, with the conjectured right-hand
// side; shared body of the three ratio conjectures.
CheckResult ratio_check(ConjectureId id, ConstellationKind top,
                        ConstellationKind bottom, std::int64_t n,
                        FactoredNat expected, const TruncationPolicy& policy,
                        SetCache& cache) {
  CheckResult res;
  res.id = id;
  res.n = n;
  res.expected = std::move(expected);

  if (n < 1) throw std::invalid_argument("ratio conjectures need n >= 1");

  FactorialResult top_fact = set_factorial(cache.get(top), static_cast<std::size_t>(n), policy);
  FactorialResult bottom_fact =
      set_factorial(cache.get(bottom), static_cast<std::size_t>(n), policy);
  res.truncation_used = std::max(top_fact.max_truncation, bottom_fact.max_truncation);

  if (!top_fact.ok() || !bottom_fact.ok()) {
    res.status = CheckStatus::Inconclusive;
    res.offending_prime = top_fact.ok() ? bottom_fact.failing_prime : top_fact.failing_prime;
    return res;
  }

  DivExactResult quot = factored_div_exact(*top_fact.value, *bottom_fact.value);
  if (!quot) {
    // The subset relation alone should force divisibility; its failure is
    // a louder violation than a mismatched ratio.
    res.status = CheckStatus::Violated;
    res.divisibility_failure = true;
    res.offending_prime = quot.offending_prime;
    return res;
  }

  res.ratio = std::move(*quot.quotient);
  res.status = (*res.ratio == *res.expected) ? CheckStatus::Verified : CheckStatus::Violated;
  return res;
}

CheckResult check_c1_impl(std::int64_t n, const TruncationPolicy& policy, SetCache& cache) {
  // 2 * w_2(n) = 2^{1 + v_2(n)}
  FactoredNat rhs = two_power(1 + padic_valuation(BigInt(static_cast<long>(n)), 2));
  return ratio_check(ConjectureId::C1, ConstellationKind::TwinPrimes,
                     ConstellationKind::Primes, n, std::move(rhs), policy, cache);
}

CheckResult check_c2_impl(std::int64_t n, const TruncationPolicy& policy, SetCache& cache) {
  FactoredNat rhs;
  if (n % 2 == 0) {
    // 3! * w_2(n) * w_3(n) = 2^{1 + v_2(n)} * 3^{1 + v_3(n)}
    const BigInt nn(static_cast<long>(n));
    rhs = two_power(1 + padic_valuation(nn, 2)) *
          FactoredNat::prime_power(3, 1 + padic_valuation(nn, 3));
  } else {
    rhs = two_power(1);
  }
  return ratio_check(ConjectureId::C2, ConstellationKind::PrimeTriplets,
                     ConstellationKind::Primes, n, std::move(rhs), policy, cache);
}

CheckResult check_c3_impl(std::int64_t n, const TruncationPolicy& policy, SetCache& cache) {
  FactoredNat rhs;
  if (n % 2 == 0) {
    // 3 * w_3(n) = 3^{1 + v_3(n)}
    rhs = FactoredNat::prime_power(3, 1 + padic_valuation(BigInt(static_cast<long>(n)), 3));
  }
  return ratio_check(ConjectureId::C3, ConstellationKind::PrimeQuadruplets,
                     ConstellationKind::TwinPrimes, n, std::move(rhs), policy, cache);
}

CheckResult check_c4_impl(std::int64_t n, P0Convention p0,
                          const std::vector<std::int64_t>& primes) {
  if (n < 2) throw std::invalid_argument("check_c4: needs n >= 2");
  CheckResult res;
  res.id = ConjectureId::C4;
  res.n = n;

  auto prime_at = [&](std::int64_t i) { return primes[static_cast<std::size_t>(i - 1)]; };
  const std::int64_t p_n = prime_at(n);
  const std::int64_t k_hi = (p0 == P0Convention::One) ? n - 1 : n - 2;
  for (std::int64_t k = 1; k <= k_hi; ++k) {
    const std::int64_t j = n - k - 1;
    const std::int64_t p_j = (j == 0) ? 1 : prime_at(j);
    const std::int64_t lhs = prime_at(k) + p_j;
    if (p_n < lhs) {
      res.violations.push_back({n, k, p_n, prime_at(k), p_j});
    } else if (p_n == lhs) {
      res.equalities.push_back({n, k, p_n, prime_at(k), p_j});
    }
  }
  res.status = res.violations.empty() ? CheckStatus::Verified : CheckStatus::Violated;
  return res;
}

std::vector<std::int64_t> primes_for_c4(std::int64_t n_hi) {
  // Rosser-type bound keeps a single sieve sufficient.
  std::int64_t bound = 15;
  if (n_hi >= 6) {
    const double nd = static_cast<double>(n_hi);
    bound = static_cast<std::int64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 2;
  }
  PrimeTable table = PrimeTable::sieve_upto(bound);
  while (table.count() < static_cast<std::size_t>(n_hi)) {
    table = table.extended_to(table.limit() * 2);
  }
  return table.primes();
}

}  // namespace

CheckResult check_c1(std::int64_t n, const TruncationPolicy& policy) {
  SetCache cache(policy.sieve_ceiling);
  return check_c1_impl(n, policy, cache);
}

CheckResult check_c2(std::int64_t n, const TruncationPolicy& policy) {
  SetCache cache(policy.sieve_ceiling);
  return check_c2_impl(n, policy, cache);
}

CheckResult check_c3(std::int64_t n, const TruncationPolicy& policy) {
  SetCache cache(policy.sieve_ceiling);
  return check_c3_impl(n, policy, cache);
}

CheckResult check_c4(std::int64_t n, P0Convention p0) {
  return check_c4_impl(n, p0, primes_for_c4(n));
}

CheckStatus ScanReport::worst() const {
  if (violated > 0) return CheckStatus::Violated;
  if (inconclusive > 0) return CheckStatus::Inconclusive;
  return CheckStatus::Verified;
}

ScanReport scan(ConjectureId id, std::int64_t n_lo, std::int64_t n_hi,
                const ScanOptions& options) {
  const std::int64_t min_n = (id == ConjectureId::C4) ? 2 : 1;
  if (n_lo < min_n || n_hi < n_lo) {
    throw std::invalid_argument("scan: invalid n range for " + to_string(id));
  }

  const auto t0 = std::chrono::steady_clock::now();

  ScanReport report;
  report.id = id;
  report.n_lo = n_lo;
  report.n_hi = n_hi;

  const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
  report.results.resize(count);

  std::vector<std::int64_t> c4_primes;
  if (id == ConjectureId::C4) c4_primes = primes_for_c4(n_hi);

  const unsigned jobs =
      std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(count)));

  auto worker = [&](std::atomic<std::size_t>& next) {
    SetCache cache(options.policy.sieve_ceiling);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      const std::int64_t n = n_lo + static_cast<std::int64_t>(i);
      switch (id) {
        case ConjectureId::C1:
          report.results[i] = check_c1_impl(n, options.policy, cache);
          break;
        case ConjectureId::C2:
          report.results[i] = check_c2_impl(n, options.policy, cache);
          break;
        case ConjectureId::C3:
          report.results[i] = check_c3_impl(n, options.policy, cache);
          break;
        case ConjectureId::C4:
          report.results[i] = check_c4_impl(n, options.p0, c4_primes);
          break;
      }
    }
  };

  std::atomic<std::size_t> next{0};
  if (jobs == 1) {
    worker(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back([&] { worker(next); });
    for (auto& t : pool) t.join();
  }

  for (const CheckResult& r : report.results) {
    switch (r.status) {
      case CheckStatus::Verified: ++report.verified; break;
      case CheckStatus::Inconclusive: ++report.inconclusive; break;
      case CheckStatus::Violated: ++report.violated; break;
    }
  }

  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  return report;
}

}  // namespace bfact
