#include "bfact/bhargava.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace bfact {

namespace {

// Valuation of a small nonzero integer; the greedy inner loop runs on
// int64 differences, no bignums involved.
std::int64_t val64(std::int64_t v, std::int64_t p) {
  if (v < 0) v = -v;
  std::int64_t e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

// True once n+1 distinct residues mod p occur among the members.  Chosen
// elements can occupy at most k <= n residues, so a fresh-residue candidate
// with valuation sum 0 exists at every step k <= n, for this prefix and
// every extension of it.
bool residue_certificate(std::span<const std::int64_t> members, std::int64_t p,
                         std::size_t n) {
  if (static_cast<std::size_t>(p) <= n) return false;  // cannot have n+1 residues
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t m : members) {
    seen.insert(((m % p) + p) % p);
    if (seen.size() >= n + 1) return true;
  }
  return false;
}

}  // namespace

POrdering greedy_p_ordering(std::span<const std::int64_t> members, std::int64_t p,
                            std::size_t k_max) {
  if (members.size() < k_max + 1) {
    throw std::invalid_argument("greedy_p_ordering: set has fewer than k_max + 1 elements");
  }
  if (!is_prime_small(p)) {
    throw std::domain_error("greedy_p_ordering: p must be prime");
  }

  POrdering ord;
  ord.p = p;
  ord.elements.reserve(k_max + 1);
  ord.exponents.reserve(k_max);

  const std::size_t m = members.size();
  std::vector<std::int64_t> val_sum(m, 0);  // sum_i v_p(c - a_i) per candidate
  std::vector<char> used(m, 0);

  // a_0: smallest element.
  used[0] = 1;
  ord.elements.push_back(members[0]);
  std::int64_t last = members[0];

  for (std::size_t k = 1; k <= k_max; ++k) {
    std::size_t best = m;
    std::int64_t best_val = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      val_sum[i] += val64(members[i] - last, p);
      if (val_sum[i] < best_val) {  // ties: members sorted, first hit is smallest
        best_val = val_sum[i];
        best = i;
      }
    }
    used[best] = 1;
    ord.elements.push_back(members[best]);
    ord.exponents.push_back(best_val);
    last = members[best];
  }
  return ord;
}

StabilizedPSequence stabilized_p_sequence(ConstellationSet& set, std::int64_t p,
                                          std::size_t n,
                                          const TruncationPolicy& policy) {
  StabilizedPSequence out;
  out.p = p;

  if (n == 0) {
    out.stable = true;
    return out;
  }
  if (policy.max_members < n + 1) return out;  // cannot even seat a_0..a_n

  std::size_t m = std::max<std::size_t>(policy.initial_multiplier, 1) * (n + 1);
  m = std::min(std::max(m, n + 1), policy.max_members);

  std::vector<std::int64_t> prev;
  int agreements = 0;

  for (;;) {
    const bool have = set.ensure_count(m);
    auto members = set.members();
    if (members.size() > m) members = members.first(m);

    if (residue_certificate(members, p, n)) {
      out.exponents.assign(n, 0);
      out.truncation_used = members.size();
      out.stable = true;
      return out;
    }
    if (!have) {
      // Sieve ceiling reached; without a certificate the prefix is too
      // short to claim anything.
      out.truncation_used = members.size();
      return out;
    }

    POrdering ord = greedy_p_ordering(members, p, n);
    out.truncation_used = m;
    if (!prev.empty() && ord.exponents == prev) {
      if (++agreements >= policy.required_agreements) {
        out.exponents = std::move(ord.exponents);
        out.stable = true;
        return out;
      }
    } else {
      agreements = 0;
    }
    prev = std::move(ord.exponents);

    if (m >= policy.max_members) {
      out.exponents = std::move(prev);
      return out;  // cap hit, unstable
    }
    m = std::min(m * 2, policy.max_members);
  }
}

StabilizedPSequence stabilized_p_sequence(ConstellationKind kind, std::int64_t p,
                                          std::size_t n,
                                          const TruncationPolicy& policy) {
  ConstellationSet set(kind, policy.sieve_ceiling);
  return stabilized_p_sequence(set, p, n, policy);
}

FactorialResult set_factorial(ConstellationSet& set, std::size_t n,
                              const TruncationPolicy& policy) {
  FactorialResult res;
  if (n == 0) {
    res.value = FactoredNat::one();  // 0!_X = 1 by definition
    return res;
  }

  if (!set.ensure_count(n + 1)) {
    return res;  // fewer than n+1 members below the sieve ceiling
  }
  const auto head = set.members().first(n + 1);
  const std::int64_t spread = head.back() - head.front();

  std::vector<PrimePower> factors;
  std::size_t max_trunc = 0;
  if (spread >= 2) {
    const PrimeTable support = PrimeTable::sieve_upto(spread);
    for (std::int64_t p : support.primes()) {
      StabilizedPSequence seq = stabilized_p_sequence(set, p, n, policy);
      max_trunc = std::max(max_trunc, seq.truncation_used);
      if (!seq.stable) {
        res.failing_prime = p;
        res.max_truncation = max_trunc;
        return res;
      }
      if (seq.exponents[n - 1] > 0) factors.push_back({p, seq.exponents[n - 1]});
    }
  }
  res.value = FactoredNat::from_factors(std::move(factors));
  res.max_truncation = max_trunc;
  return res;
}

FactorialResult set_factorial(ConstellationKind kind, std::size_t n,
                              const TruncationPolicy& policy) {
  ConstellationSet set(kind, policy.sieve_ceiling);
  return set_factorial(set, n, policy);
}

FactoredNat prime_factorial_closed(std::size_t n) {
  if (n <= 1) return FactoredNat::one();
  std::vector<PrimePower> factors;
  const std::int64_t nn = static_cast<std::int64_t>(n);
  const PrimeTable support = PrimeTable::sieve_upto(nn);
  for (std::int64_t p : support.primes()) {
    std::int64_t exponent = 0;
    // sum_{m>=0} floor((n-1) / (p^m (p-1))), finitely many nonzero terms
    for (std::int64_t q = p - 1; q <= nn - 1; q *= p) {
      exponent += (nn - 1) / q;
    }
    if (exponent > 0) factors.push_back({p, exponent});
  }
  return FactoredNat::from_factors(std::move(factors));
}

FactorialProvider classical_factorial_provider() {
  return [](std::size_t n) -> std::optional<BigNat> {
    BigNat f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
  };
}

FactorialProvider closed_form_prime_provider() {
  return [](std::size_t n) -> std::optional<BigNat> {
    // Factorials of the primes stay modest for axiom-scale n; no digit cap.
    return prime_factorial_closed(n).to_integer(std::numeric_limits<std::size_t>::max());
  };
}

FactorialProvider pfact_provider() {
  return [](std::size_t n) -> std::optional<BigNat> {
    if (n <= 1) return BigNat(1);
    const std::int64_t p = nth_prime(static_cast<std::int64_t>(n) - 1);
    BigNat f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
    return f;
  };
}

FactorialProvider product_provider(FactorialProvider f, FactorialProvider g) {
  return [f = std::move(f), g = std::move(g)](std::size_t n) -> std::optional<BigNat> {
    const auto a = f(n);
    const auto b = g(n);
    if (!a || !b) return std::nullopt;
    return *a * *b;
  };
}

FactorialProvider set_factorial_provider(ConstellationKind kind,
                                         const TruncationPolicy& policy) {
  return [kind, policy](std::size_t n) -> std::optional<BigNat> {
    FactorialResult r = set_factorial(kind, n, policy);
    if (!r.ok()) return std::nullopt;
    return r.value->to_integer(std::numeric_limits<std::size_t>::max());
  };
}

BinomialResult generalized_binomial(std::size_t n, std::size_t k,
                                    const FactorialProvider& fact) {
  if (k > n) throw std::domain_error("generalized_binomial: k out of range");
  BinomialResult res;
  const auto top = fact(n);
  const auto left = fact(k);
  const auto right = fact(n - k);
  if (!top || !left || !right) return res;  // Inconclusive

  const BigNat denom = *left * *right;
  if (denom == 0) throw std::domain_error("generalized_binomial: zero factorial value");
  BigNat q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top->get_mpz_t(), denom.get_mpz_t());
  if (r == 0) {
    res.status = BinomialStatus::Integral;
    res.value = q;
  } else {
    res.status = BinomialStatus::NonIntegral;
    res.witness = make_rat(*top, denom);
  }
  return res;
}

AxiomReport axioms_check(const FactorialProvider& fact, std::size_t n_max) {
  AxiomReport report;
  report.n_max = n_max;

  const auto at_zero = fact(0);
  report.axiom1_ok = at_zero && *at_zero == 1;

  std::vector<std::optional<BigNat>> values(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    values[n] = fact(n);
    if (!values[n]) report.untested.push_back(n);
  }

  for (std::size_t n = 0; n <= n_max; ++n) {
    if (!values[n]) continue;
    for (std::size_t k = 0; k <= n; ++k) {
      if (!values[k] || !values[n - k]) continue;
      const BigNat denom = *values[k] * *values[n - k];
      if (denom == 0 || !mpz_divisible_p(values[n]->get_mpz_t(), denom.get_mpz_t())) {
        report.axiom2_failures.push_back({n, k});
      }
    }
  }

  BigNat nfact = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    nfact *= static_cast<unsigned long>(n);
    if (!values[n]) continue;
    if (!mpz_divisible_p(values[n]->get_mpz_t(), nfact.get_mpz_t())) {
      report.axiom3_failures.push_back(n);
    }
  }
  return report;
}

}  // namespace bfact
