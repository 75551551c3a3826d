#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bfact/exactmath.hpp"
#include "bfact/primes.hpp"

namespace bfact {

// Truncation policy for factorials over infinite sets.  The p-sequence of a
// set is computed on a finite member prefix of size M; M starts at
// initial_multiplier*(n+1) and doubles until the exponent vector repeats
// across `required_agreements` consecutive doublings or the member cap is
// hit.  An unstable result is reported as inconclusive, never as a value.
struct TruncationPolicy {
  std::size_t initial_multiplier = 4;
  std::size_t max_members = 1 << 16;
  int required_agreements = 2;
  std::int64_t sieve_ceiling = ConstellationSet::kDefaultSieveCeiling;
};

/// One greedy p-ordering of a finite set: the chosen elements a_0..a_k and
/// the exponent of p in prod_{i<k}(a_k - a_i) at each step.  a_0 is pinned
/// to the smallest element and ties break toward smaller candidates, which
/// makes the construction deterministic; the exponents themselves are an
/// invariant of the set (tested, not assumed).
struct POrdering {
  std::int64_t p = 0;
  std::vector<std::int64_t> elements;   // a_0 .. a_{k_max}
  std::vector<std::int64_t> exponents;  // nu_1 .. nu_{k_max}, exponent form
};

/// members must be sorted, pairwise distinct, with |members| >= k_max + 1;
/// too few elements throw std::invalid_argument.
POrdering greedy_p_ordering(std::span<const std::int64_t> members, std::int64_t p,
                            std::size_t k_max);

struct StabilizedPSequence {
  std::int64_t p = 0;
  std::vector<std::int64_t> exponents;  // nu_1 .. nu_n, exponent form
  std::size_t truncation_used = 0;
  bool stable = false;
};

/// The p-sequence of an infinite set under the truncation policy.  The
/// doubling loop is short-circuited by a residue certificate: once n+1
/// distinct residues mod p occur among the materialized members, every
/// exponent nu_1..nu_n is 0 for this and every larger prefix, so the result
/// is stable by proof rather than by observation.
StabilizedPSequence stabilized_p_sequence(ConstellationSet& set, std::int64_t p,
                                          std::size_t n,
                                          const TruncationPolicy& policy = {});
StabilizedPSequence stabilized_p_sequence(ConstellationKind kind, std::int64_t p,
                                          std::size_t n,
                                          const TruncationPolicy& policy = {});

/// Result of a generalized factorial over a possibly infinite set.  `value`
/// is engaged only when every contributing p-sequence stabilized; otherwise
/// failing_prime names the first prime whose sequence stayed unstable
/// (0 when the set itself ran out of members below the sieve ceiling).
struct FactorialResult {
  std::optional<FactoredNat> value;
  std::int64_t failing_prime = 0;
  std::size_t max_truncation = 0;
  bool ok() const { return value.has_value(); }
};

/// n!_X as a factored natural: the product over primes p of p^{nu_n(X, p)}.
/// Only primes up to the spread of the first n+1 members can contribute;
/// any larger prime leaves those members pairwise distinct mod p, which
/// forces nu_k = 0 for all k <= n.
FactorialResult set_factorial(ConstellationSet& set, std::size_t n,
                              const TruncationPolicy& policy = {});
FactorialResult set_factorial(ConstellationKind kind, std::size_t n,
                              const TruncationPolicy& policy = {});

/// Closed form of n!_P for the set of all primes:
/// exponent of p is sum_{m>=0} floor((n-1) / (p^m (p-1))).
FactoredNat prime_factorial_closed(std::size_t n);

/// An abstract factorial candidate: maps n to an exact positive integer, or
/// to nullopt where the value is unavailable (e.g. an unstable truncation).
using FactorialProvider = std::function<std::optional<BigNat>(std::size_t)>;

FactorialProvider classical_factorial_provider();
FactorialProvider closed_form_prime_provider();
/// f(0) = f(1) = 1 and f(n) = p_{n-1}! for n >= 2 ("pfact" on the CLI).
FactorialProvider pfact_provider();
FactorialProvider product_provider(FactorialProvider f, FactorialProvider g);
FactorialProvider set_factorial_provider(ConstellationKind kind,
                                         const TruncationPolicy& policy = {});

enum class BinomialStatus { Integral, NonIntegral, Inconclusive };

/// n!_a / (k!_a (n-k)!_a).  A non-integral quotient is an axiom-test
/// outcome, reported with the exact rational witness.
struct BinomialResult {
  BinomialStatus status = BinomialStatus::Inconclusive;
  BigNat value;    // engaged when Integral
  BigRat witness;  // the exact non-integral quotient when NonIntegral
};

BinomialResult generalized_binomial(std::size_t n, std::size_t k,
                                    const FactorialProvider& fact);

/// Definition of an abstract factorial, checked on [0, n_max]:
///  1. 0!_a = 1,
///  2. every generalized binomial is a positive integer,
///  3. n! divides n!_a.
struct AxiomReport {
  std::size_t n_max = 0;
  bool axiom1_ok = false;
  std::vector<std::pair<std::size_t, std::size_t>> axiom2_failures;  // (n, k)
  std::vector<std::size_t> axiom3_failures;
  std::vector<std::size_t> untested;  // provider had no value at these n
  bool passed() const {
    return axiom1_ok && axiom2_failures.empty() && axiom3_failures.empty();
  }
};

AxiomReport axioms_check(const FactorialProvider& fact, std::size_t n_max);

}  // namespace bfact
