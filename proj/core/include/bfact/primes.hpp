#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bfact {

// The integer sets the factorial machinery runs over: the naturals, the
// primes, and the three prime constellations with offset patterns
// (0,2), (0,2,6) and (0,2,6,8).
enum class ConstellationKind {
  Naturals,
  Primes,
  TwinPrimes,
  PrimeTriplets,
  PrimeQuadruplets,
};

/// Short set token used on the command line and in reports:
/// nat, P, P2, P3, P4.
std::string to_string(ConstellationKind kind);
std::optional<ConstellationKind> parse_constellation(std::string_view token);

/// All primes up to a fixed limit, built once by a segmented sieve and then
/// read-only.  Growing the limit produces a new table; previously reported
/// primes never change.
class PrimeTable {
 public:
  /// limit >= 2; smaller limits are an empty domain and throw
  /// std::domain_error.
  static PrimeTable sieve_upto(std::int64_t limit);

  std::int64_t limit() const { return limit_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }
  std::size_t count() const { return primes_.size(); }

  /// Membership test for 0 <= n <= limit().
  bool is_prime(std::int64_t n) const;

  PrimeTable extended_to(std::int64_t new_limit) const;

 private:
  PrimeTable() = default;
  std::int64_t limit_ = 0;
  std::vector<std::int64_t> primes_;
};

/// 1-indexed: nth_prime(1) == 2.  n == 0 is an index error unless the caller
/// opts into the p_0 := 1 convention.
std::int64_t nth_prime(std::int64_t n, bool p0_as_one = false);

/// Union of the members of every complete pattern that fits below `limit`,
/// sorted and deduplicated.  A constellation whose largest member exceeds
/// `limit` contributes nothing, so no truncated pattern is ever reported.
/// For Naturals this is simply 0..limit.
std::vector<std::int64_t> constellation_members(ConstellationKind kind,
                                                std::int64_t limit);

/// A lazily extended, sorted prefix of one of the five sets.  Extension
/// re-sieves at a doubled limit, so amortized cost stays linear; members
/// already reported are never revised.
class ConstellationSet {
 public:
  static constexpr std::int64_t kDefaultSieveCeiling = 1'000'000'000;

  explicit ConstellationSet(ConstellationKind kind,
                            std::int64_t sieve_ceiling = kDefaultSieveCeiling);

  ConstellationKind kind() const { return kind_; }
  std::int64_t sieve_ceiling() const { return sieve_ceiling_; }
  std::int64_t sieved_to() const { return sieved_to_; }

  /// Materializes at least `count` members.  Returns false when the sieve
  /// ceiling was reached first (the set prefix stays valid but short).
  bool ensure_count(std::size_t count);

  std::span<const std::int64_t> members() const { return members_; }

 private:
  ConstellationKind kind_;
  std::int64_t sieve_ceiling_;
  std::int64_t sieved_to_ = 0;
  std::vector<std::int64_t> members_;
};

}  // namespace bfact
