#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bfact {

// Arbitrary-precision carriers.  BigNat values are nonnegative by contract;
// BigRat values are kept canonical (reduced, positive denominator) by every
// routine in this library that constructs one.
using BigNat = mpz_class;
using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds the canonical rational num/den.  Throws std::domain_error when
/// den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// -1, 0 or +1.
int sign_of(const BigRat& q);

/// Renders a rational as "num/den" with the canonical reduced form, e.g.
/// "-115/386".  Integral values render as "n/1".
std::string rat_to_string(const BigRat& q);

/// Deterministic primality test by trial division.  Intended for the small
/// prime arguments of the valuation routines, not for bulk prime generation.
bool is_prime_small(std::int64_t p);

/// Exponent of the largest power of p dividing n.  n must be nonzero and p
/// prime; violations throw std::domain_error.
std::int64_t padic_valuation(const BigInt& n, std::int64_t p);

/// The power p^padic_valuation(n, p) itself, e.g. (80, 2) -> 16.
BigNat padic_power_part(const BigInt& n, std::int64_t p);

/// lcm{1, ..., n}; the empty range (n == 0) yields 1.
BigNat lcm_upto(std::uint64_t n);

struct PrimePower {
  std::int64_t prime = 0;
  std::int64_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Thrown by FactoredNat::to_integer when the decimal size of the value
/// exceeds the caller's digit cap.
class DigitCapExceeded : public std::runtime_error {
 public:
  DigitCapExceeded(std::size_t estimated_digits, std::size_t cap);
  std::size_t estimated_digits() const { return estimated_digits_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t estimated_digits_;
  std::size_t cap_;
};

/// A nonnegative integer held as its prime factorization: a sorted list of
/// prime -> exponent entries with all exponents >= 1.  The empty list is 1.
///
/// Values are built factored and stay factored; conversion to a plain
/// integer is on demand and refuses beyond a digit cap, since the factorials
/// this type carries grow far faster than anything worth printing.
class FactoredNat {
 public:
  static constexpr std::size_t kDefaultDigitCap = 100000;

  FactoredNat() = default;

  static FactoredNat one() { return FactoredNat{}; }
  static FactoredNat prime_power(std::int64_t p, std::int64_t e);
  /// Trial-division factorization of a small integer m >= 1.
  static FactoredNat of_integer(std::int64_t m);
  /// Validates ordering, primality and positive exponents.
  static FactoredNat from_factors(std::vector<PrimePower> factors);

  bool is_one() const { return factors_.empty(); }
  const std::vector<PrimePower>& factors() const { return factors_; }
  std::int64_t exponent_of(std::int64_t p) const;

  FactoredNat& operator*=(const FactoredNat& rhs);
  friend FactoredNat operator*(FactoredNat lhs, const FactoredNat& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Exponent-wise <=, i.e. *this divides rhs.
  bool divides(const FactoredNat& rhs) const;

  /// Upper estimate of the decimal digit count of the value.
  std::size_t digits10_estimate() const;

  /// Expands the factorization.  Throws DigitCapExceeded when the estimated
  /// size is beyond digit_cap.
  BigNat to_integer(std::size_t digit_cap = kDefaultDigitCap) const;

  /// "2^7 · 3^2 · 5" with unit exponents left bare; "1" for the empty value.
  std::string to_string() const;

  friend bool operator==(const FactoredNat&, const FactoredNat&) = default;

 private:
  std::vector<PrimePower> factors_;
};

FactoredNat factored_mul(const FactoredNat& a, const FactoredNat& b);

/// Outcome of an exact factored division.  A non-divisible pair is a
/// first-class verification result, not an error: the offending prime names
/// the smallest prime whose exponent in b exceeds its exponent in a.
struct DivExactResult {
  std::optional<FactoredNat> quotient;
  std::int64_t offending_prime = 0;
  explicit operator bool() const { return quotient.has_value(); }
};

DivExactResult factored_div_exact(const FactoredNat& a, const FactoredNat& b);

}  // namespace bfact
