#include "bfact/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bfact {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

int sign_of(const BigRat& q) { return mpq_sgn(q.get_mpq_t()); }

std::string rat_to_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime_small(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= p; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

std::int64_t padic_valuation(const BigInt& n, std::int64_t p) {
  if (n == 0) throw std::domain_error("padic_valuation: undefined at n = 0");
  if (!is_prime_small(p)) {
    throw std::domain_error("padic_valuation: modulus " + std::to_string(p) +
                            " is not prime");
  }
  mpz_class stripped;
  mpz_class pz(static_cast<long>(p));
  return static_cast<std::int64_t>(
      mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

BigNat padic_power_part(const BigInt& n, std::int64_t p) {
  const std::int64_t e = padic_valuation(n, p);
  BigNat power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return power;
}

BigNat lcm_upto(std::uint64_t n) {
  BigNat acc = 1;
  for (std::uint64_t k = 2; k <= n; ++k) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return acc;
}

DigitCapExceeded::DigitCapExceeded(std::size_t estimated_digits, std::size_t cap)
    : std::runtime_error("integer rendering refused: ~" +
                         std::to_string(estimated_digits) +
                         " digits exceeds cap " + std::to_string(cap)),
      estimated_digits_(estimated_digits),
      cap_(cap) {}

FactoredNat FactoredNat::prime_power(std::int64_t p, std::int64_t e) {
  if (!is_prime_small(p)) {
    throw std::domain_error("FactoredNat: " + std::to_string(p) + " is not prime");
  }
  if (e < 0) throw std::domain_error("FactoredNat: negative exponent");
  FactoredNat f;
  if (e > 0) f.factors_.push_back({p, e});
  return f;
}

FactoredNat FactoredNat::of_integer(std::int64_t m) {
  if (m < 1) throw std::domain_error("FactoredNat::of_integer: needs m >= 1");
  FactoredNat f;
  for (std::int64_t d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
    if (m % d != 0) continue;
    std::int64_t e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    f.factors_.push_back({d, e});
  }
  if (m > 1) f.factors_.push_back({m, 1});
  return f;
}

FactoredNat FactoredNat::from_factors(std::vector<PrimePower> factors) {
  std::int64_t prev = 0;
  for (const auto& [p, e] : factors) {
    if (p <= prev) throw std::domain_error("FactoredNat: primes not strictly increasing");
    if (e < 1) throw std::domain_error("FactoredNat: exponent < 1 stored");
    if (!is_prime_small(p)) {
      throw std::domain_error("FactoredNat: " + std::to_string(p) + " is not prime");
    }
    prev = p;
  }
  FactoredNat f;
  f.factors_ = std::move(factors);
  return f;
}

std::int64_t FactoredNat::exponent_of(std::int64_t p) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), p,
      [](const PrimePower& pp, std::int64_t key) { return pp.prime < key; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

FactoredNat& FactoredNat::operator*=(const FactoredNat& rhs) {
  std::vector<PrimePower> merged;
  merged.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->prime < a->prime) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  return *this;
}

bool FactoredNat::divides(const FactoredNat& rhs) const {
  for (const auto& [p, e] : factors_) {
    if (rhs.exponent_of(p) < e) return false;
  }
  return true;
}

std::size_t FactoredNat::digits10_estimate() const {
  double digits = 0.0;
  for (const auto& [p, e] : factors_) {
    digits += static_cast<double>(e) * std::log10(static_cast<double>(p));
  }
  return static_cast<std::size_t>(digits) + 1;
}

BigNat FactoredNat::to_integer(std::size_t digit_cap) const {
  const std::size_t est = digits10_estimate();
  if (est > digit_cap) throw DigitCapExceeded(est, digit_cap);
  BigNat value = 1;
  BigNat power;
  for (const auto& [p, e] : factors_) {
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
    value *= power;
  }
  return value;
}

std::string FactoredNat::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " · ";
    os << p;
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

FactoredNat factored_mul(const FactoredNat& a, const FactoredNat& b) { return a * b; }

DivExactResult factored_div_exact(const FactoredNat& a, const FactoredNat& b) {
  std::vector<PrimePower> quotient;
  for (const auto& [p, e] : b.factors()) {
    if (a.exponent_of(p) < e) return {std::nullopt, p};
  }
  for (const auto& [p, e] : a.factors()) {
    const std::int64_t rem = e - b.exponent_of(p);
    if (rem > 0) quotient.push_back({p, rem});
  }
  DivExactResult res;
  res.quotient = FactoredNat::from_factors(std::move(quotient));
  return res;
}

}  // namespace bfact
