#include "bfact/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bfact {

std::string to_string(ConstellationKind kind) {
  switch (kind) {
    case ConstellationKind::Naturals: return "nat";
    case ConstellationKind::Primes: return "P";
    case ConstellationKind::TwinPrimes: return "P2";
    case ConstellationKind::PrimeTriplets: return "P3";
    case ConstellationKind::PrimeQuadruplets: return "P4";
  }
  throw std::domain_error("unknown constellation kind");
}

std::optional<ConstellationKind> parse_constellation(std::string_view token) {
  if (token == "nat") return ConstellationKind::Naturals;
  if (token == "P") return ConstellationKind::Primes;
  if (token == "P2") return ConstellationKind::TwinPrimes;
  if (token == "P3") return ConstellationKind::PrimeTriplets;
  if (token == "P4") return ConstellationKind::PrimeQuadruplets;
  return std::nullopt;
}

PrimeTable PrimeTable::sieve_upto(std::int64_t limit) {
  if (limit < 2) throw std::domain_error("sieve_upto: limit < 2 is an empty domain");

  PrimeTable table;
  table.limit_ = limit;

  // Segmented sieve of Eratosthenes; segments keep the working set inside
  // the cache even when the limit runs into the 10^9 range.
  const std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit)));
  std::vector<char> small(root + 2, 1);
  std::vector<std::int64_t> base;
  for (std::int64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::int64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  const std::int64_t segment = std::max<std::int64_t>(1 << 16, root);
  std::vector<char> sieve(segment);
  table.primes_.reserve(static_cast<std::size_t>(
      limit > 16 ? static_cast<double>(limit) / (std::log(static_cast<double>(limit)) - 1.1)
                 : 8.0));

  for (std::int64_t low = 2; low <= limit; low += segment) {
    const std::int64_t high = std::min(low + segment - 1, limit);
    std::fill(sieve.begin(), sieve.end(), 1);
    for (std::int64_t p : base) {
      if (p * p > high) break;
      std::int64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      for (std::int64_t j = start; j <= high; j += p) sieve[j - low] = 0;
    }
    for (std::int64_t n = low; n <= high; ++n) {
      if (sieve[n - low]) table.primes_.push_back(n);
    }
  }
  return table;
}

bool PrimeTable::is_prime(std::int64_t n) const {
  if (n > limit_) throw std::out_of_range("PrimeTable::is_prime beyond sieved limit");
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable PrimeTable::extended_to(std::int64_t new_limit) const {
  if (new_limit <= limit_) return *this;
  return sieve_upto(new_limit);
}

std::int64_t nth_prime(std::int64_t n, bool p0_as_one) {
  if (n == 0 && p0_as_one) return 1;
  if (n < 1) throw std::out_of_range("nth_prime: index must be >= 1");
  // Rosser-type bound p_n <= n(ln n + ln ln n) for n >= 6.
  std::int64_t bound = 15;
  if (n >= 6) {
    const double nd = static_cast<double>(n);
    bound = static_cast<std::int64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 2;
  }
  PrimeTable table = PrimeTable::sieve_upto(bound);
  while (table.count() < static_cast<std::size_t>(n)) {
    table = table.extended_to(table.limit() * 2);
  }
  return table.primes()[static_cast<std::size_t>(n - 1)];
}

namespace {

// Offset patterns; twins etc. contribute the union of their members.
constexpr std::int64_t kTwinOffsets[] = {0, 2};
constexpr std::int64_t kTripletOffsets[] = {0, 2, 6};
constexpr std::int64_t kQuadrupletOffsets[] = {0, 2, 6, 8};

std::vector<std::int64_t> pattern_union(const PrimeTable& table,
                                        std::span<const std::int64_t> offsets,
                                        std::int64_t limit) {
  std::vector<std::int64_t> out;
  const std::int64_t span = offsets.back();
  for (std::int64_t p : table.primes()) {
    if (p + span > limit) break;  // only complete patterns count
    bool all = true;
    for (std::int64_t off : offsets) {
      if (off != 0 && !table.is_prime(p + off)) {
        all = false;
        break;
      }
    }
    if (!all) continue;
    for (std::int64_t off : offsets) out.push_back(p + off);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::int64_t> constellation_members(ConstellationKind kind,
                                                std::int64_t limit) {
  if (limit < 2) throw std::domain_error("constellation_members: limit < 2");
  if (kind == ConstellationKind::Naturals) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(limit) + 1);
    for (std::int64_t i = 0; i <= limit; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
  }
  const PrimeTable table = PrimeTable::sieve_upto(limit);
  switch (kind) {
    case ConstellationKind::Primes: return table.primes();
    case ConstellationKind::TwinPrimes: return pattern_union(table, kTwinOffsets, limit);
    case ConstellationKind::PrimeTriplets:
      return pattern_union(table, kTripletOffsets, limit);
    case ConstellationKind::PrimeQuadruplets:
      return pattern_union(table, kQuadrupletOffsets, limit);
    default: throw std::domain_error("unknown constellation kind");
  }
}

ConstellationSet::ConstellationSet(ConstellationKind kind, std::int64_t sieve_ceiling)
    : kind_(kind), sieve_ceiling_(sieve_ceiling) {}

bool ConstellationSet::ensure_count(std::size_t count) {
  if (kind_ == ConstellationKind::Naturals) {
    while (members_.size() < count) {
      members_.push_back(static_cast<std::int64_t>(members_.size()));
    }
    sieved_to_ = members_.empty() ? 0 : members_.back();
    return true;
  }
  if (members_.size() >= count) return true;
  std::int64_t limit = std::max<std::int64_t>(sieved_to_, 1 << 10);
  while (members_.size() < count) {
    if (sieved_to_ >= sieve_ceiling_) return false;
    limit = std::min(limit * 2, sieve_ceiling_);
    members_ = constellation_members(kind_, limit);
    sieved_to_ = limit;
  }
  return true;
}

}  // namespace bfact
