#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bfact/bhargava.hpp"
#include "bfact/exactmath.hpp"
#include "bfact/primes.hpp"

namespace bfact {

enum class ConjectureId { C1, C2, C3, C4 };

std::string to_string(ConjectureId id);
std::optional<ConjectureId> parse_conjecture(std::string_view token);

// Ordered worst-last: a scan's aggregate verdict is the maximum.
enum class CheckStatus { Verified, Inconclusive, Violated };

std::string to_string(CheckStatus status);

// The prime inequality references p_0 when k = n-1; the index is otherwise
// undefined, so the harness exposes both readings.
enum class P0Convention { One, Skip };

std::string to_string(P0Convention conv);
std::optional<P0Convention> parse_p0(std::string_view token);

struct C4Witness {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t p_n = 0;
  std::int64_t p_k = 0;
  std::int64_t p_rest = 0;  // p_{n-k-1}
  friend bool operator==(const C4Witness&, const C4Witness&) = default;
};

/// Outcome of one conjecture instance.  Verified means the exact predicate
/// held; violated always carries a reproducible witness; inconclusive marks
/// a truncation that failed to stabilize and can never count as either.
struct CheckResult {
  ConjectureId id{};
  std::int64_t n = 0;
  CheckStatus status = CheckStatus::Inconclusive;

  // Ratio conjectures.  `ratio` is the exact quotient when it exists,
  // `expected` the conjectured right-hand side in factored form.  A
  // divisibility failure (the divisor factorial does not even divide the
  // dividend) is a louder violation class than a wrong ratio.
  std::optional<FactoredNat> ratio;
  std::optional<FactoredNat> expected;
  bool divisibility_failure = false;
  std::int64_t offending_prime = 0;  // divisibility or unstable prime
  std::size_t truncation_used = 0;

  // Prime inequality witnesses.
  std::vector<C4Witness> violations;
  std::vector<C4Witness> equalities;
};

/// n!_{P2} / n!_P = 2 * w_2(n), i.e. the quotient is {2: 1 + v_2(n)}.
CheckResult check_c1(std::int64_t n, const TruncationPolicy& policy = {});

/// n!_{P3} / n!_P = 3! * w_2(n) * w_3(n) for even n, and 2 for odd n.
CheckResult check_c2(std::int64_t n, const TruncationPolicy& policy = {});

/// n!_{P4} / n!_{P2} = 3 * w_3(n) for even n, and 1 for odd n.
CheckResult check_c3(std::int64_t n, const TruncationPolicy& policy = {});

/// p_n >= p_k + p_{n-k-1} for 1 <= k <= n-1 (k <= n-2 under Skip).
CheckResult check_c4(std::int64_t n, P0Convention p0 = P0Convention::One);

struct ScanOptions {
  TruncationPolicy policy{};
  P0Convention p0 = P0Convention::One;
  unsigned jobs = 1;
};

/// Aggregate over an inclusive n range, results in ascending n order
/// regardless of evaluation order.
struct ScanReport {
  ConjectureId id{};
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  std::size_t verified = 0;
  std::size_t violated = 0;
  std::size_t inconclusive = 0;
  std::vector<CheckResult> results;
  std::int64_t wall_time_ms = 0;

  CheckStatus worst() const;
};

ScanReport scan(ConjectureId id, std::int64_t n_lo, std::int64_t n_hi,
                const ScanOptions& options = {});

}  // namespace bfact
