#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfact/exactmath.hpp"

namespace bfact {

/// P(n) = 34n^3 + 51n^2 + 27n + 5, the recurrence coefficient polynomial.
BigNat apery_polynomial(std::uint64_t n);

/// One exact row of the weighted sequences: A_n integral, B_n rational,
/// e_n = 2 * lcm{1..n}^3, x_n = e_n A_n and y_n = e_n B_n (integral).
struct AperyRow {
  std::uint64_t n = 0;
  BigNat a;
  BigRat b;
  BigNat e;
  BigNat x;
  BigNat y;
};

/// Raised when a structural claim the construction relies on fails: an
/// inexact division in the A recurrence or a non-integral e_n * B_n.  Either
/// would falsify this implementation, not the underlying sequences.
class AperyInvariantError : public std::runtime_error {
 public:
  AperyInvariantError(std::uint64_t n, const std::string& what_failed);
  std::uint64_t n() const { return n_; }

 private:
  std::uint64_t n_;
};

/// Rows 0..n_max from A_0=1, A_1=5, B_0=0, B_1=6 and
/// Z_{n+1} = (P(n) Z_n - n^3 Z_{n-1}) / (n+1)^3 for both sequences.
std::vector<AperyRow> apery_rows(std::uint64_t n_max);

enum class Sign { Neg, Zero, Pos };

std::string to_string(Sign s);
Sign sign_of_rat(const BigRat& q);

/// delta_n = (forward difference applied twice) = Dy_{n+1}/Dx_{n+1} - Dy_n/Dx_n
/// with Dz_n = z_{n+1} - z_n; requires rows through n+2.
struct DeltaRow {
  std::uint64_t n = 0;
  BigRat delta;
  Sign sign = Sign::Zero;
};

DeltaRow delta(std::uint64_t n, std::span<const AperyRow> rows);

/// All deltas computable from the rows: n = 0 .. rows.size() - 3.
std::vector<DeltaRow> delta_rows(std::span<const AperyRow> rows);

/// The hypotheses of Brun's irrationality criterion, checked exactly:
/// x_n positive strictly increasing, y_n positive (from n = 1; y_0 = 0 is
/// reported on its own), and y_n/x_n strictly increasing.
struct BrunPreconditionFailure {
  std::string check;
  std::uint64_t n = 0;
};

struct BrunPreconditionReport {
  std::uint64_t n_max = 0;
  bool x_positive_increasing = false;
  bool y_positive_from_1 = false;
  bool y0_is_zero = false;
  bool ratio_strictly_increasing = false;
  std::vector<BrunPreconditionFailure> failures;
  bool all_pass() const {
    return x_positive_increasing && y_positive_from_1 && ratio_strictly_increasing;
  }
};

BrunPreconditionReport brun_preconditions(std::span<const AperyRow> rows);
BrunPreconditionReport brun_preconditions(std::uint64_t n_max);

struct NegativeRun {
  std::uint64_t start = 0;
  std::uint64_t length = 0;
  friend bool operator==(const NegativeRun&, const NegativeRun&) = default;
};

/// Sign census of delta_0 .. delta_{n_max - 2} plus the maximal runs of
/// consecutive negatives (longest first) and, per run length L, the smallest
/// n whose run reaches L.  The scanner reports; it asserts nothing about
/// how far the negativity extends.
struct RunReport {
  std::uint64_t n_max = 0;
  std::uint64_t negative = 0;
  std::uint64_t zero = 0;
  std::uint64_t positive = 0;
  std::vector<NegativeRun> maximal_runs;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> first_run_of_length;
};

RunReport negative_run_scan(std::span<const DeltaRow> deltas, std::uint64_t n_max);
RunReport negative_run_scan(std::uint64_t n_max);

/// B_n / A_n, the exact rational approximant of zeta(3); n >= 1.
BigRat zeta3_estimate(std::uint64_t n);

}  // namespace bfact
