#include "bfact/apery.hpp"

#include <algorithm>

namespace bfact {

BigNat apery_polynomial(std::uint64_t n) {
  const BigNat nn(static_cast<unsigned long>(n));
  return ((34 * nn + 51) * nn + 27) * nn + 5;
}

AperyInvariantError::AperyInvariantError(std::uint64_t n, const std::string& what_failed)
    : std::runtime_error("apery row " + std::to_string(n) + ": " + what_failed),
      n_(n) {}

std::vector<AperyRow> apery_rows(std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("apery_rows: n_max >= 1 required");

  std::vector<AperyRow> rows;
  rows.reserve(n_max + 1);

  BigNat lcm = 1;  // lcm{1..n}, empty range = 1

  auto finish_row = [&](std::uint64_t n, BigNat a, BigRat b) {
    AperyRow row;
    row.n = n;
    row.e = 2 * lcm * lcm * lcm;
    row.x = row.e * a;
    BigRat y = BigRat(row.e) * b;
    y.canonicalize();
    if (y.get_den() != 1) throw AperyInvariantError(n, "e_n * B_n is not an integer");
    if (y < 0) throw AperyInvariantError(n, "e_n * B_n is negative");
    row.y = y.get_num();
    row.a = std::move(a);
    row.b = std::move(b);
    rows.push_back(std::move(row));
  };

  finish_row(0, 1, make_rat(0, 1));
  mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), 1);
  finish_row(1, 5, make_rat(6, 1));

  for (std::uint64_t n = 1; n < n_max; ++n) {
    const BigNat p = apery_polynomial(n);
    const BigNat n3 = BigNat(static_cast<unsigned long>(n)) *
                      static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    const BigNat d3 = BigNat(static_cast<unsigned long>(n + 1)) *
                      static_cast<unsigned long>(n + 1) * static_cast<unsigned long>(n + 1);

    const AperyRow& cur = rows[n];
    const AperyRow& prev = rows[n - 1];

    BigNat a_num = p * cur.a - n3 * prev.a;
    if (!mpz_divisible_p(a_num.get_mpz_t(), d3.get_mpz_t())) {
      throw AperyInvariantError(n + 1, "A recurrence division is not exact");
    }
    BigNat a_next = a_num / d3;
    if (a_next <= 0) throw AperyInvariantError(n + 1, "A_n is not positive");

    BigRat b_next = (BigRat(p) * cur.b - BigRat(n3) * prev.b) / BigRat(d3);
    b_next.canonicalize();

    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(n + 1));
    finish_row(n + 1, std::move(a_next), std::move(b_next));
  }
  return rows;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Neg: return "neg";
    case Sign::Zero: return "zero";
    case Sign::Pos: return "pos";
  }
  throw std::domain_error("unknown sign");
}

Sign sign_of_rat(const BigRat& q) {
  const int s = sign_of(q);
  return s < 0 ? Sign::Neg : (s > 0 ? Sign::Pos : Sign::Zero);
}

DeltaRow delta(std::uint64_t n, std::span<const AperyRow> rows) {
  if (rows.size() < n + 3) {
    throw std::out_of_range("delta: rows through n + 2 are required");
  }
  auto fwd = [&](std::uint64_t m) {
    const BigNat dx = rows[m + 1].x - rows[m].x;
    const BigNat dy = rows[m + 1].y - rows[m].y;
    if (dx == 0) throw std::domain_error("delta: zero forward difference of x");
    return make_rat(dy, dx);
  };
  DeltaRow row;
  row.n = n;
  row.delta = fwd(n + 1) - fwd(n);
  row.delta.canonicalize();
  row.sign = sign_of_rat(row.delta);
  return row;
}

std::vector<DeltaRow> delta_rows(std::span<const AperyRow> rows) {
  std::vector<DeltaRow> out;
  if (rows.size() < 3) return out;
  out.reserve(rows.size() - 2);
  for (std::uint64_t n = 0; n + 2 < rows.size(); ++n) out.push_back(delta(n, rows));
  return out;
}

BrunPreconditionReport brun_preconditions(std::span<const AperyRow> rows) {
  if (rows.size() < 3) {
    throw std::invalid_argument("brun_preconditions: needs rows through n = 2");
  }
  BrunPreconditionReport report;
  report.n_max = rows.back().n;
  report.x_positive_increasing = true;
  report.y_positive_from_1 = true;
  report.ratio_strictly_increasing = true;
  report.y0_is_zero = rows.front().y == 0;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].x <= 0 || (i > 0 && rows[i].x <= rows[i - 1].x)) {
      report.x_positive_increasing = false;
      report.failures.push_back({"x_positive_increasing", rows[i].n});
    }
    if (i >= 1 && rows[i].y <= 0) {
      report.y_positive_from_1 = false;
      report.failures.push_back({"y_positive", rows[i].n});
    }
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    // y_{n+1}/x_{n+1} > y_n/x_n, exactly
    if (make_rat(rows[i + 1].y, rows[i + 1].x) <= make_rat(rows[i].y, rows[i].x)) {
      report.ratio_strictly_increasing = false;
      report.failures.push_back({"ratio_strictly_increasing", rows[i].n});
    }
  }
  return report;
}

BrunPreconditionReport brun_preconditions(std::uint64_t n_max) {
  if (n_max < 2) throw std::invalid_argument("brun_preconditions: n_max >= 2 required");
  const auto rows = apery_rows(n_max);
  return brun_preconditions(rows);
}

RunReport negative_run_scan(std::span<const DeltaRow> deltas, std::uint64_t n_max) {
  RunReport report;
  report.n_max = n_max;

  for (const DeltaRow& d : deltas) {
    switch (d.sign) {
      case Sign::Neg: ++report.negative; break;
      case Sign::Zero: ++report.zero; break;
      case Sign::Pos: ++report.positive; break;
    }
  }

  // Maximal runs of consecutive negative signs.
  for (std::size_t i = 0; i < deltas.size();) {
    if (deltas[i].sign != Sign::Neg) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < deltas.size() && deltas[j].sign == Sign::Neg) ++j;
    report.maximal_runs.push_back({deltas[i].n, static_cast<std::uint64_t>(j - i)});
    i = j;
  }
  std::sort(report.maximal_runs.begin(), report.maximal_runs.end(),
            [](const NegativeRun& a, const NegativeRun& b) {
              return a.length != b.length ? a.length > b.length : a.start < b.start;
            });

  if (!report.maximal_runs.empty()) {
    const std::uint64_t longest = report.maximal_runs.front().length;
    for (std::uint64_t len = 1; len <= longest; ++len) {
      std::uint64_t best = UINT64_MAX;
      for (const NegativeRun& run : report.maximal_runs) {
        if (run.length >= len) best = std::min(best, run.start);
      }
      report.first_run_of_length.push_back({len, best});
    }
  }
  return report;
}

RunReport negative_run_scan(std::uint64_t n_max) {
  if (n_max < 3) throw std::invalid_argument("negative_run_scan: n_max >= 3 required");
  const auto rows = apery_rows(n_max);
  const auto deltas = delta_rows(rows);
  return negative_run_scan(deltas, n_max);
}

BigRat zeta3_estimate(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("zeta3_estimate: n >= 1 required");
  const auto rows = apery_rows(n);
  return make_rat(rows[n].b.get_num(), rows[n].b.get_den() * rows[n].a);
}

}  // namespace bfact
