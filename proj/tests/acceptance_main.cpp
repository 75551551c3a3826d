// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Budgets and tolerances are pinned in code.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bfact/apery.hpp"
#include "bfact/bhargava.hpp"
#include "bfact/cli.hpp"
#include "bfact/conjectures.hpp"
#include "bfact/report.hpp"
#include "oracles.hpp"

using namespace bfact;

namespace {

struct Criterion {
  std::string label;
  double budget_seconds;
  bool passed = false;
  double elapsed_seconds = 0.0;
  std::string detail;
};

class Suite {
 public:
  void run(const std::string& label, double budget_seconds,
           const std::function<void(std::ostringstream&)>& body) {
    Criterion c{label, budget_seconds};
    std::ostringstream why;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(why);
      c.passed = why.str().empty();
    } catch (const std::exception& e) {
      why << "exception: " << e.what();
      c.passed = false;
    }
    c.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.passed && budget_seconds > 0 && c.elapsed_seconds > budget_seconds) {
      why << "runtime " << c.elapsed_seconds << " s exceeded budget "
          << budget_seconds << " s";
      c.passed = false;
    }
    c.detail = why.str();
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.label << "  ("
              << c.elapsed_seconds << " s)";
    if (!c.detail.empty()) std::cout << "\n       " << c.detail;
    std::cout << "\n";
    criteria_.push_back(std::move(c));
  }

  int finish() const {
    int failed = 0;
    for (const auto& c : criteria_) failed += c.passed ? 0 : 1;
    std::cout << criteria_.size() - failed << "/" << criteria_.size()
              << " acceptance criteria passed\n";
    return failed == 0 ? 0 : 1;
  }

 private:
  std::vector<Criterion> criteria_;
};

BigNat factorial(unsigned long n) {
  BigNat f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

void expect(std::ostringstream& why, bool cond, const std::string& msg) {
  if (!cond) {
    if (!why.str().empty()) why << "; ";
    why << msg;
  }
}

}  // namespace

int main() {
  Suite suite;

  suite.run("1. closed form = construction for 1 <= n <= 12", 30.0,
            [](std::ostringstream& why) {
              ConstellationSet primes(ConstellationKind::Primes);
              for (std::size_t n = 1; n <= 12; ++n) {
                const auto constructed = set_factorial(primes, n);
                expect(why, constructed.ok(),
                       "construction inconclusive at n=" + std::to_string(n));
                if (!constructed.ok()) return;
                expect(why, *constructed.value == prime_factorial_closed(n),
                       "mismatch at n=" + std::to_string(n));
              }
            });

  suite.run("2. known prime-set factorials 0!..5! = 1,1,2,24,48,5760", 5.0,
            [](std::ostringstream& why) {
              const long expected[] = {1, 1, 2, 24, 48, 5760};
              for (std::size_t n = 0; n <= 5; ++n) {
                expect(why, prime_factorial_closed(n).to_integer() == expected[n],
                       "closed form wrong at n=" + std::to_string(n));
              }
            });

  suite.run("3. classical factorial recovered on the naturals, n <= 10", 10.0,
            [](std::ostringstream& why) {
              ConstellationSet nats(ConstellationKind::Naturals);
              for (std::size_t n = 0; n <= 10; ++n) {
                const auto res = set_factorial(nats, n);
                expect(why, res.ok() && res.value->to_integer() ==
                                            factorial(static_cast<unsigned long>(n)),
                       "n=" + std::to_string(n));
              }
            });

  suite.run("4. conjecture 1 verified for 1 <= n <= 20 (anchors 2 at n=1, 4 at n=2)",
            300.0, [](std::ostringstream& why) {
              const auto report = scan(ConjectureId::C1, 1, 20);
              expect(why, report.verified == 20,
                     "verified=" + std::to_string(report.verified));
              expect(why, report.violated == 0, "violations present");
              expect(why, report.inconclusive == 0, "inconclusive entries present");
              expect(why,
                     *report.results[0].ratio == FactoredNat::prime_power(2, 1),
                     "ratio at n=1 is not 2");
              expect(why,
                     *report.results[1].ratio == FactoredNat::prime_power(2, 2),
                     "ratio at n=2 is not 4");
            });

  suite.run("5. conjectures 2-3 verified for 1 <= n <= 20 with parity constants",
            300.0, [](std::ostringstream& why) {
              const auto c2 = scan(ConjectureId::C2, 1, 20);
              const auto c3 = scan(ConjectureId::C3, 1, 20);
              expect(why, c2.verified == 20 && c2.violated == 0 && c2.inconclusive == 0,
                     "c2 not fully verified");
              expect(why, c3.verified == 20 && c3.violated == 0 && c3.inconclusive == 0,
                     "c3 not fully verified");
              for (std::size_t i = 0; i < 20; ++i) {
                const std::int64_t n = static_cast<std::int64_t>(i) + 1;
                const BigInt nn(static_cast<long>(n));
                if (n % 2 == 1) {
                  expect(why, *c2.results[i].ratio == FactoredNat::prime_power(2, 1),
                         "c2 odd constant wrong at n=" + std::to_string(n));
                  expect(why, c3.results[i].ratio->is_one(),
                         "c3 odd constant wrong at n=" + std::to_string(n));
                } else {
                  const FactoredNat c2_rhs =
                      FactoredNat::prime_power(2, 1 + padic_valuation(nn, 2)) *
                      FactoredNat::prime_power(3, 1 + padic_valuation(nn, 3));
                  const FactoredNat c3_rhs =
                      FactoredNat::prime_power(3, 1 + padic_valuation(nn, 3));
                  expect(why, *c2.results[i].ratio == c2_rhs,
                         "c2 even rhs wrong at n=" + std::to_string(n));
                  expect(why, *c3.results[i].ratio == c3_rhs,
                         "c3 even rhs wrong at n=" + std::to_string(n));
                }
              }
            });

  suite.run("6. conjecture 4 on [2, 10^4]: zero violations; stated equality witness",
            10.0, [](std::ostringstream& why) {
              ScanOptions one;
              one.p0 = P0Convention::One;
              const auto report = scan(ConjectureId::C4, 2, 10000, one);
              expect(why, report.violated == 0,
                     "violations=" + std::to_string(report.violated));
              expect(why, report.verified == 9999,
                     "verified=" + std::to_string(report.verified));

              // Equality tracking works: the boundary case p_2 = p_1 + p_0
              // (3 = 2 + 1) under the `one` convention.
              const auto& at2 = report.results[0];
              expect(why,
                     at2.equalities.size() == 1 &&
                         at2.equalities[0] == C4Witness{2, 1, 3, 2, 1},
                     "boundary equality 3 = 2 + 1 missing at (n,k)=(2,1)");

              // Literal spec clause: an equality witness (n,k)=(4,1) with
              // 7 = 2+5.  Under p_n >= p_k + p_{n-k-1} the (4,1) instance is
              // 7 >= 2 + 3 (p_2 = 3), strict, and the pair 2+5 has index sum
              // 4, so it is only ever tested in row n=5 (11 >= 7).  The
              // clause cannot hold; it mis-evaluates p_2 as 5.  Checked
              // as written, reported honestly:
              bool witness_4_1 = false;
              for (const auto& w : report.results[2].equalities) {
                if (w.k == 1 && w.p_n == 7 && w.p_k == 2 && w.p_rest == 5) {
                  witness_4_1 = true;
                }
              }
              expect(why, witness_4_1,
                     "stated witness (n,k)=(4,1) '7 = 2+5' cannot occur under "
                     "p_n >= p_k + p_{n-k-1} (p_2 = 3, so (4,1) reads 7 >= 5, "
                     "strict); see decisions ledger");
            });

  suite.run("7. Definition-1 axioms: prime-closed (n<=30), classical, product (n<=10)",
            60.0, [](std::ostringstream& why) {
              expect(why, axioms_check(closed_form_prime_provider(), 30).passed(),
                     "closed form failed axioms to 30");
              expect(why, axioms_check(classical_factorial_provider(), 30).passed(),
                     "classical factorial failed axioms");
              const auto product = product_provider(classical_factorial_provider(),
                                                    closed_form_prime_provider());
              expect(why, axioms_check(product, 10).passed(),
                     "pointwise product failed axioms to 10");
            });

  suite.run("8. Apery integrality and monotonicity to n = 300", 60.0,
            [](std::ostringstream& why) {
              const auto rows = apery_rows(300);  // asserts exact divisions
              for (std::size_t i = 1; i < rows.size(); ++i) {
                expect(why, rows[i].x > rows[i - 1].x,
                       "x not increasing at n=" + std::to_string(i));
              }
              for (std::size_t i = 2; i < rows.size(); ++i) {
                const BigRat cur =
                    make_rat(rows[i].b.get_num(), rows[i].b.get_den() * rows[i].a);
                const BigRat prev = make_rat(rows[i - 1].b.get_num(),
                                             rows[i - 1].b.get_den() * rows[i - 1].a);
                expect(why, cur > prev,
                       "B/A not increasing at n=" + std::to_string(i));
              }
            });

  suite.run("9. delta_0 = -115/386; exact signs = 200-digit float check to n=300; "
            "run report deterministic",
            120.0, [](std::ostringstream& why) {
              const auto rows = apery_rows(300);
              const auto deltas = delta_rows(rows);
              expect(why, deltas[0].delta == make_rat(-115, 386),
                     "delta_0 != -115/386");
              const auto float_signs = oracle::delta_signs_float(300, 200);
              for (std::size_t n = 0; n < deltas.size(); ++n) {
                const int exact = deltas[n].sign == Sign::Neg ? -1
                                  : deltas[n].sign == Sign::Pos ? 1
                                                                : 0;
                if (exact != float_signs[n]) {
                  expect(why, false, "sign mismatch at n=" + std::to_string(n));
                  break;
                }
              }
              std::ostringstream out1, out2, err;
              const std::vector<std::string> args{"apery", "runs", "--nmax", "300",
                                                  "--format", "json"};
              cli::dispatch(args, out1, err);
              cli::dispatch(args, out2, err);
              expect(why, out1.str() == out2.str() && !out1.str().empty(),
                     "run report not byte-deterministic");
            });

  suite.run("10. B_20/A_20 inside the zeta(3) bracket, within 1e-10 of midpoint",
            60.0, [](std::ostringstream& why) {
              const auto bracket = oracle::zeta3_bracket(1000000);
              const BigRat z20 = zeta3_estimate(20);
              mpf_class v20(0, 512);
              mpf_set_q(v20.get_mpf_t(), z20.get_mpq_t());
              expect(why, v20 > bracket.lo && v20 < bracket.hi,
                     "B_20/A_20 outside the bracket");
              const mpf_class err = abs(mpf_class(v20 - bracket.mid));
              expect(why, err < mpf_class(1e-10, 512),
                     "B_20/A_20 further than 1e-10 from the bracket midpoint");
            });

  return suite.finish();
}
