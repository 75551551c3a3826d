#include "bfact/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "bfact/report.hpp"

namespace bfact::cli {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int status_to_exit(CheckStatus status) {
  switch (status) {
    case CheckStatus::Verified: return kExitVerified;
    case CheckStatus::Violated: return kExitViolated;
    case CheckStatus::Inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

Payload run_factorial(const RunConfig& config) {
  FactorialPayload payload;
  payload.kind = *parse_constellation(config.set_token);
  payload.n = config.n;
  payload.closed_form = config.closed_form;
  payload.digit_cap = config.digit_cap;
  if (config.closed_form) {
    payload.result.value = prime_factorial_closed(static_cast<std::size_t>(config.n));
  } else {
    payload.result = set_factorial(payload.kind, static_cast<std::size_t>(config.n),
                                   config.truncation_policy());
  }
  return payload;
}

Payload run_conjecture(const RunConfig& config) {
  ScanOptions options;
  options.policy = config.truncation_policy();
  options.p0 = *parse_p0(config.p0);
  options.jobs = config.jobs;
  return scan(*parse_conjecture(config.selector), config.from, config.to, options);
}

Payload run_apery(const RunConfig& config) {
  const std::uint64_t nmax = static_cast<std::uint64_t>(config.nmax);
  if (config.selector == "table") {
    return AperyTablePayload{apery_rows(nmax)};
  }
  if (config.selector == "delta") {
    const auto rows = apery_rows(nmax);
    return DeltaPayload{nmax, delta_rows(rows)};
  }
  if (config.selector == "runs") {
    return negative_run_scan(nmax);
  }
  return brun_preconditions(nmax);
}

Payload run_axioms(const RunConfig& config) {
  FactorialProvider provider;
  if (config.selector == "prime-closed") {
    provider = closed_form_prime_provider();
  } else if (config.selector == "pfact") {
    provider = pfact_provider();
  } else {
    provider = classical_factorial_provider();
  }
  return AxiomPayload{config.selector,
                      axioms_check(provider, static_cast<std::size_t>(config.nmax))};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  RunConfig config;

  CLI::App app{"exact Bhargava factorials over prime constellations, with "
               "conjecture scans and the Apery/Brun machinery"};
  app.name("bfact");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--format", config.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--truncate-cap", config.truncate_cap,
                 "Member cap for truncating infinite sets")
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "Worker threads for scans")
      ->check(CLI::Range(1u, 512u))
      ->capture_default_str();
  app.add_option("--out", config.out_path, "Write the report to a file");
  app.add_option("--digit-cap", config.digit_cap,
                 "Refuse to expand integers beyond this many decimal digits")
      ->capture_default_str();
  app.add_flag("--timing", config.timing,
               "Include timestamps and wall times (reports are otherwise "
               "byte-reproducible)");

  auto* factorial = app.add_subcommand("factorial", "Compute n!_X for a set X");
  factorial->add_option("--set", config.set_token, "nat, P, P2, P3 or P4")
      ->required()
      ->check(CLI::IsMember({"nat", "P", "P2", "P3", "P4"}));
  factorial->add_option("--n", config.n, "Index n >= 0")->required();
  factorial->add_flag("--closed-form", config.closed_form,
                      "Use the closed form for the prime set instead of the "
                      "p-ordering construction (set P only)");

  auto* conjecture =
      app.add_subcommand("conjecture", "Scan a conjecture over an n range");
  conjecture->add_option("which", config.selector, "c1, c2, c3 or c4")
      ->required()
      ->check(CLI::IsMember({"c1", "c2", "c3", "c4"}));
  conjecture->add_option("--from", config.from, "First n")->required();
  conjecture->add_option("--to", config.to, "Last n")->required();
  conjecture->add_option("--p0", config.p0, "Reading of p_0 in the prime inequality")
      ->check(CLI::IsMember({"one", "skip"}))
      ->capture_default_str();

  auto* apery = app.add_subcommand("apery", "Exact Apery/Brun sequences");
  apery
      ->add_option("which", config.selector,
                   "table, delta, runs or preconditions")
      ->required()
      ->check(CLI::IsMember({"table", "delta", "runs", "preconditions"}));
  apery->add_option("--nmax", config.nmax, "Last row index")->required();

  auto* axioms =
      app.add_subcommand("axioms", "Check the abstract-factorial axioms");
  axioms->add_option("--which", config.selector, "prime-closed, pfact or classical")
      ->required()
      ->check(CLI::IsMember({"prime-closed", "pfact", "classical"}));
  axioms->add_option("--nmax", config.nmax, "Check range [0, nmax]")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitVerified;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();

  // Domain validation beyond flag syntax.
  try {
    if (config.subcommand == "factorial") {
      if (config.n < 0) throw std::invalid_argument("factorial: --n must be >= 0");
      if (config.closed_form && config.set_token != "P") {
        throw std::invalid_argument("--closed-form applies to --set P only");
      }
    } else if (config.subcommand == "conjecture") {
      const std::int64_t min_n = (config.selector == "c4") ? 2 : 1;
      if (config.from < min_n || config.to < config.from) {
        throw std::invalid_argument("conjecture " + config.selector +
                                    ": need " + std::to_string(min_n) +
                                    " <= from <= to");
      }
    } else if (config.subcommand == "apery") {
      std::int64_t min_nmax = 1;
      if (config.selector == "delta") min_nmax = 2;
      if (config.selector == "preconditions") min_nmax = 2;
      if (config.selector == "runs") min_nmax = 3;
      if (config.nmax < min_nmax) {
        throw std::invalid_argument("apery " + config.selector + ": --nmax must be >= " +
                                    std::to_string(min_nmax));
      }
    } else if (config.subcommand == "axioms") {
      if (config.nmax < 0) throw std::invalid_argument("axioms: --nmax must be >= 0");
    }
    if (config.truncate_cap < 2) {
      throw std::invalid_argument("--truncate-cap must be >= 2");
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ReportEnvelope envelope;
  try {
    Payload payload;
    if (config.subcommand == "factorial") {
      payload = run_factorial(config);
    } else if (config.subcommand == "conjecture") {
      payload = run_conjecture(config);
    } else if (config.subcommand == "apery") {
      payload = run_apery(config);
    } else {
      payload = run_axioms(config);
    }
    envelope = make_envelope(config, std::move(payload));
  } catch (const AperyInvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitViolated;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.timing) envelope.timestamp = utc_timestamp();

  const std::string bytes = emit(envelope, *parse_format(config.format));
  if (!config.out_path.empty()) {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output path " << config.out_path << "\n";
      return kExitUsage;
    }
    file << bytes;
    if (!file.good()) {
      err << "error: failed writing " << config.out_path << "\n";
      return kExitUsage;
    }
  } else {
    out << bytes;
  }
  return status_to_exit(envelope.summary);
}

}  // namespace bfact::cli
