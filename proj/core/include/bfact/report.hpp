#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bfact/apery.hpp"
#include "bfact/bhargava.hpp"
#include "bfact/conjectures.hpp"
#include "bfact/primes.hpp"

namespace bfact {

inline constexpr const char* kToolName = "bfact";
inline constexpr const char* kToolVersion = "1.0.0";

enum class OutputFormat { Text, Json, Csv };

std::string to_string(OutputFormat format);
std::optional<OutputFormat> parse_format(std::string_view token);

/// Everything a run depends on.  The config is echoed verbatim into each
/// report, so a report alone reproduces its run.
struct RunConfig {
  std::string subcommand;  // factorial | conjecture | apery | axioms
  std::string selector;    // c1..c4 | table/delta/runs/preconditions | provider
  std::string set_token;   // factorial: nat | P | P2 | P3 | P4
  std::int64_t n = -1;
  std::int64_t from = -1;
  std::int64_t to = -1;
  std::int64_t nmax = -1;
  bool closed_form = false;
  std::string p0 = "one";
  std::string format = "text";
  std::uint64_t truncate_cap = 1 << 16;
  std::uint64_t truncate_initial_multiplier = 4;
  std::int64_t truncate_agreements = 2;
  std::uint64_t digit_cap = FactoredNat::kDefaultDigitCap;
  unsigned jobs = 1;
  std::string out_path;
  bool timing = false;

  TruncationPolicy truncation_policy() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct FactorialPayload {
  ConstellationKind kind = ConstellationKind::Primes;
  std::int64_t n = 0;
  bool closed_form = false;
  FactorialResult result;
  std::uint64_t digit_cap = FactoredNat::kDefaultDigitCap;
};

struct AxiomPayload {
  std::string which;
  AxiomReport report;
};

struct AperyTablePayload {
  std::vector<AperyRow> rows;
};

struct DeltaPayload {
  std::uint64_t n_max = 0;
  std::vector<DeltaRow> rows;
};

using Payload = std::variant<FactorialPayload, ScanReport, AxiomPayload,
                             AperyTablePayload, DeltaPayload, RunReport,
                             BrunPreconditionReport>;

/// Worst per-item status of a payload: verified < inconclusive < violated.
CheckStatus summarize(const Payload& payload);

struct ReportEnvelope {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::string timestamp = "-";  // "-" unless timing was requested
  RunConfig config;
  Payload payload;
  CheckStatus summary = CheckStatus::Verified;
};

ReportEnvelope make_envelope(RunConfig config, Payload payload);

/// Serializes an envelope.  Identical envelopes yield identical bytes in
/// every format; exact values are never rendered through floating point in
/// the machine formats.
std::string emit(const ReportEnvelope& envelope, OutputFormat format);

/// The round-trip slice of a JSON report: enough to re-run it and compare
/// verdicts.
struct ParsedReport {
  RunConfig config;
  CheckStatus summary = CheckStatus::Verified;
  std::vector<std::pair<std::int64_t, std::string>> statuses;  // per-n, scans only
};

ParsedReport parse_report_json(const std::string& bytes);

}  // namespace bfact
