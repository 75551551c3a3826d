#include "bfact/report.hpp"

#include <json.hpp>

#include <sstream>

namespace bfact {

using ordered_json = nlohmann::ordered_json;

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  throw std::domain_error("unknown output format");
}

std::optional<OutputFormat> parse_format(std::string_view token) {
  if (token == "text") return OutputFormat::Text;
  if (token == "json") return OutputFormat::Json;
  if (token == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

TruncationPolicy RunConfig::truncation_policy() const {
  TruncationPolicy policy;
  policy.max_members = static_cast<std::size_t>(truncate_cap);
  policy.initial_multiplier = static_cast<std::size_t>(truncate_initial_multiplier);
  policy.required_agreements = static_cast<int>(truncate_agreements);
  return policy;
}

namespace {

// "2^7", "3^2", "5^1": exponents always explicit in machine formats.
ordered_json factored_json(const FactoredNat& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& [p, e] : f.factors()) {
    arr.push_back(std::to_string(p) + "^" + std::to_string(e));
  }
  return arr;
}

std::string factored_compact(const FactoredNat& f) {
  if (f.is_one()) return "1";
  std::string out;
  for (const auto& [p, e] : f.factors()) {
    if (!out.empty()) out += "*";
    out += std::to_string(p) + "^" + std::to_string(e);
  }
  return out;
}

std::string approx15(const BigRat& q) {
  mpf_class f(0, 128);
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  char* buf = nullptr;
  gmp_asprintf(&buf, "%.15Fg", f.get_mpf_t());
  std::string out(buf);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(buf, out.size() + 1);
  return out;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["subcommand"] = c.subcommand;
  j["selector"] = c.selector;
  j["set"] = c.set_token;
  j["n"] = c.n;
  j["from"] = c.from;
  j["to"] = c.to;
  j["nmax"] = c.nmax;
  j["closed_form"] = c.closed_form;
  j["p0"] = c.p0;
  j["format"] = c.format;
  j["truncate_cap"] = c.truncate_cap;
  j["truncate_initial_multiplier"] = c.truncate_initial_multiplier;
  j["truncate_agreements"] = c.truncate_agreements;
  j["digit_cap"] = c.digit_cap;
  j["jobs"] = c.jobs;
  j["out"] = c.out_path;
  j["timing"] = c.timing;
  return j;
}

RunConfig config_from_json(const ordered_json& j) {
  RunConfig c;
  c.subcommand = j.at("subcommand").get<std::string>();
  c.selector = j.at("selector").get<std::string>();
  c.set_token = j.at("set").get<std::string>();
  c.n = j.at("n").get<std::int64_t>();
  c.from = j.at("from").get<std::int64_t>();
  c.to = j.at("to").get<std::int64_t>();
  c.nmax = j.at("nmax").get<std::int64_t>();
  c.closed_form = j.at("closed_form").get<bool>();
  c.p0 = j.at("p0").get<std::string>();
  c.format = j.at("format").get<std::string>();
  c.truncate_cap = j.at("truncate_cap").get<std::uint64_t>();
  c.truncate_initial_multiplier = j.at("truncate_initial_multiplier").get<std::uint64_t>();
  c.truncate_agreements = j.at("truncate_agreements").get<std::int64_t>();
  c.digit_cap = j.at("digit_cap").get<std::uint64_t>();
  c.jobs = j.at("jobs").get<unsigned>();
  c.out_path = j.at("out").get<std::string>();
  c.timing = j.at("timing").get<bool>();
  return c;
}

ordered_json witness_json(const C4Witness& w) {
  ordered_json j;
  j["k"] = w.k;
  j["p_n"] = w.p_n;
  j["p_k"] = w.p_k;
  j["p_rest"] = w.p_rest;
  return j;
}

// ---- JSON payloads --------------------------------------------------------

ordered_json payload_json(const FactorialPayload& p) {
  ordered_json j;
  j["kind"] = "factorial";
  j["set"] = to_string(p.kind);
  j["n"] = p.n;
  j["method"] = p.closed_form ? "closed-form" : "construction";
  if (p.result.ok()) {
    j["status"] = "verified";
    j["factored"] = factored_json(*p.result.value);
    const std::size_t digits = p.result.value->digits10_estimate();
    if (digits <= p.digit_cap) {
      j["value"] = p.result.value->to_integer(p.digit_cap).get_str();
    } else {
      j["value_digits_estimate"] = digits;
    }
  } else {
    j["status"] = "inconclusive";
    j["failing_prime"] = p.result.failing_prime;
  }
  j["truncation"] = p.result.max_truncation;
  return j;
}

ordered_json payload_json(const ScanReport& r) {
  ordered_json j;
  j["kind"] = "conjecture_scan";
  j["conjecture"] = to_string(r.id);
  j["range"] = {r.n_lo, r.n_hi};
  j["counts"] = {{"verified", r.verified},
                 {"violated", r.violated},
                 {"inconclusive", r.inconclusive}};
  ordered_json entries = ordered_json::array();
  for (const CheckResult& c : r.results) {
    ordered_json e;
    e["n"] = c.n;
    e["status"] = to_string(c.status);
    if (c.id == ConjectureId::C4) {
      if (!c.violations.empty()) {
        ordered_json v = ordered_json::array();
        for (const auto& w : c.violations) v.push_back(witness_json(w));
        e["violations"] = v;
      }
      if (!c.equalities.empty()) {
        ordered_json q = ordered_json::array();
        for (const auto& w : c.equalities) q.push_back(witness_json(w));
        e["equalities"] = q;
      }
    } else {
      if (c.ratio) e["ratio"] = factored_json(*c.ratio);
      if (c.expected) e["expected"] = factored_json(*c.expected);
      if (c.divisibility_failure) {
        e["divisibility_failure"] = true;
        e["offending_prime"] = c.offending_prime;
      }
      if (c.status == CheckStatus::Inconclusive) e["unstable_prime"] = c.offending_prime;
      e["truncation"] = c.truncation_used;
    }
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

ordered_json payload_json(const AxiomPayload& p) {
  ordered_json j;
  j["kind"] = "axiom_report";
  j["which"] = p.which;
  j["n_max"] = p.report.n_max;
  j["axiom1_ok"] = p.report.axiom1_ok;
  ordered_json a2 = ordered_json::array();
  for (const auto& [n, k] : p.report.axiom2_failures) a2.push_back({n, k});
  j["axiom2_failures"] = std::move(a2);
  j["axiom3_failures"] = p.report.axiom3_failures;
  j["untested"] = p.report.untested;
  return j;
}

ordered_json payload_json(const AperyTablePayload& p) {
  ordered_json j;
  j["kind"] = "apery_table";
  ordered_json rows = ordered_json::array();
  for (const AperyRow& r : p.rows) {
    ordered_json e;
    e["n"] = r.n;
    e["A"] = r.a.get_str();
    e["B"] = rat_to_string(r.b);
    e["e"] = r.e.get_str();
    e["x"] = r.x.get_str();
    e["y"] = r.y.get_str();
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json payload_json(const DeltaPayload& p) {
  ordered_json j;
  j["kind"] = "delta_table";
  j["n_max"] = p.n_max;
  j["delta_index_base"] = 0;
  ordered_json rows = ordered_json::array();
  for (const DeltaRow& r : p.rows) {
    ordered_json e;
    e["n"] = r.n;
    e["delta"] = rat_to_string(r.delta);
    e["sign"] = to_string(r.sign);
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json payload_json(const RunReport& r) {
  ordered_json j;
  j["kind"] = "run_report";
  j["n_max"] = r.n_max;
  j["delta_index_base"] = 0;
  j["counts"] = {{"neg", r.negative}, {"zero", r.zero}, {"pos", r.positive}};
  ordered_json runs = ordered_json::array();
  for (const NegativeRun& run : r.maximal_runs) {
    runs.push_back({{"start", run.start}, {"length", run.length}});
  }
  j["maximal_runs"] = std::move(runs);
  ordered_json firsts = ordered_json::array();
  for (const auto& [len, start] : r.first_run_of_length) firsts.push_back({len, start});
  j["first_run_of_length"] = std::move(firsts);
  return j;
}

ordered_json payload_json(const BrunPreconditionReport& r) {
  ordered_json j;
  j["kind"] = "brun_preconditions";
  j["n_max"] = r.n_max;
  j["x_positive_increasing"] = r.x_positive_increasing;
  j["y_positive_from_1"] = r.y_positive_from_1;
  j["y0_is_zero"] = r.y0_is_zero;
  j["ratio_strictly_increasing"] = r.ratio_strictly_increasing;
  ordered_json fails = ordered_json::array();
  for (const auto& f : r.failures) fails.push_back({{"check", f.check}, {"n", f.n}});
  j["failures"] = std::move(fails);
  return j;
}

// ---- CSV payloads ---------------------------------------------------------

void payload_csv(const FactorialPayload& p, std::ostream& os) {
  os << "set,n,method,status,factored,value\n";
  os << to_string(p.kind) << "," << p.n << ","
     << (p.closed_form ? "closed-form" : "construction") << ",";
  if (p.result.ok()) {
    os << "verified," << factored_compact(*p.result.value) << ",";
    if (p.result.value->digits10_estimate() <= p.digit_cap) {
      os << p.result.value->to_integer(p.digit_cap).get_str();
    }
  } else {
    os << "inconclusive,,";
  }
  os << "\n";
}

void payload_csv(const ScanReport& r, std::ostream& os) {
  if (r.id == ConjectureId::C4) {
    os << "n,status,detail\n";
    for (const CheckResult& c : r.results) {
      os << c.n << "," << to_string(c.status) << ",";
      std::string detail;
      for (const auto& w : c.violations) {
        detail += "violation k=" + std::to_string(w.k) + " " + std::to_string(w.p_n) +
                  "<" + std::to_string(w.p_k) + "+" + std::to_string(w.p_rest) + ";";
      }
      for (const auto& w : c.equalities) {
        detail += "equality k=" + std::to_string(w.k) + " " + std::to_string(w.p_n) +
                  "=" + std::to_string(w.p_k) + "+" + std::to_string(w.p_rest) + ";";
      }
      os << detail << "\n";
    }
    return;
  }
  os << "n,status,ratio\n";
  for (const CheckResult& c : r.results) {
    os << c.n << "," << to_string(c.status) << ",";
    if (c.ratio) os << factored_compact(*c.ratio);
    os << "\n";
  }
}

void payload_csv(const AxiomPayload& p, std::ostream& os) {
  os << "check,result,detail\n";
  os << "axiom1," << (p.report.axiom1_ok ? "pass" : "fail") << ",\n";
  os << "axiom2," << (p.report.axiom2_failures.empty() ? "pass" : "fail") << ",";
  for (const auto& [n, k] : p.report.axiom2_failures) {
    os << "(" << n << ";" << k << ")";
  }
  os << "\n";
  os << "axiom3," << (p.report.axiom3_failures.empty() ? "pass" : "fail") << ",";
  for (std::size_t n : p.report.axiom3_failures) os << n << ";";
  os << "\n";
  os << "untested," << (p.report.untested.empty() ? "none" : "some") << ",";
  for (std::size_t n : p.report.untested) os << n << ";";
  os << "\n";
}

void payload_csv(const AperyTablePayload& p, std::ostream& os) {
  os << "n,A,B,e,x,y\n";
  for (const AperyRow& r : p.rows) {
    os << r.n << "," << r.a.get_str() << "," << rat_to_string(r.b) << ","
       << r.e.get_str() << "," << r.x.get_str() << "," << r.y.get_str() << "\n";
  }
}

void payload_csv(const DeltaPayload& p, std::ostream& os) {
  os << "n,delta,sign\n";
  for (const DeltaRow& r : p.rows) {
    os << r.n << "," << rat_to_string(r.delta) << "," << to_string(r.sign) << "\n";
  }
}

void payload_csv(const RunReport& r, std::ostream& os) {
  os << "start,length\n";
  for (const NegativeRun& run : r.maximal_runs) {
    os << run.start << "," << run.length << "\n";
  }
}

void payload_csv(const BrunPreconditionReport& r, std::ostream& os) {
  os << "check,pass,first_failure_n\n";
  auto first_failure = [&](const std::string& name) -> std::string {
    for (const auto& f : r.failures) {
      if (f.check == name) return std::to_string(f.n);
    }
    return "";
  };
  os << "x_positive_increasing," << (r.x_positive_increasing ? "yes" : "no") << ","
     << first_failure("x_positive_increasing") << "\n";
  os << "y_positive," << (r.y_positive_from_1 ? "yes" : "no") << ","
     << first_failure("y_positive") << "\n";
  os << "ratio_strictly_increasing," << (r.ratio_strictly_increasing ? "yes" : "no")
     << "," << first_failure("ratio_strictly_increasing") << "\n";
  os << "y0_is_zero," << (r.y0_is_zero ? "yes" : "no") << ",\n";
}

// ---- text payloads --------------------------------------------------------

void payload_text(const FactorialPayload& p, std::ostream& os) {
  os << p.n << "!_" << to_string(p.kind) << " = ";
  if (p.result.ok()) {
    os << p.result.value->to_string();
    if (p.result.value->digits10_estimate() <= p.digit_cap) {
      os << " = " << p.result.value->to_integer(p.digit_cap).get_str();
    } else {
      os << "  (~" << p.result.value->digits10_estimate()
         << " digits, above the digit cap)";
    }
  } else if (p.result.failing_prime != 0) {
    os << "inconclusive (p-sequence for prime " << p.result.failing_prime
       << " unstable at truncation " << p.result.max_truncation << ")";
  } else {
    os << "inconclusive (fewer than n+1 members below the sieve ceiling)";
  }
  os << "\n";
}

void payload_text(const ScanReport& r, std::ostream& os) {
  os << "conjecture " << to_string(r.id) << " on [" << r.n_lo << ", " << r.n_hi << "]\n";
  for (const CheckResult& c : r.results) {
    os << "  n=" << c.n << "  " << to_string(c.status);
    if (c.id == ConjectureId::C4) {
      for (const auto& w : c.violations) {
        os << "  VIOLATION at k=" << w.k << ": " << w.p_n << " < " << w.p_k << " + "
           << w.p_rest;
      }
      for (const auto& w : c.equalities) {
        os << "  equality at k=" << w.k << ": " << w.p_n << " = " << w.p_k << " + "
           << w.p_rest;
      }
    } else {
      if (c.ratio) os << "  ratio = " << c.ratio->to_string();
      if (c.expected && c.status == CheckStatus::Violated && !c.divisibility_failure) {
        os << "  expected = " << c.expected->to_string();
      }
      if (c.divisibility_failure) {
        os << "  DIVISIBILITY VIOLATION at prime " << c.offending_prime;
      }
      if (c.status == CheckStatus::Inconclusive) {
        os << "  (prime " << c.offending_prime << " unstable, truncation "
           << c.truncation_used << ")";
      }
    }
    os << "\n";
  }
  os << "counts: verified=" << r.verified << " violated=" << r.violated
     << " inconclusive=" << r.inconclusive << "\n";
}

void payload_text(const AxiomPayload& p, std::ostream& os) {
  os << "abstract-factorial axioms for '" << p.which << "' on [0, " << p.report.n_max
     << "]\n";
  os << "  axiom 1 (0!_a = 1): " << (p.report.axiom1_ok ? "pass" : "FAIL") << "\n";
  os << "  axiom 2 (binomials integral): "
     << (p.report.axiom2_failures.empty() ? "pass" : "FAIL");
  for (const auto& [n, k] : p.report.axiom2_failures) os << " (n=" << n << ",k=" << k << ")";
  os << "\n";
  os << "  axiom 3 (n! divides n!_a): "
     << (p.report.axiom3_failures.empty() ? "pass" : "FAIL");
  for (std::size_t n : p.report.axiom3_failures) os << " n=" << n;
  os << "\n";
  if (!p.report.untested.empty()) {
    os << "  untested n:";
    for (std::size_t n : p.report.untested) os << " " << n;
    os << "\n";
  }
}

void payload_text(const AperyTablePayload& p, std::ostream& os) {
  os << "n\tA_n\tB_n\te_n\tx_n\ty_n\n";
  for (const AperyRow& r : p.rows) {
    os << r.n << "\t" << r.a.get_str() << "\t" << rat_to_string(r.b) << "\t"
       << r.e.get_str() << "\t" << r.x.get_str() << "\t" << r.y.get_str() << "\n";
  }
}

void payload_text(const DeltaPayload& p, std::ostream& os) {
  os << "delta_n = D(Dy_n/Dx_n), first index n = 0\n";
  for (const DeltaRow& r : p.rows) {
    os << "  delta_" << r.n << " = " << rat_to_string(r.delta) << "  ("
       << to_string(r.sign) << ", ≈ " << approx15(r.delta) << ")\n";
  }
}

void payload_text(const RunReport& r, std::ostream& os) {
  const std::uint64_t total = r.negative + r.zero + r.positive;
  os << "delta sign census for n in [0, " << (r.n_max - 2) << "] (index base 0)\n";
  os << "  neg=" << r.negative << " zero=" << r.zero << " pos=" << r.positive;
  if (total > 0) {
    os << "  (negative fraction ≈ "
       << approx15(make_rat(static_cast<long>(r.negative), static_cast<long>(total)))
       << ")";
  }
  os << "\n";
  os << "maximal negative runs (longest first):\n";
  for (const NegativeRun& run : r.maximal_runs) {
    os << "  start=" << run.start << " length=" << run.length << "\n";
  }
  os << "smallest start per run length:\n";
  for (const auto& [len, start] : r.first_run_of_length) {
    os << "  length>=" << len << " first at n=" << start << "\n";
  }
}

void payload_text(const BrunPreconditionReport& r, std::ostream& os) {
  os << "Brun preconditions on rows 0.." << r.n_max << "\n";
  os << "  x_n positive and strictly increasing: "
     << (r.x_positive_increasing ? "pass" : "FAIL") << "\n";
  os << "  y_n positive for n >= 1: " << (r.y_positive_from_1 ? "pass" : "FAIL")
     << "  (y_0 = 0: " << (r.y0_is_zero ? "yes" : "no") << ", reported separately)\n";
  os << "  y_n/x_n strictly increasing: "
     << (r.ratio_strictly_increasing ? "pass" : "FAIL") << "\n";
  for (const auto& f : r.failures) {
    os << "  failure: " << f.check << " at n=" << f.n << "\n";
  }
}

}  // namespace

CheckStatus summarize(const Payload& payload) {
  return std::visit(
      [](const auto& p) -> CheckStatus {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FactorialPayload>) {
          return p.result.ok() ? CheckStatus::Verified : CheckStatus::Inconclusive;
        } else if constexpr (std::is_same_v<T, ScanReport>) {
          return p.worst();
        } else if constexpr (std::is_same_v<T, AxiomPayload>) {
          if (!p.report.passed()) return CheckStatus::Violated;
          return p.report.untested.empty() ? CheckStatus::Verified
                                           : CheckStatus::Inconclusive;
        } else if constexpr (std::is_same_v<T, BrunPreconditionReport>) {
          return p.all_pass() ? CheckStatus::Verified : CheckStatus::Violated;
        } else {
          return CheckStatus::Verified;
        }
      },
      payload);
}

ReportEnvelope make_envelope(RunConfig config, Payload payload) {
  ReportEnvelope env;
  env.summary = summarize(payload);
  env.config = std::move(config);
  env.payload = std::move(payload);
  return env;
}

std::string emit(const ReportEnvelope& envelope, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["tool"] = envelope.tool;
    j["version"] = envelope.version;
    j["timestamp"] = envelope.timestamp;
    j["config"] = config_json(envelope.config);
    j["summary"] = to_string(envelope.summary);
    j["payload"] = std::visit([](const auto& p) { return payload_json(p); },
                              envelope.payload);
    if (envelope.config.timing) {
      if (const auto* scan = std::get_if<ScanReport>(&envelope.payload)) {
        j["payload"]["wall_time_ms"] = scan->wall_time_ms;
      }
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "# " << envelope.tool << " " << envelope.version << " " << envelope.config.subcommand;
    if (!envelope.config.selector.empty()) os << " " << envelope.config.selector;
    os << "\n# summary," << to_string(envelope.summary) << "\n";
    std::visit([&](const auto& p) { payload_csv(p, os); }, envelope.payload);
    return os.str();
  }

  os << "# " << envelope.tool << " " << envelope.version << "\n";
  os << "# command: " << envelope.config.subcommand;
  if (!envelope.config.selector.empty()) os << " " << envelope.config.selector;
  os << "\n";
  os << "# timestamp: " << envelope.timestamp << "\n";
  std::visit([&](const auto& p) { payload_text(p, os); }, envelope.payload);
  if (envelope.config.timing) {
    if (const auto* scan = std::get_if<ScanReport>(&envelope.payload)) {
      os << "wall time: " << scan->wall_time_ms << " ms\n";
    }
  }
  os << "summary: " << to_string(envelope.summary) << "\n";
  return os.str();
}

ParsedReport parse_report_json(const std::string& bytes) {
  const ordered_json j = ordered_json::parse(bytes);
  ParsedReport parsed;
  parsed.config = config_from_json(j.at("config"));
  const std::string summary = j.at("summary").get<std::string>();
  if (summary == "verified") {
    parsed.summary = CheckStatus::Verified;
  } else if (summary == "inconclusive") {
    parsed.summary = CheckStatus::Inconclusive;
  } else if (summary == "violated") {
    parsed.summary = CheckStatus::Violated;
  } else {
    throw std::runtime_error("unknown summary status: " + summary);
  }
  const auto& payload = j.at("payload");
  if (payload.at("kind").get<std::string>() == "conjecture_scan") {
    for (const auto& e : payload.at("entries")) {
      parsed.statuses.push_back(
          {e.at("n").get<std::int64_t>(), e.at("status").get<std::string>()});
    }
  }
  return parsed;
}

}  // namespace bfact
