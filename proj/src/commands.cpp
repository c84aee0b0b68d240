#include "mtlmon/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mtlmon/errors.hpp"
#include "mtlmon/fixtures.hpp"
#include "mtlmon/monitor.hpp"
#include "mtlmon/oracle.hpp"
#include "mtlmon/report.hpp"
#include "mtlmon/speclang.hpp"
#include "mtlmon/trace.hpp"

namespace mtlmon {

namespace {

// Oracle cross-checking is debug tooling; the reference evaluator is
// deliberately unoptimized, so refuse traces it would choke on.
constexpr std::size_t kOracleCheckMaxEvents = 2000;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TraceFormat resolve_format(const std::string& format,
                           const std::string& path) {
  if (format == "csv") return TraceFormat::Csv;
  if (format == "jsonl") return TraceFormat::Jsonl;
  if (format != "auto") {
    throw Error("unknown trace format '" + format + "' (csv|jsonl|auto)");
  }
  if (path == "-") {
    throw Error("reading from standard input needs an explicit --format");
  }
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return TraceFormat::Csv;
  }
  if (path.size() >= 6 && path.compare(path.size() - 6, 6, ".jsonl") == 0) {
    return TraceFormat::Jsonl;
  }
  throw Error("cannot infer trace format from '" + path +
              "' (use --format csv|jsonl)");
}

RequirementSet load_spec(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_spec(text);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

class TraceInput {
 public:
  TraceInput(const std::string& path, TraceFormat format) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw Error("cannot open trace file '" + path + "'");
    }
    reader_.emplace(path == "-" ? std::cin : file_, format);
  }

  TraceReader& reader() { return *reader_; }

 private:
  std::ifstream file_;
  std::optional<TraceReader> reader_;
};

int oracle_cross_check(const RequirementSet& spec,
                       const TimedStateSequence& trace,
                       const RunReport& report, std::ostream& out,
                       std::ostream& err) {
  AtomValuation valuation = spec.valuation();
  std::size_t mismatches = 0;
  for (const RequirementResult& r : report.requirements) {
    const Requirement* req = spec.find(r.name);
    bool expected = oracle_evaluate(trace, 1, req->formula, valuation);
    Verdict oracle_verdict =
        expected ? Verdict::NotViolated : Verdict::Violated;
    if (oracle_verdict != r.verdict) {
      ++mismatches;
      err << "oracle mismatch on '" << r.name << "': monitor says "
          << to_string(r.verdict) << ", oracle says "
          << to_string(oracle_verdict) << "\n";
    }
  }
  if (mismatches > 0) return kExitError;
  out << "oracle check: all " << report.requirements.size()
      << " verdicts agree\n";
  return kExitOk;
}

}  // namespace

int cmd_check(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    RequirementSet spec = load_spec(config.spec_path);
    TraceFormat format = resolve_format(config.trace_format,
                                        config.trace_path);
    RunOptions options;
    options.residual_ceiling = config.residual_ceiling;

    RunReport report;
    std::optional<TimedStateSequence> materialized;
    if (config.oracle_check) {
      // The cross-check needs the whole trace in memory.
      TraceInput input(config.trace_path, format);
      std::vector<TimedState> events;
      while (auto e = input.reader().next()) events.push_back(std::move(*e));
      if (events.empty()) throw EmptyTraceError("trace contains no events");
      if (events.size() > kOracleCheckMaxEvents) {
        throw Error("--oracle-check supports at most " +
                    std::to_string(kOracleCheckMaxEvents) +
                    " events (got " + std::to_string(events.size()) + ")");
      }
      materialized.emplace(input.reader().schema(), std::move(events));
      report = run_all(spec, *materialized, options);
    } else {
      TraceInput input(config.trace_path, format);
      report = run_all(spec, input.reader(), options);
    }

    if (config.report_format == "json") {
      out << render_json(report) << "\n";
    } else if (config.report_format == "text") {
      render_text(out, report);
    } else {
      throw Error("unknown report format '" + config.report_format +
                  "' (text|json)");
    }

    if (config.oracle_check) {
      int rc = oracle_cross_check(spec, *materialized, report, out, err);
      if (rc != kExitOk) return rc;
    }

    if (report.violated_count > 0 && config.fail_on_violation) {
      return kExitViolations;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_eval(const std::string& spec_path, const std::string& trace_path,
             const std::string& trace_format, const std::string& requirement,
             std::size_t index, std::ostream& out, std::ostream& err) {
  try {
    RequirementSet spec = load_spec(spec_path);
    const Requirement* req = spec.find(requirement);
    if (req == nullptr) {
      std::string names;
      for (const Requirement& r : spec.requirements()) {
        names += names.empty() ? "" : ", ";
        names += r.name;
      }
      throw Error("unknown requirement '" + requirement +
                  "'; available: " + names);
    }
    TraceFormat format = resolve_format(trace_format, trace_path);
    TraceInput input(trace_path, format);
    std::vector<TimedState> events;
    while (auto e = input.reader().next()) events.push_back(std::move(*e));
    if (events.empty()) throw EmptyTraceError("trace contains no events");
    TimedStateSequence trace(input.reader().schema(), std::move(events));
    if (index < 1 || index > trace.size()) {
      throw TraceIndexError("index " + std::to_string(index) +
                            " out of range (1-based, trace has " +
                            std::to_string(trace.size()) + " events)");
    }
    bool holds = oracle_evaluate(trace, index, req->formula, spec.valuation());
    out << (holds ? "true" : "false") << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_fixtures(const std::string& output_dir, std::ostream& out,
                 std::ostream& err) {
  try {
    write_fixture_bundle(output_dir);
    out << "fixture bundle written to " << output_dir << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace mtlmon
