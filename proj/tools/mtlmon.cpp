// mtlmon: checks timed state traces against metric-temporal-logic
// requirement specifications via formula progression.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mtlmon/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"metric-temporal-logic requirement monitor for timed traces"};
  app.require_subcommand(1);

  mtlmon::CliConfig config;
  CLI::App* check = app.add_subcommand(
      "check", "run all requirements of a spec over a trace");
  check->add_option("--spec", config.spec_path, "specification file")
      ->required();
  check
      ->add_option("--trace", config.trace_path,
                   "trace file, or '-' for standard input")
      ->required();
  check->add_option("--format", config.trace_format,
                    "trace format: csv|jsonl|auto (default auto)");
  check->add_option("--report", config.report_format,
                    "report format: text|json (default text)");
  check->add_flag("--fail-on-violation", config.fail_on_violation,
                  "exit with status 1 when any requirement is violated");
  check->add_flag("--oracle-check", config.oracle_check,
                  "debug: cross-check verdicts with the reference evaluator "
                  "(small traces only)");
  check->add_option("--residual-ceiling", config.residual_ceiling,
                    "abort when a residual formula exceeds this node count "
                    "(default 10000)")
      ->check(CLI::PositiveNumber);

  std::string eval_spec, eval_trace, eval_req;
  std::string eval_format = "auto";
  std::size_t eval_index = 0;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate one requirement at a trace index with the "
              "reference evaluator");
  eval->add_option("--spec", eval_spec, "specification file")->required();
  eval->add_option("--trace", eval_trace, "trace file")->required();
  eval->add_option("--format", eval_format, "trace format: csv|jsonl|auto");
  eval->add_option("--requirement", eval_req, "requirement name")->required();
  eval->add_option("--index", eval_index, "1-based trace index")->required();

  std::string fixtures_dir;
  CLI::App* fixtures = app.add_subcommand(
      "fixtures", "write the bundled autoclave case-study fixtures");
  fixtures->add_option("--out", fixtures_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    return mtlmon::cmd_check(config, std::cout, std::cerr);
  }
  if (eval->parsed()) {
    return mtlmon::cmd_eval(eval_spec, eval_trace, eval_format, eval_req,
                            eval_index, std::cout, std::cerr);
  }
  if (fixtures->parsed()) {
    return mtlmon::cmd_fixtures(fixtures_dir, std::cout, std::cerr);
  }
  return mtlmon::kExitError;
}
