// biparam: batch front end for two-parameter Markov chain computations.
//
//   biparam <transition|marginal|waiting|warranty|compare|run> --config run.json [--output csv|json] [--digits N]
//
// Exit status: 0 success, 2 invalid input, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "biparam/cli.hpp"
#include "biparam/error.hpp"

namespace cli = biparam::cli;

int main(int argc, char** argv) {
  CLI::App app{"Transition probabilities, waiting regions and warranty costs for two-parameter Markov chains"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  std::string output;
  int digits = 0;
  app.add_option("--config", config_path, "Run configuration (JSON)")->required();
  app.add_option("--output", output, "Output format, overrides the config")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--digits", digits, "Target decimal digits for Laplace inversion")->check(CLI::Range(4, 12));

  const std::pair<const char*, cli::Command> commands[] = {
      {"transition", cli::Command::Transition}, {"marginal", cli::Command::Marginal},
      {"waiting", cli::Command::Waiting},       {"warranty", cli::Command::Warranty},
      {"compare", cli::Command::Compare},       {"run", cli::Command::Run},
  };
  const char* help[] = {"P(t,u) at every query point", "pi(t,u) = pi(0,0) P(t,u)",
                        "waiting-region cdfs and survival", "expected warranty expense",
                        "all three solvers side by side", "everything the config asks for"};
  for (std::size_t k = 0; k < std::size(commands); ++k) app.add_subcommand(commands[k].first, help[k]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cli::Command command = cli::Command::Run;
  for (const auto& [name, c] : commands)
    if (app.got_subcommand(name)) command = c;

  try {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw biparam::Error(biparam::ErrorCode::ConfigError, "cannot open '" + config_path + "'");
    std::ostringstream text;
    text << in.rdbuf();

    cli::RunConfig cfg = cli::parse_config(text.str());
    if (!output.empty()) cfg.output = output == "csv" ? cli::OutputFormat::Csv : cli::OutputFormat::Json;
    if (digits != 0) cfg.inversion.targetDecimalDigits = digits;

    const cli::RunResult result = cli::run(cfg, command);
    for (const auto& d : result.diagnostics) std::cerr << "biparam: " << d << '\n';
    std::cout << (cfg.output == cli::OutputFormat::Csv ? cli::render_csv(result.document, command)
                                                       : cli::render_json(result.document));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "biparam: " << config_path << ": " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
}
