#pragma once

// Batch front end: a JSON run configuration in, a JSON document or CSV table out.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biparam/chain.hpp"
#include "biparam/inversion.hpp"
#include "biparam/waiting.hpp"
#include "biparam/warranty.hpp"
#include "json.hpp"

namespace biparam::cli {

enum class OutputFormat { Csv, Json };

enum class Command { Run, Transition, Marginal, Waiting, Warranty, Compare };

std::string_view to_string(Command c) noexcept;

struct RunConfig {
  std::vector<std::string> states;
  GeneratorMatrix generator;
  std::optional<ProbabilityVector> initial;
  std::vector<QueryPoint> queries;
  Method method = Method::Series;
  InversionConfig inversion;
  std::size_t pdeTimeSteps = 400;
  std::size_t pdeUsageSteps = 400;
  std::vector<WaitingRegionRates> waitingRates;
  std::optional<WarrantyPolicy> policy;
  OutputFormat output = OutputFormat::Json;
  bool compare = false;
};

/// Parses and validates a configuration document. Every failure is reported
/// as ConfigError with a "line N: " prefix pointing into `text`.
RunConfig parse_config(std::string_view text);

struct RunResult {
  nlohmann::json document;
  std::vector<std::string> diagnostics;
};

/// Executes `command`, fanning query points out over up to `threads` workers
/// (0 = BIPARAM_MAX_THREADS or hardware concurrency). Output order follows
/// input order.
RunResult run(const RunConfig& cfg, Command command, std::size_t threads = 0);

/// CSV rendering of a run document for the given command (RFC 4180 quoting,
/// numbers with 17 significant digits).
std::string render_csv(const nlohmann::json& document, Command command);

std::string render_json(const nlohmann::json& document);

/// Worker count from BIPARAM_MAX_THREADS, defaulting to hardware concurrency.
std::size_t default_thread_count();

/// 0 on success, 2 for invalid input, 3 for numerical failure.
int exit_code_for(const std::exception& e) noexcept;

}  // namespace biparam::cli
