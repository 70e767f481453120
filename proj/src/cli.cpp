#include "biparam/cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "biparam/error.hpp"
#include "biparam/goursat.hpp"
#include "biparam/resolvent.hpp"

namespace biparam::cli {

using nlohmann::json;

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Run: return "run";
    case Command::Transition: return "transition";
    case Command::Marginal: return "marginal";
    case Command::Waiting: return "waiting";
    case Command::Warranty: return "warranty";
    case Command::Compare: return "compare";
  }
  return "unknown";
}

std::size_t default_thread_count() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BIPARAM_MAX_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) return std::min<std::size_t>(hw, static_cast<std::size_t>(cap));
  }
  return hw;
}

int exit_code_for(const std::exception& e) noexcept {
  if (const auto* err = dynamic_cast<const Error*>(&e)) return is_numerical(err->code()) ? 3 : 2;
  if (dynamic_cast<const json::exception*>(&e)) return 2;
  return 3;
}

// ---------------------------------------------------------------------------
// config parsing

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// Line of the first `"key" :` occurrence, or 1 when absent.
std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  std::size_t pos = 0;
  while ((pos = text.find(quoted, pos)) != std::string_view::npos) {
    std::size_t after = pos + quoted.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after < text.size() && text[after] == ':') return line_of_offset(text, pos);
    pos = after;
  }
  return 1;
}

[[noreturn]] void config_error(std::string_view text, std::string_view key, const std::string& what) {
  throw Error(ErrorCode::ConfigError, "line " + std::to_string(line_of_key(text, key)) + ": '" + std::string(key) +
                                          "': " + what);
}

// Runs `fn`, turning input errors into ConfigError anchored at `key`.
template <class F>
auto with_key(std::string_view text, std::string_view key, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError || is_numerical(e.code())) throw;
    config_error(text, key, e.what());
  } catch (const json::exception& e) {
    config_error(text, key, e.what());
  }
}

double finite_number(const json& j) {
  if (!j.is_number()) throw Error(ErrorCode::InvalidArgument, "expected a number, got " + std::string(j.type_name()));
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "number is not finite");
  return x;
}

std::size_t state_index(const json& j, const std::vector<std::string>& states) {
  if (j.is_number_unsigned()) {
    const auto i = j.get<std::size_t>();
    if (i >= states.size()) throw Error(ErrorCode::InvalidArgument, "state index " + std::to_string(i) + " out of range");
    return i;
  }
  if (j.is_string()) {
    const auto label = j.get<std::string>();
    const auto it = std::find(states.begin(), states.end(), label);
    if (it == states.end()) throw Error(ErrorCode::InvalidArgument, "unknown state label '" + label + "'");
    return static_cast<std::size_t>(it - states.begin());
  }
  throw Error(ErrorCode::InvalidArgument, "state must be a label or an index");
}

InversionOrder parse_order(const std::string& s) {
  if (s == "usage-first") return InversionOrder::UsageFirst;
  if (s == "time-first") return InversionOrder::TimeFirst;
  throw Error(ErrorCode::InvalidArgument, "innerOuterOrder must be 'usage-first' or 'time-first'");
}

std::string order_name(InversionOrder o) { return o == InversionOrder::UsageFirst ? "usage-first" : "time-first"; }

std::size_t positive_count(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw Error(ErrorCode::InvalidArgument, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const std::set<std::string> kKnownKeys = {"states",       "generator", "initial", "queries", "method",
                                          "inversion",    "pdeGrid",   "waitingRates", "policy", "output",
                                          "compare"};

}  // namespace

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError,
                "line " + std::to_string(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ConfigError, "line 1: configuration must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kKnownKeys.contains(key)) config_error(text, key, "unknown field");
  if (!doc.contains("generator")) throw Error(ErrorCode::ConfigError, "line 1: missing required field 'generator'");

  GeneratorMatrix generator = with_key(text, "generator", [&] {
    const auto& g = doc.at("generator");
    if (!g.is_array()) throw Error(ErrorCode::InvalidArgument, "generator must be an array of rows");
    std::vector<std::vector<double>> raw;
    for (const auto& row : g) {
      if (!row.is_array()) throw Error(ErrorCode::NonSquare, "generator row is not an array");
      std::vector<double> r;
      for (const auto& x : row) r.push_back(finite_number(x));
      raw.push_back(std::move(r));
    }
    return validate_generator(raw);
  });
  const std::size_t n = generator.states();

  std::vector<std::string> states = with_key(text, "states", [&] {
    std::vector<std::string> labels;
    if (!doc.contains("states")) {
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
      return labels;
    }
    labels = doc.at("states").get<std::vector<std::string>>();
    if (labels.size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  std::to_string(labels.size()) + " labels for a " + std::to_string(n) + "-state generator");
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
      throw Error(ErrorCode::InvalidArgument, "state labels must be unique");
    return labels;
  });

  std::optional<ProbabilityVector> initial;
  if (doc.contains("initial"))
    initial = with_key(text, "initial", [&] {
      std::vector<double> v;
      for (const auto& x : doc.at("initial")) v.push_back(finite_number(x));
      if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "initial vector length differs from state count");
      return ProbabilityVector(std::move(v));
    });

  std::vector<QueryPoint> queries;
  if (doc.contains("queries"))
    queries = with_key(text, "queries", [&] {
      std::vector<QueryPoint> q;
      const auto& arr = doc.at("queries");
      if (!arr.is_array()) throw Error(ErrorCode::InvalidArgument, "queries must be an array");
      for (const auto& p : arr) {
        QueryPoint at;
        if (p.is_array() && p.size() == 2) {
          at = {finite_number(p[0]), finite_number(p[1])};
        } else if (p.is_object()) {
          at = {finite_number(p.at("t")), finite_number(p.at("u"))};
        } else {
          throw Error(ErrorCode::InvalidArgument, "query must be [t, u] or {\"t\":..,\"u\":..}");
        }
        check_query_point(at);
        q.push_back(at);
      }
      return q;
    });

  Method method = Method::Series;
  if (doc.contains("method"))
    method = with_key(text, "method", [&] { return parse_method(doc.at("method").get<std::string>()); });

  InversionConfig inversion;
  if (doc.contains("inversion"))
    inversion = with_key(text, "inversion", [&] {
      InversionConfig c;
      const auto& j = doc.at("inversion");
      if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "inversion must be an object");
      for (const auto& [key, value] : j.items()) {
        if (key == "eulerTerms") c.eulerTerms = value.get<int>();
        else if (key == "targetDecimalDigits") c.targetDecimalDigits = value.get<int>();
        else if (key == "innerOuterOrder") c.innerOuterOrder = parse_order(value.get<std::string>());
        else throw Error(ErrorCode::InvalidArgument, "unknown inversion field '" + key + "'");
      }
      c.validate();
      return c;
    });

  std::size_t nt = 400, nu = 400;
  if (doc.contains("pdeGrid"))
    with_key(text, "pdeGrid", [&] {
      const auto& j = doc.at("pdeGrid");
      if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "pdeGrid must be an object");
      for (const auto& [key, value] : j.items()) {
        if (key == "nt") nt = positive_count(value);
        else if (key == "nu") nu = positive_count(value);
        else throw Error(ErrorCode::InvalidArgument, "unknown pdeGrid field '" + key + "'");
      }
      if (nt < 2 || nu < 2 || nt > kGoursatMaxSteps || nu > kGoursatMaxSteps)
        throw Error(ErrorCode::InvalidArgument, "pdeGrid steps must lie in [2, 100000]");
      return 0;
    });

  std::vector<WaitingRegionRates> rates;
  if (doc.contains("waitingRates"))
    rates = with_key(text, "waitingRates", [&] {
      std::vector<WaitingRegionRates> out;
      for (const auto& r : doc.at("waitingRates")) {
        WaitingRegionRates w{state_index(r.at("state"), states), finite_number(r.at("lambda1")),
                             finite_number(r.at("lambda2"))};
        w.validate();
        out.push_back(w);
      }
      return out;
    });

  std::optional<WarrantyPolicy> policy;
  if (doc.contains("policy"))
    policy = with_key(text, "policy", [&] {
      const auto& p = doc.at("policy");
      const std::size_t from = p.contains("fromState") ? state_index(p.at("fromState"), states) : 1;
      const double base = p.contains("baseCost") ? finite_number(p.at("baseCost")) : 1.0;
      std::vector<CoverageRegion> regions;
      for (const auto& r : p.at("regions"))
        regions.push_back({finite_number(r.at("tLimit")), finite_number(r.at("uLimit")), finite_number(r.at("cost"))});
      return validate_policy(std::move(regions), from, base);
    });

  OutputFormat output = OutputFormat::Json;
  if (doc.contains("output"))
    output = with_key(text, "output", [&] {
      const auto s = doc.at("output").get<std::string>();
      if (s == "json") return OutputFormat::Json;
      if (s == "csv") return OutputFormat::Csv;
      throw Error(ErrorCode::InvalidArgument, "output must be 'csv' or 'json'");
    });

  bool compare = false;
  if (doc.contains("compare")) compare = with_key(text, "compare", [&] { return doc.at("compare").get<bool>(); });

  return RunConfig{.states = std::move(states),
                   .generator = std::move(generator),
                   .initial = std::move(initial),
                   .queries = std::move(queries),
                   .method = method,
                   .inversion = inversion,
                   .pdeTimeSteps = nt,
                   .pdeUsageSteps = nu,
                   .waitingRates = std::move(rates),
                   .policy = std::move(policy),
                   .output = output,
                   .compare = compare};
}

// ---------------------------------------------------------------------------
// execution

namespace {

template <class R>
std::vector<R> parallel_map(std::size_t count, std::size_t threads, const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i] = fn(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            slots[i] = fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    pool.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

json matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

SolverOptions solver_options(const RunConfig& cfg, Method method) {
  SolverOptions o;
  o.method = method;
  o.inversion = cfg.inversion;
  o.pdeTimeSteps = cfg.pdeTimeSteps;
  o.pdeUsageSteps = cfg.pdeUsageSteps;
  return o;
}

json config_echo(const RunConfig& cfg) {
  json doc;
  doc["states"] = cfg.states;
  doc["generator"] = matrix_json(cfg.generator.matrix());
  if (cfg.initial) doc["initial"] = cfg.initial->values();
  json q = json::array();
  for (const auto& p : cfg.queries) q.push_back({p.t, p.u});
  doc["queries"] = q;
  doc["method"] = std::string(to_string(cfg.method));
  doc["inversion"] = {{"eulerTerms", cfg.inversion.eulerTerms},
                      {"targetDecimalDigits", cfg.inversion.targetDecimalDigits},
                      {"innerOuterOrder", order_name(cfg.inversion.innerOuterOrder)}};
  doc["pdeGrid"] = {{"nt", cfg.pdeTimeSteps}, {"nu", cfg.pdeUsageSteps}};
  if (!cfg.waitingRates.empty()) {
    json rates = json::array();
    for (const auto& r : cfg.waitingRates)
      rates.push_back({{"state", cfg.states[r.state]}, {"lambda1", r.lambda1}, {"lambda2", r.lambda2}});
    doc["waitingRates"] = rates;
  }
  if (cfg.policy) {
    json regions = json::array();
    for (const auto& r : cfg.policy->regions)
      regions.push_back({{"tLimit", r.tLimit}, {"uLimit", r.uLimit}, {"cost", r.cost}});
    doc["policy"] = {{"fromState", cfg.states[cfg.policy->fromState]},
                     {"baseCost", cfg.policy->baseCost},
                     {"regions", regions}};
  }
  doc["output"] = cfg.output == OutputFormat::Json ? "json" : "csv";
  doc["compare"] = cfg.compare;
  return doc;
}

void require_queries(const RunConfig& cfg, Command c) {
  if (cfg.queries.empty())
    throw Error(ErrorCode::ConfigError, "line 1: '" + std::string(to_string(c)) + "' needs at least one query");
}

json transitions(const RunConfig& cfg, std::size_t threads, bool with_marginal) {
  const auto opts = solver_options(cfg, cfg.method);
  auto results = parallel_map<TransitionMatrix>(cfg.queries.size(), threads, [&](std::size_t q) {
    return compute_transition(cfg.generator, cfg.queries[q], opts);
  });
  json out = json::array();
  for (const auto& r : results) {
    json e = {{"t", r.at.t},
              {"u", r.at.u},
              {"method", std::string(to_string(r.method))},
              {"P", matrix_json(r.p)},
              {"rangeWarning", r.rangeWarning}};
    if (with_marginal && cfg.initial) e["pi"] = marginal_distribution(*cfg.initial, r).values();
    out.push_back(std::move(e));
  }
  return out;
}

json marginals(const RunConfig& cfg, std::size_t threads) {
  if (!cfg.initial) throw Error(ErrorCode::ConfigError, "line 1: 'marginal' needs an 'initial' vector");
  json out = json::array();
  for (auto& e : transitions(cfg, threads, true))
    out.push_back({{"t", e["t"]}, {"u", e["u"]}, {"method", e["method"]}, {"pi", e["pi"]},
                   {"rangeWarning", e["rangeWarning"]}});
  return out;
}

json waiting(const RunConfig& cfg, std::size_t threads, std::vector<std::string>& diagnostics) {
  const bool have_transforms = cfg.generator.states() == 2;
  if (!have_transforms && cfg.waitingRates.empty())
    throw Error(ErrorCode::UnsupportedStateCount,
                "waiting-region transforms need a 2-state chain; supply 'waitingRates' for survival only");
  if (!have_transforms)
    diagnostics.push_back("waiting-region cdfs skipped: transform extraction needs a 2-state chain");

  std::optional<std::pair<WaitingDistribution, WaitingDistribution>> dists;
  if (have_transforms) dists = extract_waiting_transforms(cfg.generator);

  struct Row {
    std::vector<double> cdf;
    std::vector<std::string> notes;
  };
  auto rows = parallel_map<Row>(cfg.queries.size(), threads, [&](std::size_t q) {
    Row row;
    const auto at = cfg.queries[q];
    if (dists) {
      for (const auto* w : {&dists->first, &dists->second})
        row.cdf.push_back(at.t == 0.0 || at.u == 0.0 ? 0.0 : waiting_cdf_at(*w, at, cfg.inversion, &row.notes));
    }
    return row;
  });

  json out = json::array();
  for (std::size_t q = 0; q < rows.size(); ++q) {
    const auto at = cfg.queries[q];
    json e = {{"t", at.t}, {"u", at.u}};
    if (dists) {
      json cdf = json::object();
      for (std::size_t s = 0; s < 2; ++s) cdf[cfg.states[s]] = rows[q].cdf[s];
      e["cdf"] = cdf;
    }
    if (!cfg.waitingRates.empty()) {
      json surv = json::object();
      for (const auto& r : cfg.waitingRates) surv[cfg.states[r.state]] = survival(r, at);
      e["survival"] = surv;
    }
    diagnostics.insert(diagnostics.end(), rows[q].notes.begin(), rows[q].notes.end());
    out.push_back(std::move(e));
  }
  return out;
}

json warranty(const RunConfig& cfg, std::vector<std::string>& diagnostics) {
  if (!cfg.policy) throw Error(ErrorCode::ConfigError, "line 1: 'warranty' needs a 'policy' block");
  const auto [f, g] = extract_waiting_transforms(cfg.generator);
  const WaitingDistribution& dist = cfg.policy->fromState == 0 ? f : g;
  const ExpenseReport report = expected_warranty_expense(*cfg.policy, dist, cfg.inversion, &diagnostics);
  json regions = json::array();
  for (std::size_t k = 0; k < cfg.policy->regions.size(); ++k) {
    const auto& r = cfg.policy->regions[k];
    regions.push_back({{"tLimit", r.tLimit},
                       {"uLimit", r.uLimit},
                       {"cost", r.cost},
                       {"probability", report.perRegionProbabilities[k]},
                       {"contribution", report.perRegionContributions[k]}});
  }
  return {{"fromState", cfg.states[cfg.policy->fromState]},
          {"baseCost", cfg.policy->baseCost},
          {"ewe", report.ewe},
          {"eweInBaseCost", report.ewe / cfg.policy->baseCost},
          {"regions", regions}};
}

json compare(const RunConfig& cfg, std::size_t threads) {
  constexpr Method kMethods[] = {Method::Series, Method::Laplace2d, Method::Pde};
  using Triple = std::array<TransitionMatrix, 3>;
  auto results = parallel_map<Triple>(cfg.queries.size(), threads, [&](std::size_t q) {
    Triple t;
    for (std::size_t m = 0; m < 3; ++m)
      t[m] = compute_transition(cfg.generator, cfg.queries[q], solver_options(cfg, kMethods[m]));
    return t;
  });
  json points = json::array();
  double overall = 0.0;
  const std::size_t n = cfg.generator.states();
  for (const auto& t : results) {
    RealMatrix dev(n);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        for (std::size_t e = 0; e < n * n; ++e)
          dev.data()[e] = std::max(dev.data()[e], std::abs(t[a].p.data()[e] - t[b].p.data()[e]));
    overall = std::max(overall, max_abs(dev));
    points.push_back({{"t", t[0].at.t},
                      {"u", t[0].at.u},
                      {"series", matrix_json(t[0].p)},
                      {"laplace2d", matrix_json(t[1].p)},
                      {"pde", matrix_json(t[2].p)},
                      {"maxDeviation", matrix_json(dev)}});
  }
  return {{"points", points}, {"maxDeviation", overall}};
}

}  // namespace

RunResult run(const RunConfig& cfg, Command command, std::size_t threads) {
  if (threads == 0) threads = default_thread_count();
  RunResult result;
  json res = {{"command", std::string(to_string(command))}};
  switch (command) {
    case Command::Transition:
      require_queries(cfg, command);
      res["transitions"] = transitions(cfg, threads, false);
      break;
    case Command::Marginal:
      require_queries(cfg, command);
      res["marginals"] = marginals(cfg, threads);
      break;
    case Command::Waiting:
      require_queries(cfg, command);
      res["waiting"] = waiting(cfg, threads, result.diagnostics);
      break;
    case Command::Warranty:
      res["warranty"] = warranty(cfg, result.diagnostics);
      break;
    case Command::Compare:
      require_queries(cfg, command);
      res["compare"] = compare(cfg, threads);
      break;
    case Command::Run:
      res["transitions"] = transitions(cfg, threads, true);
      if (cfg.policy) res["warranty"] = warranty(cfg, result.diagnostics);
      if (cfg.compare) res["compare"] = compare(cfg, threads);
      break;
  }
  for (const auto& e : res.value("transitions", json::array()))
    if (e["rangeWarning"].get<bool>())
      result.diagnostics.push_back("P(" + e["t"].dump() + ", " + e["u"].dump() +
                                   ") has entries outside [0, 1]; the Goursat solution oscillates for large t*u");
  result.document = config_echo(cfg);
  result.document["results"] = std::move(res);
  return result;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& os, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os << ',';
    os << csv_field(c);
    first = false;
  }
  os << "\r\n";
}

}  // namespace

std::string render_csv(const json& document, Command command) {
  const json& res = document.at("results");
  const auto& states = document.at("states");
  std::ostringstream os;
  switch (command) {
    case Command::Run:
    case Command::Transition:
      csv_row(os, {"t", "u", "i", "j", "p", "method", "range_warning"});
      for (const auto& e : res.at("transitions")) {
        const auto& p = e.at("P");
        for (std::size_t i = 0; i < p.size(); ++i)
          for (std::size_t j = 0; j < p[i].size(); ++j)
            csv_row(os, {num(e["t"]), num(e["u"]), std::to_string(i), std::to_string(j), num(p[i][j]),
                         e["method"].get<std::string>(), e["rangeWarning"].get<bool>() ? "true" : "false"});
      }
      break;
    case Command::Marginal:
      csv_row(os, {"t", "u", "j", "pi", "method", "range_warning"});
      for (const auto& e : res.at("marginals")) {
        const auto& pi = e.at("pi");
        for (std::size_t j = 0; j < pi.size(); ++j)
          csv_row(os, {num(e["t"]), num(e["u"]), std::to_string(j), num(pi[j]), e["method"].get<std::string>(),
                       e["rangeWarning"].get<bool>() ? "true" : "false"});
      }
      break;
    case Command::Waiting:
      csv_row(os, {"t", "u", "state", "cdf", "survival"});
      for (const auto& e : res.at("waiting"))
        for (const auto& label : states) {
          const auto l = label.get<std::string>();
          const bool has_cdf = e.contains("cdf") && e["cdf"].contains(l);
          const bool has_surv = e.contains("survival") && e["survival"].contains(l);
          if (!has_cdf && !has_surv) continue;
          csv_row(os, {num(e["t"]), num(e["u"]), l, has_cdf ? num(e["cdf"][l]) : "",
                       has_surv ? num(e["survival"][l]) : ""});
        }
      break;
    case Command::Warranty: {
      const auto& w = res.at("warranty");
      csv_row(os, {"region", "t_limit", "u_limit", "cost", "probability", "contribution"});
      std::size_t k = 0;
      for (const auto& r : w.at("regions"))
        csv_row(os, {std::to_string(k++), num(r["tLimit"]), num(r["uLimit"]), num(r["cost"]), num(r["probability"]),
                     num(r["contribution"])});
      csv_row(os, {"total", "", "", "", "", num(w["ewe"])});
      break;
    }
    case Command::Compare:
      csv_row(os, {"t", "u", "i", "j", "series", "laplace2d", "pde", "max_deviation"});
      for (const auto& e : res.at("compare").at("points")) {
        const auto& d = e.at("maxDeviation");
        for (std::size_t i = 0; i < d.size(); ++i)
          for (std::size_t j = 0; j < d[i].size(); ++j)
            csv_row(os, {num(e["t"]), num(e["u"]), std::to_string(i), std::to_string(j), num(e["series"][i][j]),
                         num(e["laplace2d"][i][j]), num(e["pde"][i][j]), num(d[i][j])});
      }
      break;
  }
  return os.str();
}

std::string render_json(const json& document) { return document.dump(2) + "\n"; }

}  // namespace biparam::cli
