#include "ufmax/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "ufmax/decompose.hpp"
#include "ufmax/io.hpp"

namespace ufmax {

namespace {

// Raised for semantic argument problems found after CLI11 accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& text, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" + text + "'");
  }
  return v;
}

unsigned default_threads() {
  if (const char* env = std::getenv("UFMAX_THREADS"); env != nullptr && *env != '\0') {
    auto v = parse_int(env, "UFMAX_THREADS value");
    if (v < 1) throw std::invalid_argument("UFMAX_THREADS must be positive");
    return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << bytes;
  if (!f) throw UsageError("failed writing " + path);
}

struct Args {
  std::string target = "1/1";
  std::int64_t max_den = 0;
  std::string range;
  std::int64_t unit = 0;
  int terms = 0;
  std::int64_t cap = 0;
  std::vector<std::int64_t> parts;
  std::string format = "tsv";
  bool max_terms = false;
  int min_terms = 1;
  std::string mode = "dfs";
  unsigned threads = 0;
  std::string out_path;
  std::string tsv_path;
  bool residue_prune = false;
  bool bigint = false;
  std::string solutions_path;
  std::string target_override;
};

int run_bound(const Args& a, std::ostream& out) {
  auto report = harmonic_window(a.max_den, Rational::parse(a.target));
  out << to_json(report).dump(2) << '\n';
  return kExitOk;
}

int run_sieve(const Args& a, std::ostream& out) {
  auto [lo, hi] = parse_range(a.range);
  auto report = sieve_fixed_point(lo, hi, Rational::parse(a.target));
  out << to_json(report).dump(2) << '\n';
  return kExitOk;
}

int run_split(const Args& a, std::ostream& out) {
  std::vector<std::vector<std::int64_t>> rows;
  if (!a.parts.empty()) {
    auto t = lcm_three_term_split(a.unit, a.parts);
    rows.emplace_back(t.begin(), t.end());
  } else if (a.terms == 2 && a.cap == 0) {
    for (auto [x, y] : two_term_splits(a.unit)) rows.push_back({x, y});
  } else {
    if (a.terms < 2) throw UsageError("--terms must be at least 2");
    if (a.cap <= 0) throw UsageError("--cap is required for more than two terms");
    rows = k_term_splits(SplitRequest{a.unit, a.terms, a.cap});
  }
  if (a.format == "json") {
    out << Json(rows).dump() << '\n';
  } else {
    out << solutions_tsv(rows);
  }
  return kExitOk;
}

int run_solve(const Args& a, const std::vector<std::string>& argv, std::ostream& out) {
  auto [lo, hi] = parse_range(a.range);
  SearchSpec spec;
  spec.lo = lo;
  spec.hi = hi;
  spec.target = Rational::parse(a.target);
  if (a.max_terms) {
    spec.maximize = true;
    spec.min_terms = a.min_terms;
    spec.max_terms = 0;
  } else {
    spec.min_terms = spec.max_terms = a.terms;
  }
  spec.mode = parse_search_mode(a.mode);
  spec.threads = a.threads > 0 ? a.threads : default_threads();
  spec.residue_prune = a.residue_prune;
  spec.force_bigint = a.bigint;

  RunManifest manifest("solve", argv);
  manifest.set_threads(spec.threads);
  manifest.set("defaults", {{"target", "1/1"}, {"mode", "dfs"}, {"threads_env", "UFMAX_THREADS"}});

  auto result = solve(spec);
  const auto canonical = canonical_solutions(result.solutions);
  manifest.set("solutions_sha256", sha256_hex(canonical));
  if (!a.tsv_path.empty()) {
    auto tsv = solutions_tsv(result.solutions);
    write_file(a.tsv_path, tsv);
    manifest.add_output(a.tsv_path, sha256_hex(tsv));
  }

  Json doc{{"manifest", manifest.to_json()}};
  const Json body = to_json(result);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  const auto text = doc.dump(2) + "\n";
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file(a.out_path, text);
    out << "wrote " << result.solutions.size() << " solution(s) to " << a.out_path << '\n';
  }
  return kExitOk;
}

int run_verify(const Args& a, const std::vector<std::string>& argv, std::ostream& out) {
  auto file = read_solution_file(a.solutions_path);
  Rational target = !a.target_override.empty() ? Rational::parse(a.target_override)
                                               : file.target.value_or(Rational(1));
  RunManifest manifest("verify", argv);
  manifest.add_input(a.solutions_path, file.sha256);

  bool all_ok = true;
  Json verdicts = Json::array();
  for (std::size_t i = 0; i < file.solutions.size(); ++i) {
    auto v = verify_solution(file.solutions[i], target, file.range);
    all_ok = all_ok && v.ok;
    Json row{{"index", i}, {"solution", file.solutions[i]}};
    const Json body = to_json(v);
    for (const auto& [k, val] : body.items()) row[k] = val;
    verdicts.push_back(std::move(row));
  }
  Json doc{{"manifest", manifest.to_json()},
           {"target", target.str()},
           {"solution_count", file.solutions.size()},
           {"all_ok", all_ok},
           {"verdicts", std::move(verdicts)}};
  out << doc.dump(2) << '\n';
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int run_analyze(const Args& a, const std::vector<std::string>& argv, std::ostream& out) {
  auto file = read_solution_file(a.solutions_path);
  if (file.solutions.empty()) throw UsageError(a.solutions_path + " holds no solutions to analyze");
  RunManifest manifest("analyze", argv);
  manifest.add_input(a.solutions_path, file.sha256);

  auto analysis = analyze(file.solutions);
  Json doc{{"manifest", manifest.to_json()}};
  const Json body = to_json(analysis);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  if (file.range) {
    SearchResult shim;
    shim.spec.lo = file.range->first;
    shim.spec.hi = file.range->second;
    shim.solutions = file.solutions;
    Json usage = Json::object();
    for (auto [d, n] : usability_report(shim)) usage[std::to_string(d)] = n;
    doc["usability"] = std::move(usage);
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("range must look like LO:HI, got '" + text + "'");
  auto lo = parse_int(text.substr(0, colon), "range bound");
  auto hi = parse_int(text.substr(colon + 1), "range bound");
  if (lo < 1 || lo > hi) throw std::invalid_argument("range needs 1 <= LO <= HI, got '" + text + "'");
  return {lo, hi};
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact search for distinct unit fractions summing to a target"};
  app.name(args.empty() ? "ufmax" : args[0]);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));

  Args a;
  auto* bound = app.add_subcommand("bound", "Harmonic-window bound on the number of terms");
  bound->add_option("--max-den", a.max_den, "Largest denominator")->required();
  bound->add_option("--target", a.target, "Target rational P/Q")->capture_default_str();

  auto* sieve = app.add_subcommand("sieve", "p-adic exclusion report for a denominator range");
  sieve->add_option("--range", a.range, "LO:HI")->required();
  sieve->add_option("--target", a.target, "Target rational P/Q")->capture_default_str();

  auto* split = app.add_subcommand("split", "Decompose 1/N into distinct unit fractions");
  split->add_option("--unit", a.unit, "N")->required()->check(CLI::PositiveNumber);
  auto* split_terms = split->add_option("--terms", a.terms, "Number of terms");
  split->add_option("--cap", a.cap, "Largest allowed denominator (0 = unbounded)")->capture_default_str();
  auto* parts = split->add_option("--parts", a.parts, "Three divisors of N for the common-multiple method")
                    ->delimiter(',')
                    ->excludes(split_terms);
  split_terms->excludes(parts);
  split->add_option("--format", a.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  auto* solve_cmd = app.add_subcommand("solve", "Find every representation with a given number of terms");
  solve_cmd->add_option("--range", a.range, "LO:HI")->required();
  auto* terms = solve_cmd->add_option("--terms", a.terms, "Exact number of terms")->check(CLI::PositiveNumber);
  auto* max_terms = solve_cmd->add_flag("--max-terms", a.max_terms, "Find the largest feasible number of terms");
  terms->excludes(max_terms);
  max_terms->excludes(terms);
  solve_cmd->add_option("--min-terms", a.min_terms, "Lowest k tried with --max-terms")
      ->needs(max_terms)
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--target", a.target, "Target rational P/Q")->capture_default_str();
  solve_cmd->add_option("--mode", a.mode, "dfs or complement")
      ->check(CLI::IsMember({"dfs", "complement"}))
      ->capture_default_str();
  solve_cmd->add_option("--threads", a.threads, "Worker threads (default: $UFMAX_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", a.out_path, "Write the JSON result here instead of stdout");
  solve_cmd->add_option("--tsv", a.tsv_path, "Also export solutions as TSV");
  solve_cmd->add_flag("--residue-prune", a.residue_prune, "Enable the per-prime residue prune");
  solve_cmd->add_flag("--bigint", a.bigint, "Force arbitrary-precision arithmetic");

  auto* verify = app.add_subcommand("verify", "Recheck solutions with exact rational arithmetic");
  verify->add_option("--solutions", a.solutions_path, "Solve output (JSON) or TSV")->required();
  verify->add_option("--target", a.target_override, "Override the target recorded in the file");

  auto* analyze_cmd = app.add_subcommand("analyze", "Common core, frequencies and swap relations");
  analyze_cmd->add_option("--solutions", a.solutions_path, "Solve output (JSON) or TSV")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    if (*bound) return run_bound(a, out);
    if (*sieve) return run_sieve(a, out);
    if (*split) {
      if (a.parts.empty() && a.terms == 0) throw UsageError("split needs --terms or --parts");
      return run_split(a, out);
    }
    if (*solve_cmd) {
      if (!a.max_terms && a.terms == 0) throw UsageError("solve needs --terms K or --max-terms");
      return run_solve(a, args, out);
    }
    if (*verify) return run_verify(a, args, out);
    if (*analyze_cmd) return run_analyze(a, args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  }
  return kExitBadArguments;
}

int cli_dispatch(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return cli_dispatch(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace ufmax
