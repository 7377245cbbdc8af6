// JSON/TSV serialization of reports and results, solution file loading,
// and run manifests.
#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ufmax/analyzer.hpp"
#include "ufmax/bounds.hpp"
#include "ufmax/sieve.hpp"
#include "ufmax/solver.hpp"

namespace ufmax {

using Json = nlohmann::ordered_json;

Json to_json(const ExclusionReport& report);
Json to_json(const BoundReport& report);
Json to_json(const SearchResult& result);
Json to_json(const SolutionAnalysis& analysis);
Json to_json(const Verdict& verdict);

/// The solution list alone, as a compact JSON array. Identical bytes for
/// identical solution sets regardless of how the search was run.
std::string canonical_solutions(std::span<const Solution> solutions);

/// One solution per line, denominators separated by tabs.
std::string solutions_tsv(std::span<const Solution> solutions);

struct SolutionFile {
  std::vector<Solution> solutions;
  std::optional<Rational> target;
  std::optional<std::pair<std::int64_t, std::int64_t>> range;
  std::string sha256;
};

/// Reads a solve result (JSON object), a bare JSON array of arrays, or TSV.
/// Throws std::runtime_error on unreadable or malformed input.
SolutionFile read_solution_file(const std::filesystem::path& path);

std::string sha256_hex(std::string_view bytes);

/// Provenance embedded in every persisted result.
class RunManifest {
 public:
  RunManifest(std::string command, std::vector<std::string> argv);

  void set_threads(unsigned threads) { threads_ = threads; }
  void add_input(const std::string& path, const std::string& sha256);
  void add_output(const std::string& path, const std::string& sha256);
  void set(const std::string& key, Json value) { extra_[key] = std::move(value); }

  Json to_json() const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  std::chrono::system_clock::time_point started_;
  unsigned threads_ = 1;
  Json inputs_ = Json::array();
  Json outputs_ = Json::array();
  Json extra_ = Json::object();
};

const char* tool_version();

}  // namespace ufmax
