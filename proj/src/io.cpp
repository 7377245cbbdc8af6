#include "ufmax/io.hpp"

#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#ifndef UFMAX_VERSION
#define UFMAX_VERSION "0.0.0"
#endif

namespace ufmax {

const char* tool_version() { return UFMAX_VERSION; }

Json to_json(const ExclusionReport& report) {
  Json excluded = Json::array();
  for (const auto& e : report.excluded) {
    excluded.push_back({{"den", e.den}, {"prime", e.prime}, {"modulus", e.modulus}, {"round", e.round}});
  }
  return Json{{"range", {report.lo, report.hi}},
              {"target", report.target.str()},
              {"kept", report.kept},
              {"excluded", std::move(excluded)},
              {"kept_count", report.kept.size()},
              {"excluded_count", report.excluded.size()},
              {"rounds", report.rounds}};
}

Json to_json(const BoundReport& report) {
  return Json{{"hi", report.hi},
              {"target", report.target.str()},
              {"window_start", report.window_start},
              {"max_terms", report.max_terms},
              {"window_sum", report.window_sum.str()},
              {"extended_sum", report.extended_sum ? Json(report.extended_sum->str()) : Json(nullptr)}};
}

Json to_json(const SearchResult& result) {
  const auto& spec = result.spec;
  Json terms;
  if (spec.min_terms == spec.max_terms) {
    terms = spec.min_terms;
  } else {
    terms = {{"min", spec.min_terms}, {"max", spec.max_terms == 0 ? Json(nullptr) : Json(spec.max_terms)}};
  }
  Json spec_json{{"range", {spec.lo, spec.hi}},
                 {"terms", std::move(terms)},
                 {"maximize", spec.maximize},
                 {"target", spec.target.str()},
                 {"mode", to_string(spec.mode)},
                 {"residue_prune", spec.residue_prune},
                 {"candidate_source", spec.candidates ? "explicit" : "sieve"}};
  const auto& p = result.stats.prunes;
  Json stats{{"nodes", p.nodes},
             {"prunes",
              {{"too_few_left", p.too_few_left},
               {"cannot_reach", p.cannot_reach},
               {"overshoots", p.overshoots},
               {"not_exact", p.not_exact},
               {"residue", p.residue}}},
             {"work_items", result.stats.work_items},
             {"threads", result.stats.threads},
             {"arithmetic", result.stats.bigint ? "bigint" : "int64"},
             {"wall_seconds", result.stats.wall_seconds}};
  return Json{{"spec", std::move(spec_json)},
              {"candidates", result.candidates},
              {"term_bound", result.term_bound},
              {"searched_terms", result.searched_terms},
              {"best_terms", result.best_terms ? Json(*result.best_terms) : Json(nullptr)},
              {"infeasible", result.infeasible ? Json(*result.infeasible) : Json(nullptr)},
              {"solution_count", result.solutions.size()},
              {"solutions", result.solutions},
              {"stats", std::move(stats)}};
}

Json to_json(const SolutionAnalysis& analysis) {
  Json freq = Json::object();
  for (auto [d, n] : analysis.frequencies) freq[std::to_string(d)] = n;
  Json edges = Json::array();
  for (const auto& e : analysis.edges) {
    edges.push_back({{"pair", {e.first, e.second}},
                     {"only_in_i", e.only_in_first},
                     {"only_in_j", e.only_in_second},
                     {"common_value", e.common_value.str()},
                     {"balanced", e.balanced()}});
  }
  Json connectivity = Json::object();
  for (auto [t, ok] : analysis.connectivity_at) connectivity[std::to_string(t)] = ok;
  return Json{{"solution_count", analysis.distance.size()},
              {"common_core", analysis.core},
              {"frequencies", std::move(freq)},
              {"swap_edges", std::move(edges)},
              {"difference_matrix", analysis.distance},
              {"nearest_swap_size", analysis.nearest},
              {"connectivity_at", std::move(connectivity)}};
}

Json to_json(const Verdict& verdict) {
  Json running = Json::array();
  for (const auto& r : verdict.running) running.push_back(r.str());
  return Json{{"ok", verdict.ok},
              {"failure", verdict.ok ? Json(nullptr) : Json(verdict.failure)},
              {"running_sums", std::move(running)}};
}

std::string canonical_solutions(std::span<const Solution> solutions) {
  return Json(std::vector<Solution>(solutions.begin(), solutions.end())).dump();
}

std::string solutions_tsv(std::span<const Solution> solutions) {
  std::string out;
  for (const auto& s : solutions) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += '\t';
      out += std::to_string(s[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<Solution> parse_solution_array(const Json& arr) {
  if (!arr.is_array()) throw std::runtime_error("\"solutions\" must be an array");
  std::vector<Solution> out;
  for (const auto& row : arr) {
    if (!row.is_array()) throw std::runtime_error("each solution must be an array of integers");
    Solution s;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw std::runtime_error("denominators must be integers");
      s.push_back(v.get<std::int64_t>());
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Solution> parse_tsv(const std::string& text) {
  std::vector<Solution> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Solution s;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::runtime_error("malformed denominator '" + tok + "'");
      s.push_back(v);
    }
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

SolutionFile read_solution_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  SolutionFile file;
  file.sha256 = sha256_hex(text);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw std::runtime_error(path.string() + ": " + e.what());
    }
    if (doc.is_array()) {
      file.solutions = parse_solution_array(doc);
      return file;
    }
    if (!doc.contains("solutions")) throw std::runtime_error(path.string() + ": no \"solutions\" field");
    file.solutions = parse_solution_array(doc["solutions"]);
    if (doc.contains("spec")) {
      const auto& spec = doc["spec"];
      try {
        if (spec.contains("target")) file.target = Rational::parse(spec["target"].get<std::string>());
        if (spec.contains("range")) {
          file.range = std::pair{spec["range"][0].get<std::int64_t>(), spec["range"][1].get<std::int64_t>()};
        }
      } catch (const Json::exception& e) {
        throw std::runtime_error(path.string() + ": malformed spec: " + e.what());
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
      }
    }
    return file;
  }
  file.solutions = parse_tsv(text);
  return file;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

RunManifest::RunManifest(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)), started_(std::chrono::system_clock::now()) {}

void RunManifest::add_input(const std::string& path, const std::string& sha256) {
  inputs_.push_back({{"path", path}, {"sha256", sha256}});
}

void RunManifest::add_output(const std::string& path, const std::string& sha256) {
  outputs_.push_back({{"path", path}, {"sha256", sha256}});
}

Json RunManifest::to_json() const {
  Json j{{"tool", "ufmax"},
         {"version", tool_version()},
         {"command", command_},
         {"argv", argv_},
         {"started_at", utc_timestamp(started_)},
         {"finished_at", utc_timestamp(std::chrono::system_clock::now())},
         {"threads", threads_},
         {"inputs", inputs_},
         {"outputs", outputs_}};
  for (const auto& [k, v] : extra_.items()) j[k] = v;
  return j;
}

}  // namespace ufmax
