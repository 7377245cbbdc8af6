// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "json.hpp"
#include "oracle.hpp"
#include "ufmax/analyzer.hpp"
#include "ufmax/bounds.hpp"
#include "ufmax/cli.hpp"
#include "ufmax/decompose.hpp"
#include "ufmax/io.hpp"
#include "ufmax/numtheory.hpp"
#include "ufmax/sieve.hpp"
#include "ufmax/solver.hpp"

using ufmax::Rational;
using ufmax::SearchSpec;
using ufmax::Solution;

namespace {

constexpr double kFourThreadBudgetSeconds = 600.0;
constexpr double kSingleThreadBudgetSeconds = 3600.0;

const Solution kPublishedFirst{12, 17, 21, 22, 24, 26, 27, 30, 32, 33, 34, 35, 36, 38,
                           39, 40, 42, 44, 48, 50, 52, 54, 55, 56, 60, 63, 66, 70,
                           72, 75, 76, 77, 78, 80, 84, 85, 88, 90, 91, 95, 96, 99};
const Solution kPublishedSecond{13, 17, 18, 21, 22, 24, 26, 27, 32, 33, 34, 35, 38, 40,
                            42, 44, 45, 48, 50, 52, 54, 55, 56, 60, 63, 65, 66, 70,
                            72, 75, 76, 77, 78, 80, 84, 85, 88, 90, 91, 95, 96, 99};
const std::vector<std::int64_t> kPublishedCore{17, 26, 32, 33, 34, 40, 44, 48, 50, 55, 56,
                                           66, 75, 76, 77, 80, 84, 85, 88, 91, 96};
const std::vector<std::int64_t> kPublishedUsable{
    12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 24, 26, 27, 28, 30, 32, 33, 34,
    35, 36, 38, 39, 40, 42, 44, 45, 48, 50, 52, 54, 55, 56, 57, 60, 63, 65,
    66, 70, 72, 75, 76, 77, 78, 80, 84, 85, 88, 90, 91, 95, 96, 99};
const std::vector<std::int64_t> kPublishedUnusable{16, 23, 25, 29, 31, 37, 41, 43, 46, 47, 49, 51,
                                               53, 58, 59, 61, 62, 64, 67, 68, 69, 71, 73, 74,
                                               79, 81, 82, 83, 86, 87, 89, 92, 93, 94, 97, 98};

struct Outcome {
  bool pass;
  std::string detail;
};

struct CliRun {
  int code;
  nlohmann::json doc;
  double seconds;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ufmax");
  std::ostringstream out, err;
  auto t0 = std::chrono::steady_clock::now();
  int code = ufmax::cli_dispatch(args, out, err);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  nlohmann::json doc;
  if (code == 0) doc = nlohmann::json::parse(out.str());
  return {code, std::move(doc), secs};
}

// Shared across criteria 1-5.
std::vector<Solution>& forty_two() {
  static std::vector<Solution> sols = ufmax::solve(SearchSpec::exactly(2, 99, 42)).solutions;
  return sols;
}

Outcome headline() {
  auto four = run_cli({"solve", "--range", "2:99", "--terms", "42", "--target", "1/1", "--threads", "4"});
  auto one = run_cli({"solve", "--range", "2:99", "--terms", "42", "--target", "1/1", "--threads", "1"});
  if (four.code != 0 || one.code != 0) return {false, "solve exited with an error"};
  auto n = four.doc["solution_count"].get<std::size_t>();
  bool ok = n == 27 && one.doc["solution_count"] == 27 && four.seconds < kFourThreadBudgetSeconds &&
            one.seconds < kSingleThreadBudgetSeconds;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu solutions; %.3f s with 4 threads (limit %.0f), %.3f s with 1 (limit %.0f)",
                n, four.seconds, kFourThreadBudgetSeconds, one.seconds, kSingleThreadBudgetSeconds);
  return {ok, buf};
}

Outcome impossibility() {
  auto r = run_cli({"solve", "--range", "2:99", "--terms", "43", "--target", "1/1", "--threads", "4"});
  if (r.code != 0) return {false, "solve exited with an error"};
  auto n = r.doc["solution_count"].get<std::size_t>();
  char buf[120];
  std::snprintf(buf, sizeof buf, "%zu solutions in %.3f s", n, r.seconds);
  return {n == 0 && r.seconds < kFourThreadBudgetSeconds, buf};
}

Outcome known_solutions() {
  const auto& sols = forty_two();
  bool first = std::find(sols.begin(), sols.end(), kPublishedFirst) != sols.end();
  bool second = std::find(sols.begin(), sols.end(), kPublishedSecond) != sols.end();
  return {first && second, std::string("first ") + (first ? "found" : "missing") + ", second " +
                               (second ? "found" : "missing")};
}

Outcome core_and_frequencies() {
  auto analysis = ufmax::analyze(forty_two());
  auto& f = analysis.frequencies;
  auto count = [&](std::int64_t d) { return f.count(d) ? f.at(d) : std::size_t{0}; };
  bool ok = analysis.core == kPublishedCore && count(12) == 1 && count(14) == 1 && count(19) == 3 &&
            count(57) == 3;
  std::ostringstream os;
  os << "core size " << analysis.core.size() << "; counts 12:" << count(12) << " 14:" << count(14)
     << " 19:" << count(19) << " 57:" << count(57);
  return {ok, os.str()};
}

Outcome swap_identity() {
  std::vector<Solution> pair{kPublishedFirst, kPublishedSecond};
  auto edges = ufmax::swap_edges(pair);
  if (edges.size() != 1) return {false, "expected one edge"};
  const auto& e = edges[0];
  bool ok = e.only_in_first == std::vector<std::int64_t>{12, 30, 36, 39} &&
            e.only_in_second == std::vector<std::int64_t>{13, 18, 45, 65} &&
            e.common_value == Rational(199, 1170) && e.other_value == Rational(199, 1170);
  return {ok, "common value " + e.common_value.str()};
}

Outcome bound() {
  auto r = run_cli({"bound", "--max-den", "99"});
  if (r.code != 0) return {false, "bound exited with an error"};
  Rational from37;
  for (std::int64_t i = 37; i <= 99; ++i) from37 += Rational::unit(i);
  bool ok = r.doc["window_start"] == 38 && r.doc["max_terms"] == 62 && from37 > Rational(1) &&
            Rational::parse(r.doc["extended_sum"].get<std::string>()) == from37 &&
            Rational::parse(r.doc["window_sum"].get<std::string>()) <= Rational(1);
  std::ostringstream os;
  os << "window_start " << r.doc["window_start"] << ", max_terms " << r.doc["max_terms"]
     << ", sum 1/37..1/99 > 1: " << (from37 > Rational(1) ? "yes" : "no");
  return {ok, os.str()};
}

Outcome sieve_vs_lists() {
  auto r = run_cli({"sieve", "--range", "12:99"});
  if (r.code != 0) return {false, "sieve exited with an error"};
  auto kept = r.doc["kept"].get<std::vector<std::int64_t>>();
  std::vector<std::int64_t> excluded;
  for (const auto& e : r.doc["excluded"]) excluded.push_back(e["den"].get<std::int64_t>());

  std::vector<std::int64_t> expected_kept = kPublishedUsable;
  expected_kept.push_back(16);
  std::sort(expected_kept.begin(), expected_kept.end());
  std::vector<std::int64_t> expected_excluded;
  for (auto d : kPublishedUnusable) {
    if (d != 16) expected_excluded.push_back(d);
  }

  // 16 is only ruled out by the search itself.
  ufmax::SearchResult result;
  result.spec = SearchSpec::exactly(2, 99, 42);
  result.solutions = forty_two();
  std::size_t usage16 = 99;
  std::size_t used = 0;
  bool usage_matches = true;
  for (auto [d, n] : ufmax::usability_report(result)) {
    if (d == 16) usage16 = n;
    if (d < 12) continue;
    used += n > 0;
    usage_matches = usage_matches &&
                    ((n > 0) == std::binary_search(kPublishedUsable.begin(), kPublishedUsable.end(), d));
  }
  bool ok = kept == expected_kept && excluded == expected_excluded && usage16 == 0 && usage_matches;
  std::ostringstream os;
  os << "kept " << kept.size() << ", excluded " << excluded.size() << ", 16 used by " << usage16
     << " solutions, " << used << " denominators used";
  return {ok, os.str()};
}


Outcome oracle_equivalence() {
  auto all = oracle::subsets_summing_to_one(2, 36);
  std::size_t mismatches = 0, checks = 0;
  for (std::int64_t hi = 12; hi <= 36; ++hi) {
    std::map<std::size_t, std::vector<Solution>> expected;
    for (const auto& s : all) {
      if (s.back() <= hi) expected[s.size()].push_back(s);
    }
    for (int k = 1; k <= hi - 1; ++k) {
      ++checks;
      auto got = ufmax::solve(SearchSpec::exactly(2, hi, k)).solutions;
      if (got != expected[static_cast<std::size_t>(k)]) ++mismatches;
    }
  }
  std::ostringstream os;
  os << all.size() << " subsets of [2,36] sum to 1; " << checks << " (hi, k) searches, " << mismatches
     << " mismatches";
  return {mismatches == 0, os.str()};
}

Outcome sieve_soundness() {
  auto all = oracle::subsets_summing_to_one_mitm(2, 40);
  std::size_t violations = 0;
  for (std::int64_t lo = 2; lo <= 12; ++lo) {
    for (std::int64_t hi = lo; hi <= 40; ++hi) {
      auto rep = ufmax::sieve_fixed_point(lo, hi);
      std::set<std::int64_t> excl;
      for (const auto& e : rep.excluded) excl.insert(e.den);
      for (const auto& s : all) {
        if (s.front() < lo || s.back() > hi) continue;
        for (auto d : s) violations += excl.count(d);
      }
    }
  }

  std::mt19937_64 rng(424242);
  const auto primes = ufmax::primes_up_to(99);
  std::size_t trials = 0, property_failures = 0;
  while (trials < 10000) {
    for (auto p : primes) {
      std::vector<std::int64_t> multiples;
      int e = 0;
      for (std::int64_t a = p; a <= 99; a += p) {
        multiples.push_back(a);
        e = std::max(e, ufmax::valuation(a, p));
      }
      const auto modulus = ufmax::ipow(p, e);
      mpq_class sum = 0;
      std::int64_t coeff = 0;
      std::size_t picked = 0;
      for (auto a : multiples) {
        if (rng() & 1U) {
          sum += mpq_class(1, a);
          coeff = (coeff + ufmax::residue_coefficient(a, p, e)) % modulus;
          ++picked;
        }
      }
      if (picked == 0) continue;
      sum.canonicalize();
      bool p_free = mpz_divisible_ui_p(sum.get_den_mpz_t(), static_cast<unsigned long>(p)) == 0;
      property_failures += p_free != (coeff == 0);
      ++trials;
    }
  }
  std::ostringstream os;
  os << all.size() << " subsets of [2,40] sum to 1; " << violations << " use an excluded denominator; "
     << trials << " residue trials, " << property_failures << " failures";
  return {violations == 0 && property_failures == 0, os.str()};
}

Outcome determinism() {
  bool ok = true;
  std::ostringstream os;
  for (int k : {42, 41}) {
    std::string reference;
    for (unsigned threads : {1U, 2U, 4U, 8U}) {
      for (auto mode : {ufmax::SearchMode::kDirect, ufmax::SearchMode::kComplement}) {
        auto spec = SearchSpec::exactly(2, 99, k);
        spec.threads = threads;
        spec.mode = mode;
        auto bytes = ufmax::canonical_solutions(ufmax::solve(spec).solutions);
        if (reference.empty()) reference = bytes;
        ok = ok && bytes == reference;
      }
    }
    os << "k=" << k << " sha256 " << ufmax::sha256_hex(reference).substr(0, 16) << "; ";
  }
  os << "threads {1,2,4,8} x {dfs, complement}";
  return {ok, os.str()};
}

Outcome decomposer() {
  std::size_t mismatches = 0;
  for (std::int64_t n = 1; n <= 50; ++n) {
    if (ufmax::two_term_splits(n, 10000) != oracle::two_term_pairs(n, 10000)) ++mismatches;
  }
  auto nine = ufmax::k_term_splits({9, 3, 99});
  auto twelve = ufmax::k_term_splits({12, 3, 99});
  bool has_nine = std::find(nine.begin(), nine.end(), std::vector<std::int64_t>{14, 35, 90}) != nine.end();
  bool has_twelve =
      std::find(twelve.begin(), twelve.end(), std::vector<std::int64_t>{26, 39, 52}) != twelve.end();
  std::ostringstream os;
  os << mismatches << " two-term mismatches for n <= 50; (14,35,90) " << (has_nine ? "found" : "missing")
     << "; (26,39,52) " << (has_twelve ? "found" : "missing");
  return {mismatches == 0 && has_nine && has_twelve, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1  42 terms up to 99: exactly 27 solutions", headline},
      {"AC2  43 terms up to 99: no solution", impossibility},
      {"AC3  both listed solutions present", known_solutions},
      {"AC4  common core and frequencies", core_and_frequencies},
      {"AC5  swap identity 199/1170", swap_identity},
      {"AC6  harmonic window 38..99, 62 terms", bound},
      {"AC7  sieve over [12,99] vs usable/unusable lists", sieve_vs_lists},
      {"AC8  search equals brute force for hi 12..36", oracle_equivalence},
      {"AC9  sieve soundness and residue property", sieve_soundness},
      {"AC10 identical output across threads and modes", determinism},
      {"AC11 decomposer fidelity", decomposer},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s -- %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
