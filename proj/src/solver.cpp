#include "ufmax/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "ufmax/analyzer.hpp"
#include "ufmax/bounds.hpp"
#include "ufmax/numtheory.hpp"
#include "ufmax/residue_set.hpp"
#include "ufmax/sieve.hpp"

namespace ufmax {

const char* to_string(SearchMode mode) {
  return mode == SearchMode::kDirect ? "dfs" : "complement";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "dfs") return SearchMode::kDirect;
  if (text == "complement") return SearchMode::kComplement;
  throw std::invalid_argument("unknown search mode '" + std::string(text) + "'");
}

PruneCounts& PruneCounts::operator+=(const PruneCounts& o) {
  nodes += o.nodes;
  too_few_left += o.too_few_left;
  cannot_reach += o.cannot_reach;
  overshoots += o.overshoots;
  not_exact += o.not_exact;
  residue += o.residue;
  return *this;
}

namespace {

using Index = std::uint32_t;

// Per-prime reachability of p-adic residues by subsets of the suffix
// starting at each candidate index.
struct ResiduePrime {
  std::int64_t modulus = 1;
  std::int64_t wanted = 0;
  std::vector<ResidueSet> reach;  // size m + 1
};

struct ResidueContext {
  bool impossible = false;
  std::vector<ResiduePrime> primes;
  // For each candidate index: (prime slot, coefficient) pairs.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> terms;
};

ResidueContext build_residue_context(const std::vector<std::int64_t>& dens, const Rational& goal) {
  ResidueContext ctx;
  const std::size_t m = dens.size();
  ctx.terms.resize(m);
  if (m == 0) return ctx;
  for (auto p : primes_up_to(dens.back())) {
    int e = 0;
    for (auto d : dens) {
      if (d % p == 0) e = std::max(e, valuation(d, p));
    }
    if (e == 0) continue;
    auto wanted = target_residue(goal, p, e);
    if (!wanted) {
      ctx.impossible = true;
      continue;
    }
    ResiduePrime rp;
    rp.modulus = ipow(p, e);
    rp.wanted = *wanted;
    rp.reach.assign(m + 1, ResidueSet(rp.modulus));
    rp.reach[m].insert(0);
    const std::size_t slot = ctx.primes.size();
    for (std::size_t i = m; i-- > 0;) {
      rp.reach[i] = rp.reach[i + 1];
      if (dens[i] % p == 0) {
        auto c = residue_coefficient(dens[i], p, e);
        rp.reach[i].absorb(c);
        ctx.terms[i].emplace_back(slot, c);
      }
    }
    ctx.primes.push_back(std::move(rp));
  }
  return ctx;
}

template <typename V>
V convert(const BigInt& v);

template <>
std::int64_t convert<std::int64_t>(const BigInt& v) {
  return to_int64(v);
}

template <>
BigInt convert<BigInt>(const BigInt& v) {
  return v;
}

struct Collected {
  std::vector<std::vector<Index>> picks;
  PruneCounts counts;
  std::uint64_t work_items = 0;
};

// Chooses exactly `picks` indices of the ascending candidate list whose
// weights (scale / den) sum to `goal`. Candidates are branched in ascending
// order: include first, then exclude.
template <typename V>
class Engine {
 public:
  Engine(const std::vector<std::int64_t>& dens, const BigInt& scale, V goal, int picks,
         const ResidueContext* residue)
      : m_(dens.size()), goal_(std::move(goal)), picks_(picks), residue_(residue) {
    weight_.reserve(m_);
    prefix_.assign(m_ + 1, V(0));
    for (std::size_t i = 0; i < m_; ++i) {
      weight_.push_back(convert<V>(scale / BigInt(static_cast<long>(dens[i]))));
      prefix_[i + 1] = prefix_[i] + weight_[i];
    }
  }

  Collected run(unsigned threads) {
    std::vector<std::pair<Index, Index>> items;
    if (picks_ >= 2) {
      for (Index a = 0; a < m_; ++a) {
        for (Index b = a + 1; b < m_; ++b) {
          if (m_ - b - 1 >= static_cast<std::size_t>(picks_ - 2)) items.emplace_back(a, b);
        }
      }
    }
    const std::size_t n_items = picks_ >= 2 ? items.size() : 1;
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n_items, 1))));

    std::vector<Worker> workers(threads);
    std::atomic<std::size_t> next{0};
    auto work = [&](Worker& w) {
      w.residues.assign(residue_ ? residue_->primes.size() : 0, 0);
      for (std::size_t k = next++; k < n_items; k = next++) {
        if (picks_ < 2) {
          dfs(w, 0, picks_, goal_);
        } else {
          run_item(w, items[k].first, items[k].second);
        }
      }
    };
    if (threads == 1) {
      work(workers[0]);
    } else {
      std::vector<std::jthread> pool;
      for (auto& w : workers) pool.emplace_back([&work, &w] { work(w); });
    }

    Collected out;
    out.work_items = n_items;
    for (auto& w : workers) {
      out.counts += w.counts;
      for (auto& f : w.found) out.picks.push_back(std::move(f));
    }
    return out;
  }

 private:
  struct Worker {
    PruneCounts counts;
    std::vector<Index> chosen;
    std::vector<std::int64_t> residues;
    std::vector<std::vector<Index>> found;
  };

  void run_item(Worker& w, Index a, Index b) {
    V rem = goal_ - weight_[a];
    rem -= weight_[b];
    if (rem < 0) {
      ++w.counts.not_exact;
      return;
    }
    push(w, a);
    push(w, b);
    dfs(w, b + 1, picks_ - 2, rem);
    pop(w);
    pop(w);
  }

  void push(Worker& w, Index i) {
    w.chosen.push_back(i);
    if (!residue_) return;
    for (auto [slot, c] : residue_->terms[i]) {
      w.residues[slot] = (w.residues[slot] + c) % residue_->primes[slot].modulus;
    }
  }

  void pop(Worker& w) {
    Index i = w.chosen.back();
    w.chosen.pop_back();
    if (!residue_) return;
    for (auto [slot, c] : residue_->terms[i]) {
      const auto mod = residue_->primes[slot].modulus;
      w.residues[slot] = (w.residues[slot] - c + mod) % mod;
    }
  }

  bool residue_feasible(const Worker& w, std::size_t i) const {
    if (residue_->impossible) return false;
    for (std::size_t s = 0; s < residue_->primes.size(); ++s) {
      const auto& rp = residue_->primes[s];
      if (!rp.reach[i].contains(mod_floor(rp.wanted - w.residues[s], rp.modulus))) return false;
    }
    return true;
  }

  void dfs(Worker& w, std::size_t i, int r, const V& rem) {
    ++w.counts.nodes;
    if (r == 0) {
      if (rem == 0) {
        w.found.push_back(w.chosen);
      } else {
        ++w.counts.not_exact;
      }
      return;
    }
    const auto need = static_cast<std::size_t>(r);
    if (m_ - i < need) {
      ++w.counts.too_few_left;
      return;
    }
    if (prefix_[i + need] - prefix_[i] < rem) {
      ++w.counts.cannot_reach;
      return;
    }
    if (prefix_[m_] - prefix_[m_ - need] > rem) {
      ++w.counts.overshoots;
      return;
    }
    if (residue_ && !residue_feasible(w, i)) {
      ++w.counts.residue;
      return;
    }
    if (weight_[i] <= rem) {
      push(w, static_cast<Index>(i));
      dfs(w, i + 1, r - 1, rem - weight_[i]);
      pop(w);
    } else {
      ++w.counts.not_exact;
    }
    dfs(w, i + 1, r, rem);
  }

  std::size_t m_;
  V goal_;
  int picks_;
  const ResidueContext* residue_;
  std::vector<V> weight_;
  std::vector<V> prefix_;
};

struct FixedKOutcome {
  std::vector<Solution> solutions;
  PruneCounts counts;
  std::uint64_t work_items = 0;
  bool bigint = false;
};

FixedKOutcome search_fixed_k(const SearchSpec& spec, const std::vector<std::int64_t>& dens, int k) {
  FixedKOutcome out;
  const auto m = static_cast<int>(dens.size());
  if (k > m || dens.empty()) return out;

  const BigInt scale = lcm_of_set(dens);
  // Every reciprocal sum over the pool has a denominator dividing the scale.
  if (!mpz_divisible_p(scale.get_mpz_t(), spec.target.den().get_mpz_t())) return out;

  Rational goal = spec.target;
  int picks = k;
  if (spec.mode == SearchMode::kComplement) {
    goal = reciprocal_sum(dens) - spec.target;
    picks = m - k;
    if (goal.sign() < 0) return out;
  }
  const BigInt scaled_goal = goal.num() * (scale / goal.den());

  ResidueContext residue;
  if (spec.residue_prune) residue = build_residue_context(dens, goal);
  const ResidueContext* rc = spec.residue_prune ? &residue : nullptr;

  Collected collected;
  BigInt total_weight = scale * static_cast<unsigned long>(m);
  if (!spec.force_bigint && scaled_sum_is_safe(static_cast<std::size_t>(m), scale) &&
      scaled_goal <= total_weight) {
    Engine<std::int64_t> engine(dens, scale, to_int64(scaled_goal), picks, rc);
    collected = engine.run(spec.threads);
  } else {
    out.bigint = true;
    Engine<BigInt> engine(dens, scale, scaled_goal, picks, rc);
    collected = engine.run(spec.threads);
  }
  out.counts = collected.counts;
  out.work_items = collected.work_items;

  for (auto& pick : collected.picks) {
    Solution s;
    if (spec.mode == SearchMode::kDirect) {
      for (auto i : pick) s.push_back(dens[i]);
    } else {
      std::vector<bool> dropped(dens.size(), false);
      for (auto i : pick) dropped[i] = true;
      for (std::size_t i = 0; i < dens.size(); ++i) {
        if (!dropped[i]) s.push_back(dens[i]);
      }
    }
    std::sort(s.begin(), s.end());
    out.solutions.push_back(std::move(s));
  }
  return out;
}

void validate(const SearchSpec& spec) {
  if (spec.lo < 1 || spec.lo > spec.hi) throw std::invalid_argument("search range needs 1 <= lo <= hi");
  if (spec.min_terms < 1) throw std::invalid_argument("term count must be at least 1");
  if (spec.max_terms != 0 && spec.max_terms < spec.min_terms) {
    throw std::invalid_argument("empty term range");
  }
  if (spec.target.sign() <= 0) throw std::invalid_argument("target must be positive");
}

}  // namespace

SearchResult solve(const SearchSpec& spec) {
  validate(spec);
  const auto started = std::chrono::steady_clock::now();

  SearchResult result;
  result.spec = spec;
  result.stats.threads = std::max(1U, spec.threads);

  if (spec.candidates) {
    for (auto d : *spec.candidates) {
      if (d >= spec.lo && d <= spec.hi) result.candidates.push_back(d);
    }
    std::sort(result.candidates.begin(), result.candidates.end());
    result.candidates.erase(std::unique(result.candidates.begin(), result.candidates.end()),
                            result.candidates.end());
  } else {
    SieveOptions options;
    options.multi_term = spec.min_terms >= 2;
    result.candidates = sieve_fixed_point(spec.lo, spec.hi, spec.target, options).kept;
  }

  if (spec.hi >= 2 && Rational::unit(spec.hi) <= spec.target) {
    result.term_bound = harmonic_window(spec.hi, spec.target).max_terms;
  } else if (spec.hi == 1) {
    result.term_bound = spec.target == Rational(1) ? 1 : 0;
  }

  const int top = spec.max_terms == 0 ? static_cast<int>(result.term_bound) : spec.max_terms;
  std::vector<int> ks;
  for (int k = spec.min_terms; k <= top; ++k) {
    if (k <= result.term_bound) ks.push_back(k);
  }
  if (ks.empty()) {
    result.infeasible = "harmonic bound: at most " + std::to_string(result.term_bound) +
                        " distinct terms with denominators <= " + std::to_string(spec.hi) +
                        " fit under " + spec.target.str();
  }
  if (spec.maximize) std::reverse(ks.begin(), ks.end());

  for (int k : ks) {
    result.searched_terms.push_back(k);
    auto outcome = search_fixed_k(spec, result.candidates, k);
    result.stats.prunes += outcome.counts;
    result.stats.work_items += outcome.work_items;
    result.stats.bigint = result.stats.bigint || outcome.bigint;
    for (auto& s : outcome.solutions) result.solutions.push_back(std::move(s));
    if (spec.maximize && !result.solutions.empty()) {
      result.best_terms = k;
      break;
    }
  }

  std::sort(result.solutions.begin(), result.solutions.end());
  result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()),
                         result.solutions.end());
  for (const auto& s : result.solutions) {
    auto v = verify_solution(s, spec.target, std::pair{spec.lo, spec.hi});
    if (!v.ok) throw std::logic_error("search admitted an invalid solution: " + v.failure);
  }

  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

Verdict verify_solution(std::span<const std::int64_t> dens, const Rational& target,
                        std::optional<std::pair<std::int64_t, std::int64_t>> range) {
  Verdict v;
  if (dens.empty()) {
    v.failure = "empty solution";
    return v;
  }
  std::vector<std::int64_t> sorted(dens.begin(), dens.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    v.failure = "repeated denominator " + std::to_string(*dup);
    return v;
  }
  for (std::size_t i = 0; i < dens.size(); ++i) {
    if (dens[i] <= 0) {
      v.failure = "non-positive denominator " + std::to_string(dens[i]);
      return v;
    }
    if (range && (dens[i] < range->first || dens[i] > range->second)) {
      v.failure = "denominator " + std::to_string(dens[i]) + " outside [" +
                  std::to_string(range->first) + ", " + std::to_string(range->second) + "]";
      return v;
    }
    if (i > 0 && dens[i] <= dens[i - 1]) {
      v.failure = "denominators not strictly increasing at position " + std::to_string(i);
      return v;
    }
  }
  Rational sum;
  for (auto d : dens) {
    sum += Rational::unit(d);
    v.running.push_back(sum);
  }
  if (sum != target) {
    v.failure = "sum " + sum.str() + " differs from target " + target.str();
    return v;
  }
  v.ok = true;
  return v;
}

std::vector<std::pair<std::int64_t, std::size_t>> usability_report(const SearchResult& result) {
  auto freq = frequency_table(result.solutions);
  std::vector<std::pair<std::int64_t, std::size_t>> out;
  for (auto d = result.spec.lo; d <= result.spec.hi; ++d) {
    auto it = freq.find(d);
    out.emplace_back(d, it == freq.end() ? 0 : it->second);
  }
  return out;
}

}  // namespace ufmax
