#include "ufmax/sieve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ufmax/numtheory.hpp"
#include "ufmax/residue_set.hpp"

namespace ufmax {

std::int64_t residue_coefficient(std::int64_t a, std::int64_t p, int e) {
  if (a <= 0 || !is_prime(p)) throw std::invalid_argument("residue_coefficient needs a > 0, p prime");
  if (a % p != 0) throw std::invalid_argument("p does not divide a");
  int v = valuation(a, p);
  if (e < v) throw std::invalid_argument("exponent below the valuation of a");
  std::int64_t modulus = ipow(p, e);
  std::int64_t unit = a / ipow(p, v);
  return mod_floor(ipow(p, e - v) * mod_inverse(unit % modulus, modulus), modulus);
}

std::optional<std::int64_t> target_residue(const Rational& target, std::int64_t p, int e) {
  BigInt den = target.den();
  int v = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
    den /= static_cast<unsigned long>(p);
    ++v;
  }
  if (v > e) return std::nullopt;
  std::int64_t modulus = ipow(p, e);
  BigInt num_mod = target.num();
  mpz_fdiv_r_ui(num_mod.get_mpz_t(), num_mod.get_mpz_t(), static_cast<unsigned long>(modulus));
  auto den_mod = static_cast<std::int64_t>(
      mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(modulus)));
  std::int64_t r = ipow(p, e - v) * static_cast<std::int64_t>(num_mod.get_si()) % modulus;
  return mod_floor(r * mod_inverse(den_mod, modulus), modulus);
}

std::vector<std::int64_t> prime_admissible_set(std::span<const std::int64_t> candidates,
                                               std::int64_t p, const Rational& target) {
  std::vector<std::int64_t> multiples;
  for (auto a : candidates) {
    if (a > 0 && a % p == 0) multiples.push_back(a);
  }
  std::sort(multiples.begin(), multiples.end());
  multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());
  if (multiples.empty()) return {};

  int e = 0;
  for (auto a : multiples) e = std::max(e, valuation(a, p));
  auto wanted = target_residue(target, p, e);
  if (!wanted) return {};
  const std::int64_t modulus = ipow(p, e);

  const std::size_t n = multiples.size();
  std::vector<std::int64_t> coeff(n);
  for (std::size_t i = 0; i < n; ++i) coeff[i] = residue_coefficient(multiples[i], p, e);

  // suffix[i]: residues reachable by subsets of coeff[i..n).
  std::vector<ResidueSet> suffix(n + 1, ResidueSet(modulus));
  suffix[n].insert(0);
  for (std::size_t i = n; i-- > 0;) {
    suffix[i] = suffix[i + 1];
    suffix[i].absorb(coeff[i]);
  }

  std::vector<std::int64_t> admissible;
  ResidueSet prefix(modulus);
  prefix.insert(0);
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = false;
    const std::int64_t need = mod_floor(*wanted - coeff[i], modulus);
    suffix[i + 1].for_each([&](std::int64_t y) {
      if (!ok && prefix.contains(mod_floor(need - y, modulus))) ok = true;
    });
    if (ok) admissible.push_back(multiples[i]);
    prefix.absorb(coeff[i]);
  }
  return admissible;
}

ExclusionReport sieve_candidates(std::span<const std::int64_t> candidates, const Rational& target,
                                 SieveOptions options) {
  if (target.sign() <= 0) throw std::invalid_argument("sieve target must be positive");
  std::set<std::int64_t> current;
  for (auto d : candidates) {
    if (d <= 0) throw std::invalid_argument("candidate denominators must be positive");
    current.insert(d);
  }
  ExclusionReport report;
  report.target = target;
  if (!current.empty()) {
    report.lo = *current.begin();
    report.hi = *current.rbegin();
  }

  std::map<std::int64_t, Exclusion> excluded;
  for (auto d : current) {
    auto c = Rational::unit(d) <=> target;
    if (c == std::strong_ordering::greater || (options.multi_term && c == std::strong_ordering::equal)) {
      excluded.emplace(d, Exclusion{d, 0, 0, 1});
    }
  }
  for (auto& [d, ex] : excluded) current.erase(d);

  int round = 0;
  bool changed = true;
  while (changed) {
    ++round;
    // Every prime in a round sees the same snapshot.
    std::vector<std::int64_t> snapshot(current.begin(), current.end());
    if (!snapshot.empty()) {
      for (auto p : primes_up_to(snapshot.back())) {
        std::vector<std::int64_t> multiples;
        int e = 0;
        for (auto a : snapshot) {
          if (a % p == 0) {
            multiples.push_back(a);
            e = std::max(e, valuation(a, p));
          }
        }
        if (multiples.empty()) continue;
        auto admissible = prime_admissible_set(snapshot, p, target);
        for (auto a : multiples) {
          if (std::binary_search(admissible.begin(), admissible.end(), a)) continue;
          if (excluded.emplace(a, Exclusion{a, p, ipow(p, e), round}).second) current.erase(a);
        }
      }
    }
    changed = current.size() != snapshot.size();
  }
  report.rounds = round;
  report.kept.assign(current.begin(), current.end());
  for (auto& [d, ex] : excluded) report.excluded.push_back(ex);
  return report;
}

ExclusionReport sieve_fixed_point(std::int64_t lo, std::int64_t hi, const Rational& target,
                                  SieveOptions options) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("sieve range needs 1 <= lo <= hi");
  std::vector<std::int64_t> range;
  for (auto d = lo; d <= hi; ++d) range.push_back(d);
  auto report = sieve_candidates(range, target, options);
  report.lo = lo;
  report.hi = hi;
  return report;
}

}  // namespace ufmax
