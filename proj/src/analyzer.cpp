#include "ufmax/analyzer.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace ufmax {

std::vector<std::int64_t> common_core(std::span<const Solution> solutions) {
  if (solutions.empty()) throw std::invalid_argument("common_core of an empty solution list");
  std::vector<std::int64_t> core(solutions.front().begin(), solutions.front().end());
  std::sort(core.begin(), core.end());
  for (const auto& s : solutions.subspan(1)) {
    std::vector<std::int64_t> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> next;
    std::set_intersection(core.begin(), core.end(), sorted.begin(), sorted.end(),
                          std::back_inserter(next));
    core = std::move(next);
  }
  return core;
}

std::map<std::int64_t, std::size_t> frequency_table(std::span<const Solution> solutions) {
  std::map<std::int64_t, std::size_t> freq;
  for (const auto& s : solutions) {
    std::vector<std::int64_t> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto d : sorted) ++freq[d];
  }
  return freq;
}

SwapRelation swap_relation(const Solution& a, const Solution& b, std::size_t first,
                           std::size_t second) {
  std::vector<std::int64_t> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  SwapRelation rel;
  rel.first = first;
  rel.second = second;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                      std::back_inserter(rel.only_in_first));
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                      std::back_inserter(rel.only_in_second));
  rel.common_value = reciprocal_sum(rel.only_in_first);
  rel.other_value = reciprocal_sum(rel.only_in_second);
  return rel;
}

std::vector<SwapRelation> swap_edges(std::span<const Solution> solutions) {
  std::vector<SwapRelation> edges;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    for (std::size_t j = i + 1; j < solutions.size(); ++j) {
      edges.push_back(swap_relation(solutions[i], solutions[j], i, j));
    }
  }
  return edges;
}

namespace {

bool connected_within(const std::vector<std::vector<std::size_t>>& distance, std::size_t threshold) {
  const std::size_t n = distance.size();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance[i][j] > threshold) continue;
      auto ri = find(i), rj = find(j);
      if (ri != rj) {
        parent[ri] = rj;
        --components;
      }
    }
  }
  return components == 1;
}

}  // namespace

SolutionAnalysis analyze(std::span<const Solution> solutions) {
  SolutionAnalysis out;
  out.core = common_core(solutions);
  out.frequencies = frequency_table(solutions);
  out.edges = swap_edges(solutions);

  const std::size_t n = solutions.size();
  out.distance.assign(n, std::vector<std::size_t>(n, 0));
  std::size_t widest = 0;
  for (const auto& e : out.edges) {
    out.distance[e.first][e.second] = out.distance[e.second][e.first] = e.size();
    widest = std::max(widest, e.size());
  }
  out.nearest.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto d = out.distance[i][j];
      if (i != j && d > 0 && (out.nearest[i] == 0 || d < out.nearest[i])) out.nearest[i] = d;
    }
  }
  for (std::size_t t = 1; t <= widest; ++t) out.connectivity_at[t] = connected_within(out.distance, t);
  return out;
}

}  // namespace ufmax
