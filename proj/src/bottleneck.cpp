#include "rectdist/bottleneck.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "rectdist/hopcroft_karp.hpp"

namespace rectdist {

void Matching::validate(std::size_t left_size, std::size_t right_size) const {
  std::vector<bool> left_used(left_size, false);
  std::vector<bool> right_used(right_size, false);
  for (const auto& [i, j] : pairs) {
    if (i >= left_size || j >= right_size) {
      throw IndexOutOfRange("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range for sizes " +
                            std::to_string(left_size) + " x " + std::to_string(right_size));
    }
    if (left_used[i] || right_used[j]) {
      throw InvalidMatching("index reused in pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    left_used[i] = true;
    right_used[j] = true;
  }
}

std::vector<std::size_t> Matching::unmatched_left(std::size_t left_size) const {
  std::vector<bool> used(left_size, false);
  for (const auto& p : pairs) used.at(p.first) = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < left_size; ++i) {
    if (!used[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Matching::unmatched_right(std::size_t right_size) const {
  std::vector<bool> used(right_size, false);
  for (const auto& p : pairs) used.at(p.second) = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < right_size; ++j) {
    if (!used[j]) out.push_back(j);
  }
  return out;
}

CostMatrix build_cost_matrix(const Barcode& left, const Barcode& right) {
  require_compatible(left, right);
  CostMatrix costs;
  costs.left_size = left.size();
  costs.right_size = right.size();
  costs.pair_cost.reserve(left.size() * right.size());
  for (const auto& r : left.bars()) {
    for (const auto& q : right.bars()) costs.pair_cost.push_back(interleaving_distance(r, q));
  }
  for (const auto& r : left.bars()) costs.left_zero.push_back(zero_distance(r));
  for (const auto& q : right.bars()) costs.right_zero.push_back(zero_distance(q));
  return costs;
}

ExtReal matching_cost(const CostMatrix& costs, const Matching& matching) {
  matching.validate(costs.left_size, costs.right_size);
  ExtReal cost(0);
  for (const auto& [i, j] : matching.pairs) cost = max(cost, costs.pair(i, j));
  for (std::size_t i : matching.unmatched_left(costs.left_size)) cost = max(cost, costs.left_zero[i]);
  for (std::size_t j : matching.unmatched_right(costs.right_size)) cost = max(cost, costs.right_zero[j]);
  return cost;
}

namespace {

// The cost matrix with every entry replaced by its rank among the distinct
// candidate values, so the search compares integers only.
struct RankedCosts {
  std::vector<ExtReal> candidates;  // sorted, distinct, contains 0
  std::vector<std::uint32_t> pair;
  std::vector<std::uint32_t> left_zero;
  std::vector<std::uint32_t> right_zero;
};

RankedCosts rank_costs(const CostMatrix& costs) {
  RankedCosts ranked;
  auto& c = ranked.candidates;
  c.reserve(costs.pair_cost.size() + costs.left_zero.size() + costs.right_zero.size() + 1);
  c.insert(c.end(), costs.pair_cost.begin(), costs.pair_cost.end());
  c.insert(c.end(), costs.left_zero.begin(), costs.left_zero.end());
  c.insert(c.end(), costs.right_zero.begin(), costs.right_zero.end());
  c.emplace_back(0);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());

  auto rank_of = [&c](const ExtReal& x) {
    return static_cast<std::uint32_t>(std::lower_bound(c.begin(), c.end(), x) - c.begin());
  };
  auto rank_all = [&](const std::vector<ExtReal>& xs, std::vector<std::uint32_t>& out) {
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(rank_of(x));
  };
  rank_all(costs.pair_cost, ranked.pair);
  rank_all(costs.left_zero, ranked.left_zero);
  rank_all(costs.right_zero, ranked.right_zero);
  return ranked;
}

// Perfect matching in the dummy-augmented graph with all edges of rank <=
// threshold. Returns the bar-to-bar part of it, or nothing.
std::optional<Matching> match_at(const CostMatrix& costs, const RankedCosts& ranked, std::uint32_t threshold) {
  const auto m = static_cast<std::uint32_t>(costs.left_size);
  const auto k = static_cast<std::uint32_t>(costs.right_size);
  BipartiteGraph graph(m + k, k + m);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      if (ranked.pair[std::size_t{i} * k + j] <= threshold) graph.add_edge(i, j);
    }
    if (ranked.left_zero[i] <= threshold) graph.add_edge(i, k + i);
  }
  for (std::uint32_t j = 0; j < k; ++j) {
    if (ranked.right_zero[j] <= threshold) graph.add_edge(m + j, j);
    for (std::uint32_t d = 0; d < m; ++d) graph.add_edge(m + j, k + d);
  }
  if (graph.maximum_matching() != m + k) return std::nullopt;

  Matching matching;
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::uint32_t mate = graph.mate_of_left(i);
    if (mate < k) matching.pairs.emplace_back(i, mate);
  }
  return matching;
}

}  // namespace

std::optional<Matching> find_matching_within(const CostMatrix& costs, const ExtReal& eps) {
  const RankedCosts ranked = rank_costs(costs);
  const auto& c = ranked.candidates;
  // Largest candidate <= eps; eps below 0 admits nothing.
  auto it = std::upper_bound(c.begin(), c.end(), eps);
  if (it == c.begin()) return std::nullopt;
  return match_at(costs, ranked, static_cast<std::uint32_t>(it - c.begin() - 1));
}

BottleneckResult bottleneck_distance(const CostMatrix& costs) {
  const RankedCosts ranked = rank_costs(costs);
  const auto top = static_cast<std::uint32_t>(ranked.candidates.size() - 1);

  // At the largest candidate every edge is present, so the leave-everything-
  // unmatched matching is always available.
  std::optional<Matching> best = match_at(costs, ranked, top);
  if (!best) throw std::logic_error("bottleneck: no matching at the largest candidate");

  std::uint32_t lo = 0;
  std::uint32_t hi = top;  // feasible
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    if (auto found = match_at(costs, ranked, mid)) {
      hi = mid;
      best = std::move(found);
    } else {
      lo = mid + 1;
    }
  }
  // `best` was found at the threshold hi; every probe below it failed.
  if (hi > 0 && match_at(costs, ranked, hi - 1)) {
    throw std::logic_error("bottleneck: feasibility is not monotone in the threshold");
  }

  BottleneckResult result{ranked.candidates[hi], std::move(*best)};
  if (matching_cost(costs, result.matching) != result.value) {
    throw std::logic_error("bottleneck: witness cost differs from the optimum");
  }
  return result;
}

BottleneckResult bottleneck_distance(const Barcode& left, const Barcode& right) {
  return bottleneck_distance(build_cost_matrix(left, right));
}

std::string matching_to_json(const Matching& matching, std::size_t left_size, std::size_t right_size) {
  using nlohmann::json;
  json pairs = json::array();
  for (const auto& [i, j] : matching.pairs) pairs.push_back(json::array({i, j}));
  json doc{{"pairs", std::move(pairs)},
           {"unmatched_left", matching.unmatched_left(left_size)},
           {"unmatched_right", matching.unmatched_right(right_size)}};
  return doc.dump(2) + "\n";
}

}  // namespace rectdist
