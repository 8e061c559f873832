#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectdist/barcode.hpp"

namespace rectdist {

/// A partial multibijection between two barcodes, as (left index, right
/// index) pairs. Every index occurs at most once on its side.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  /// Throws IndexOutOfRange or InvalidMatching.
  void validate(std::size_t left_size, std::size_t right_size) const;

  std::vector<std::size_t> unmatched_left(std::size_t left_size) const;
  std::vector<std::size_t> unmatched_right(std::size_t right_size) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Every quantity the bottleneck min-max ranges over.
struct CostMatrix {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<ExtReal> pair_cost;   // row-major, left_size x right_size
  std::vector<ExtReal> left_zero;   // zero_distance of each left bar
  std::vector<ExtReal> right_zero;  // zero_distance of each right bar

  const ExtReal& pair(std::size_t i, std::size_t j) const { return pair_cost[i * right_size + j]; }
};

CostMatrix build_cost_matrix(const Barcode& left, const Barcode& right);

/// max over matched pairs of pair_cost, unmatched left bars of left_zero and
/// unmatched right bars of right_zero. The max over nothing is 0.
ExtReal matching_cost(const CostMatrix& costs, const Matching& matching);

/// An eps-matching if one exists: a matching of cost <= eps.
std::optional<Matching> find_matching_within(const CostMatrix& costs, const ExtReal& eps);

struct BottleneckResult {
  ExtReal value;
  Matching matching;  // attains `value`
};

/// Exact bottleneck distance between two rectangle-decomposable modules and
/// an optimal matching.
///
/// The optimum is one of the cost entries (or 0), so the distinct entries are
/// sorted and the smallest one admitting an eps-matching is located by binary
/// search. Feasibility is a perfect-matching test on the graph
///
///   left  side: m bars, then k dummies
///   right side: k bars, then m dummies
///
/// with bar_i - bar_j when pair_cost <= eps, bar_i - its own dummy when
/// left_zero <= eps, a dummy - bar_j when right_zero <= eps, and every
/// dummy - dummy edge.
BottleneckResult bottleneck_distance(const Barcode& left, const Barcode& right);
BottleneckResult bottleneck_distance(const CostMatrix& costs);

/// JSON object {"pairs": [[i, j], ...], "unmatched_left": [...],
/// "unmatched_right": [...]}.
std::string matching_to_json(const Matching& matching, std::size_t left_size, std::size_t right_size);

}  // namespace rectdist
