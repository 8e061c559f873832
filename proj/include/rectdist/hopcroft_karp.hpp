#pragma once

#include <cstdint>
#include <vector>

namespace rectdist {

/// Maximum-cardinality matching in a bipartite graph, Hopcroft-Karp,
/// O(E sqrt(V)).
///
/// Left vertices are 0..left_size-1, right vertices 0..right_size-1.
class BipartiteGraph {
 public:
  static constexpr std::uint32_t kUnmatched = UINT32_MAX;

  BipartiteGraph(std::uint32_t left_size, std::uint32_t right_size);

  /// Throws IndexOutOfRange on a vertex outside its side.
  void add_edge(std::uint32_t left, std::uint32_t right);

  std::uint32_t left_size() const noexcept { return static_cast<std::uint32_t>(adjacency_.size()); }
  std::uint32_t right_size() const noexcept { return right_size_; }

  /// Runs the algorithm and returns the matching size. Afterwards
  /// mate_of_left(u) is the partner of u or kUnmatched.
  std::uint32_t maximum_matching();

  std::uint32_t mate_of_left(std::uint32_t left) const { return mate_left_.at(left); }
  std::uint32_t mate_of_right(std::uint32_t right) const { return mate_right_.at(right); }

 private:
  bool layer();
  bool augment(std::uint32_t left);

  std::uint32_t right_size_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::uint32_t> mate_left_;
  std::vector<std::uint32_t> mate_right_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> next_edge_;
};

}  // namespace rectdist
