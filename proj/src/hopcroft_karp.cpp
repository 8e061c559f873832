#include "rectdist/hopcroft_karp.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rectdist/errors.hpp"

namespace rectdist {

namespace {
constexpr std::uint32_t kInfLevel = UINT32_MAX;
}

BipartiteGraph::BipartiteGraph(std::uint32_t left_size, std::uint32_t right_size)
    : right_size_(right_size), adjacency_(left_size) {}

void BipartiteGraph::add_edge(std::uint32_t left, std::uint32_t right) {
  if (left >= left_size() || right >= right_size_) {
    throw IndexOutOfRange("edge (" + std::to_string(left) + ", " + std::to_string(right) + ") out of range");
  }
  adjacency_[left].push_back(right);
}

std::uint32_t BipartiteGraph::maximum_matching() {
  mate_left_.assign(left_size(), kUnmatched);
  mate_right_.assign(right_size_, kUnmatched);
  level_.assign(left_size(), kInfLevel);
  next_edge_.assign(left_size(), 0);

  std::uint32_t size = 0;
  while (layer()) {
    std::fill(next_edge_.begin(), next_edge_.end(), 0);
    for (std::uint32_t u = 0; u < left_size(); ++u) {
      if (mate_left_[u] == kUnmatched && augment(u)) ++size;
    }
  }
  return size;
}

// BFS from every free left vertex over alternating paths. Returns whether some
// free right vertex is reachable, i.e. an augmenting path exists.
bool BipartiteGraph::layer() {
  std::queue<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < left_size(); ++u) {
    if (mate_left_[u] == kUnmatched) {
      level_[u] = 0;
      queue.push(u);
    } else {
      level_[u] = kInfLevel;
    }
  }
  bool found = false;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop();
    for (std::uint32_t v : adjacency_[u]) {
      const std::uint32_t w = mate_right_[v];
      if (w == kUnmatched) {
        found = true;
      } else if (level_[w] == kInfLevel) {
        level_[w] = level_[u] + 1;
        queue.push(w);
      }
    }
  }
  return found;
}

// DFS along the level graph. next_edge_ makes each phase linear in E.
bool BipartiteGraph::augment(std::uint32_t u) {
  auto& adj = adjacency_[u];
  for (auto& i = next_edge_[u]; i < adj.size(); ++i) {
    const std::uint32_t v = adj[i];
    const std::uint32_t w = mate_right_[v];
    if (w == kUnmatched || (level_[w] == level_[u] + 1 && augment(w))) {
      mate_left_[u] = v;
      mate_right_[v] = u;
      ++i;
      return true;
    }
  }
  level_[u] = kInfLevel;
  return false;
}

}  // namespace rectdist
