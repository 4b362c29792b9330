#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccmotion/config.hpp"

namespace cc {

// Undirected simple graph with bitset adjacency rows.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }
  int degree(int v) const;
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  int words() const { return words_; }

  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  long long edge_count() const;
  int common_neighbor_count(int u, int v) const;

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
// K_{s,s} minus a perfect matching.
SimpleGraph crown_graph(int s);
SimpleGraph petersen_graph();
SimpleGraph heawood_graph();

// Vertices of the result are the edges of g in lexicographic order; the
// optional out-parameter receives that edge order.
SimpleGraph line_graph(const SimpleGraph& g,
                       std::vector<std::pair<int, int>>* edge_names = nullptr);

bool is_regular(const SimpleGraph& g, int* k = nullptr);
bool is_connected(const SimpleGraph& g);
bool triangle_free(const SimpleGraph& g);
bool has_five_cycle(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_complete_bipartite(const SimpleGraph& g);
std::vector<int> bfs_distances(const SimpleGraph& g, int src);  // -1 unreachable
int graph_diameter(const SimpleGraph& g);                       // -1 disconnected

// Colors: 0 on the diagonal, 1 edges, 2 non-edges (2 omitted when complete).
Configuration adjacency_configuration(const SimpleGraph& g);

// The graph of one symmetric color class (or a union of them).
SimpleGraph color_graph(const Configuration& cfg,
                        const std::vector<color_t>& colors);

}  // namespace cc
