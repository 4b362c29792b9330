#include "ccmotion/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace cc {

SimpleGraph::SimpleGraph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw Error(Errc::bad_params, "graph needs n >= 1");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw Error(Errc::bad_params, "bad edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

long long SimpleGraph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

int SimpleGraph::common_neighbor_count(int u, int v) const {
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(row(u)[w] & row(v)[w]);
  return c;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::bad_params, "cycle needs n >= 3");
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

SimpleGraph crown_graph(int s) {
  if (s < 3) throw Error(Errc::bad_params, "crown needs s >= 3");
  SimpleGraph g(2 * s);
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < s; ++v)
      if (u != v) g.add_edge(u, s + v);
  return g;
}

SimpleGraph petersen_graph() {
  // Kneser graph on 2-subsets of a 5-set: adjacent iff disjoint.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  SimpleGraph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

SimpleGraph heawood_graph() {
  // Point-line incidence of the seven-point projective plane:
  // lines {i, i+1, i+3} mod 7.
  SimpleGraph g(14);
  for (int i = 0; i < 7; ++i) {
    g.add_edge(i, 7 + i);
    g.add_edge((i + 1) % 7, 7 + i);
    g.add_edge((i + 3) % 7, 7 + i);
  }
  return g;
}

SimpleGraph line_graph(const SimpleGraph& g,
                       std::vector<std::pair<int, int>>* edge_names) {
  auto e = g.edges();
  if (e.empty()) throw Error(Errc::bad_params, "line graph of an empty graph");
  SimpleGraph lg(static_cast<int>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto [a, b] = e[i];
      auto [c, d] = e[j];
      if (a == c || a == d || b == c || b == d)
        lg.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  if (edge_names) *edge_names = std::move(e);
  return lg;
}

bool is_regular(const SimpleGraph& g, int* k) {
  int d0 = g.degree(0);
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) != d0) return false;
  if (k) *k = d0;
  return true;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v = 0; v < g.n(); ++v)
      if (g.adjacent(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

bool is_connected(const SimpleGraph& g) {
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

int graph_diameter(const SimpleGraph& g) {
  int diam = 0;
  for (int v = 0; v < g.n(); ++v) {
    auto d = bfs_distances(g, v);
    for (int x : d) {
      if (x < 0) return -1;
      diam = std::max(diam, x);
    }
  }
  return diam;
}

bool triangle_free(const SimpleGraph& g) {
  for (auto [u, v] : g.edges())
    if (g.common_neighbor_count(u, v) > 0) return false;
  return true;
}

bool has_five_cycle(const SimpleGraph& g) {
  int n = g.n();
  for (auto [u, v] : g.edges())
    for (int w = 0; w < n; ++w) {
      if (!g.adjacent(v, w) || w == u) continue;
      for (int x = 0; x < n; ++x) {
        if (!g.adjacent(w, x) || x == u || x == v) continue;
        for (int y = 0; y < n; ++y)
          if (g.adjacent(x, y) && g.adjacent(y, u) && y != u && y != v &&
              y != w && y != x)
            return true;
      }
    }
  return false;
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < g.n(); ++v)
        if (g.adjacent(u, v)) {
          if (side[v] < 0) {
            side[v] = 1 - side[u];
            q.push_back(v);
          } else if (side[v] == side[u]) {
            return false;
          }
        }
    }
  }
  return true;
}

bool is_complete_bipartite(const SimpleGraph& g) {
  if (!is_connected(g) || !is_bipartite(g)) return false;
  std::vector<int> side(g.n(), -1);
  side[0] = 0;
  std::deque<int> q{0};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v = 0; v < g.n(); ++v)
      if (g.adjacent(u, v) && side[v] < 0) {
        side[v] = 1 - side[u];
        q.push_back(v);
      }
  }
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if ((side[u] != side[v]) != g.adjacent(u, v)) return false;
  return true;
}

Configuration adjacency_configuration(const SimpleGraph& g) {
  int n = g.n();
  bool any_non = false;
  for (int u = 0; u < n && !any_non; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) {
        any_non = true;
        break;
      }
  bool any_edge = g.edge_count() > 0;
  std::vector<color_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v)
        cells[static_cast<std::size_t>(u) * n + v] = 0;
      else if (g.adjacent(u, v))
        cells[static_cast<std::size_t>(u) * n + v] = 1;
      else
        cells[static_cast<std::size_t>(u) * n + v] = any_edge ? 2 : 1;
    }
  int rank = 1 + (any_edge ? 1 : 0) + (any_non && any_edge ? 1 : 0);
  if (n == 1) rank = 1;
  return Configuration(n, rank, std::move(cells));
}

SimpleGraph color_graph(const Configuration& cfg,
                        const std::vector<color_t>& colors) {
  SimpleGraph g(cfg.n());
  std::vector<std::uint8_t> pick(cfg.rank(), 0);
  for (color_t c : colors) {
    if (c >= static_cast<color_t>(cfg.rank()) || cfg.is_diagonal(c))
      throw Error(Errc::bad_params, "color union needs edge colors");
    pick[c] = 1;
  }
  // The union must be symmetric as a relation.
  for (color_t c : colors)
    if (!pick[cfg.paired(c)])
      throw Error(Errc::not_closed_under_pairing,
                  "color " + std::to_string(c) + " without its transpose");
  for (int u = 0; u < cfg.n(); ++u)
    for (int v = u + 1; v < cfg.n(); ++v)
      if (pick[cfg.color(u, v)]) g.add_edge(u, v);
  return g;
}

}  // namespace cc
