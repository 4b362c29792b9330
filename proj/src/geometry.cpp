#include "ccmotion/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ccmotion/error.hpp"

namespace cc {
namespace {

bool is_clique(const SimpleGraph& g, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.adjacent(c[i], c[j])) return false;
  return true;
}

// Peel non-seed vertices of lowest in-set degree until a clique remains,
// then close to a maximal clique (ascending vertex id, deterministic).
std::vector<int> line_through_edge(const SimpleGraph& g, int u, int v) {
  std::vector<int> cand{u, v};
  for (int w = 0; w < g.n(); ++w)
    if (w != u && w != v && g.adjacent(w, u) && g.adjacent(w, v))
      cand.push_back(w);

  while (!is_clique(g, cand)) {
    int worst = -1;
    std::size_t worst_deg = 0;
    for (int x : cand) {
      if (x == u || x == v) continue;
      std::size_t deg = 0;
      for (int y : cand)
        if (y != x && g.adjacent(x, y)) ++deg;
      if (worst == -1 || deg < worst_deg) {
        worst = x;
        worst_deg = deg;
      }
    }
    cand.erase(std::find(cand.begin(), cand.end(), worst));
  }

  for (int w = 0; w < g.n(); ++w) {
    if (std::find(cand.begin(), cand.end(), w) != cand.end()) continue;
    bool all = true;
    for (int x : cand)
      if (!g.adjacent(w, x)) {
        all = false;
        break;
      }
    if (all) cand.push_back(w);
  }
  std::sort(cand.begin(), cand.end());
  return cand;
}

}  // namespace

MetschParams metsch_params(const SimpleGraph& g, int m) {
  if (m < 1) throw Error(Errc::bad_params, "m must be at least 1");
  MetschParams p;
  p.m = m;
  int k = 0;
  if (!is_regular(g, &k)) throw Error(Errc::not_regular, "graph not regular");
  p.k = k;
  bool first_adj = true;
  std::int64_t mu = 0;
  for (int u = 0; u < g.n(); ++u) {
    auto du = bfs_distances(g, u);
    for (int v = u + 1; v < g.n(); ++v) {
      std::int64_t common = g.common_neighbor_count(u, v);
      if (g.adjacent(u, v)) {
        if (first_adj) {
          p.lambda1 = p.lambda2 = common;
          first_adj = false;
        } else {
          p.lambda1 = std::min(p.lambda1, common);
          p.lambda2 = std::max(p.lambda2, common);
        }
      } else if (du[v] == 2) {
        mu = std::max(mu, common);
      }
    }
  }
  p.mu = std::max<std::int64_t>(mu, 1);
  return p;
}

bool metsch_check(const MetschParams& p) {
  if (p.mu < 1 || p.m < 1)
    throw Error(Errc::bad_params, "need mu >= 1 and m >= 1");
  bool cond3 = 2 * p.lambda1 - p.lambda2 > (2 * p.m - 1) * (p.mu - 1) - 1;
  // Condition 4 as stated has a half-integer term; compare doubled sides.
  bool cond4 = 2 * p.k < 2 * (p.m + 1) * (p.lambda1 + 1) -
                             std::int64_t(p.m) * (p.m + 1) * (p.mu - 1);
  return cond3 && cond4;
}

CliqueGeometry extract_lines(const SimpleGraph& g, const MetschParams& p) {
  if (!metsch_check(p))
    throw Error(Errc::geometry_violation, "criterion inequalities fail");
  return extract_lines_with_floor(
      g, p.m, p.lambda1 + 2 - std::int64_t(p.m - 1) * (p.mu - 1));
}

CliqueGeometry extract_lines_with_floor(const SimpleGraph& g, int m,
                                        std::int64_t size_floor) {
  if (!is_connected(g))
    throw Error(Errc::bad_params, "graph must be connected");

  CliqueGeometry geo;
  geo.m = m;
  geo.line_size_floor = size_floor;
  std::set<std::vector<int>> seen;
  for (auto [u, v] : g.edges()) {
    std::vector<int> line = line_through_edge(g, u, v);
    if (std::int64_t(line.size()) < geo.line_size_floor) continue;
    if (seen.insert(line).second) geo.lines.push_back(line);
  }
  std::sort(geo.lines.begin(), geo.lines.end());

  // Axiom verification: unique edge cover, per-vertex cap, thin pairwise
  // intersections, and each line a clique.
  std::map<std::pair<int, int>, int> edge_cover;
  geo.per_vertex_count.assign(g.n(), 0);
  for (const auto& line : geo.lines) {
    if (!is_clique(g, line))
      throw Error(Errc::geometry_violation, "line is not a clique");
    for (int x : line) ++geo.per_vertex_count[x];
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j)
        ++edge_cover[{line[i], line[j]}];
  }
  for (auto [u, v] : g.edges()) {
    auto it = edge_cover.find({u, v});
    if (it == edge_cover.end())
      throw Error(Errc::geometry_violation, "edge not covered by any line");
    if (it->second > 1)
      throw Error(Errc::geometry_violation, "edge covered by several lines");
  }
  if (static_cast<long long>(edge_cover.size()) != g.edge_count())
    throw Error(Errc::geometry_violation, "line edge not in graph");
  for (int x = 0; x < g.n(); ++x)
    if (geo.per_vertex_count[x] > geo.m)
      throw Error(Errc::geometry_violation, "vertex on too many lines");
  for (std::size_t a = 0; a < geo.lines.size(); ++a)
    for (std::size_t b = a + 1; b < geo.lines.size(); ++b) {
      std::vector<int> both;
      std::set_intersection(geo.lines[a].begin(), geo.lines[a].end(),
                            geo.lines[b].begin(), geo.lines[b].end(),
                            std::back_inserter(both));
      if (both.size() > 1)
        throw Error(Errc::geometry_violation, "lines share two vertices");
    }
  return geo;
}

bool smallest_eigenvalue_floor(const CliqueGeometry& geo, const Spectrum& s) {
  return no_root_below(s.nontrivial_poly, Rational(-geo.m));
}

BigInt clique_mu_bound(const CliqueGeometry& geo, const SimpleGraph& g) {
  BigInt bound = BigInt(geo.m) * geo.m;
  for (int u = 0; u < g.n(); ++u) {
    auto du = bfs_distances(g, u);
    for (int v = u + 1; v < g.n(); ++v)
      if (du[v] == 2 && BigInt(g.common_neighbor_count(u, v)) > bound)
        throw Error(Errc::soundness_failure,
                    "common-neighbor count exceeds m^2");
  }
  return bound;
}

Rational delsarte_clique_size(const BigInt& k, const Rational& theta) {
  if (theta >= 0)
    throw Error(Errc::nonnegative_theta, "theta must be negative");
  if (k < 0) throw Error(Errc::bad_params, "degree must be nonnegative");
  return Rational(1) - Rational(k) / theta;
}

RootGraphResult reconstruct_root_graph(const SimpleGraph& g,
                                       const CliqueGeometry& geo) {
  const int n = g.n();
  for (int x = 0; x < n; ++x)
    if (geo.per_vertex_count[x] != 2)
      throw Error(Errc::vertex_not_in_two_lines,
                  "vertex " + std::to_string(x) + " lies on " +
                      std::to_string(geo.per_vertex_count[x]) + " lines");

  const int ell = int(geo.lines.size());
  RootGraphResult out;
  out.root = SimpleGraph(ell);
  out.vertex_to_line_pair.assign(n, {-1, -1});
  std::vector<std::vector<int>> lines_of(n);
  for (int a = 0; a < ell; ++a)
    for (int x : geo.lines[a]) lines_of[x].push_back(a);
  for (int x = 0; x < n; ++x) {
    out.vertex_to_line_pair[x] = {lines_of[x][0], lines_of[x][1]};
    out.root.add_edge(lines_of[x][0], lines_of[x][1]);
  }

  // The map x -> {line pair} must be a bijection onto E(root) carrying
  // adjacency to edge-intersection.
  std::set<std::pair<int, int>> images(out.vertex_to_line_pair.begin(),
                                       out.vertex_to_line_pair.end());
  if (images.size() != std::size_t(n) || out.root.edge_count() != n)
    throw Error(Errc::geometry_violation, "line pairs do not identify vertices");
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      auto [a, b] = out.vertex_to_line_pair[x];
      auto [c, d] = out.vertex_to_line_pair[y];
      bool meet = a == c || a == d || b == c || b == d;
      if (meet != g.adjacent(x, y))
        throw Error(Errc::geometry_violation,
                    "line intersection pattern disagrees with adjacency");
    }
  return out;
}

std::optional<SrgParams> srg_of_union(const IntersectionTensor& t,
                                      const std::vector<color_t>& set) {
  if (t.diagonal_colors().size() != 1) return std::nullopt;
  SrgParams p;
  p.n = t.n();
  p.k = 0;
  for (color_t i : set) p.k += t.degree(i);
  bool have_lambda = false, have_mu = false;
  for (color_t c : t.edge_colors()) {
    std::int64_t common = t.union_common(set, c);
    bool inside = std::find(set.begin(), set.end(), c) != set.end();
    if (inside) {
      if (have_lambda && p.lambda != common) return std::nullopt;
      p.lambda = common;
      have_lambda = true;
    } else {
      if (have_mu && p.mu != common) return std::nullopt;
      p.mu = common;
      have_mu = true;
    }
  }
  if (!have_lambda || !have_mu) return std::nullopt;  // complete or empty
  return p;
}

SrgMinus2Verdict recognize_srg_minus2(const SrgParams& p) {
  // Smallest root of x^2 - (lambda - mu) x - (k - mu) must be exactly -2.
  if (p.k != 2 * p.lambda - p.mu + 4 || p.lambda - p.mu + 4 < 0)
    throw Error(Errc::eigenvalue_not_minus2,
                "parameters do not force smallest eigenvalue -2");
  SrgMinus2Verdict v{SrgMinus2Verdict::Kind::none, 0};
  if (p.k % 2 == 0) {
    std::int64_t s = p.k / 2 + 2;
    if (p.n == s * (s - 1) / 2 && p.k == 2 * (s - 2) && p.lambda == s - 2 &&
        p.mu == 4) {
      v.kind = SrgMinus2Verdict::Kind::triangular;
      v.s = int(s);
      return v;
    }
    s = p.k / 2 + 1;
    if (p.n == s * s && p.k == 2 * (s - 1) && p.lambda == s - 2 && p.mu == 2) {
      v.kind = SrgMinus2Verdict::Kind::lattice;
      v.s = int(s);
      return v;
    }
  }
  if (p.n <= 28) v.kind = SrgMinus2Verdict::Kind::sporadic;
  return v;
}

std::optional<ClawWitness> claw_search(const Configuration& cfg,
                                       const std::vector<color_t>& I,
                                       const std::vector<color_t>& J, int t) {
  if (I.empty() || J.empty())
    throw Error(Errc::bad_params, "color sets must be nonempty");
  for (color_t c : I)
    for (color_t d : J)
      if (c == d) throw Error(Errc::bad_params, "color sets must be disjoint");
  auto in = [](const std::vector<color_t>& s, color_t c) {
    return std::find(s.begin(), s.end(), c) != s.end();
  };
  for (color_t c : I)
    if (c >= color_t(cfg.rank()) || cfg.is_diagonal(c))
      throw Error(Errc::bad_params, "I must hold edge colors");
  for (color_t c : J)
    if (c >= color_t(cfg.rank()) || cfg.is_diagonal(c))
      throw Error(Errc::bad_params, "J must hold edge colors");
  if (t < 1 || t > 8) throw Error(Errc::bad_params, "claw size out of range");

  const int n = cfg.n();
  for (int x = 0; x < n; ++x) {
    std::vector<int> fan;
    for (int y = 0; y < n; ++y)
      if (y != x && in(I, cfg.color(x, y))) fan.push_back(y);
    if (std::int64_t(fan.size()) < t) continue;
    std::vector<int> pick;
    auto grow = [&](auto&& self, std::size_t from) -> bool {
      if (int(pick.size()) == t) return true;
      for (std::size_t idx = from; idx < fan.size(); ++idx) {
        int y = fan[idx];
        bool ok = true;
        for (int z : pick)
          if (!in(J, cfg.color(z, y)) || !in(J, cfg.color(y, z))) {
            ok = false;
            break;
          }
        if (!ok) continue;
        pick.push_back(y);
        if (self(self, idx + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (grow(grow, 0)) return ClawWitness{x, pick};
  }
  return std::nullopt;
}

}  // namespace cc
