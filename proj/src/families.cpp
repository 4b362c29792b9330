#include "ccmotion/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include "ccmotion/error.hpp"
#include "ccmotion/wl.hpp"

namespace cc {
namespace {

constexpr int kMaxVertices = 5000;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; std::int64_t(q) * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

int multiplicative_order(int g, int p) {
  std::int64_t x = g % p;
  int ord = 1;
  while (x != 1) {
    x = x * g % p;
    ++ord;
  }
  return ord;
}

std::int64_t checked_n(BigInt n, const char* what) {
  if (n > kMaxVertices)
    throw Error(Errc::cap_exceeded, std::string(what) + ": too many vertices");
  return n.get_si();
}

}  // namespace

Configuration gen_johnson(int m, int d) {
  if (d < 1 || 2 * d > m) throw Error(Errc::bad_params, "need 1 <= d <= m/2");
  const int n = int(checked_n(binomial(m, d), "gen_johnson"));
  // d-subsets as bitmasks, in lexicographic order of the sorted element
  // tuple; for d = 2 this matches the edge order line_graph() uses, so the
  // color-1 constituent of gen_johnson(s, 2) is triangular_graph(s) verbatim.
  std::vector<std::uint32_t> subsets;
  subsets.reserve(n);
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint32_t mask = 0;
    for (int e : pick) mask |= 1u << e;
    subsets.push_back(mask);
    int i = d - 1;
    while (i >= 0 && pick[i] == m - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<color_t> cells(std::size_t(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      cells[std::size_t(u) * n + v] =
          color_t(d - std::popcount(subsets[u] & subsets[v]));
  return Configuration(n, d + 1, std::move(cells));
}

Configuration gen_hamming(int length, int alphabet) {
  if (length < 1 || alphabet < 2)
    throw Error(Errc::bad_params, "need length >= 1 and alphabet >= 2");
  const int n = int(checked_n(pow_big(alphabet, length), "gen_hamming"));
  auto digit = [&](int word, int pos) {
    for (int i = 0; i < pos; ++i) word /= alphabet;
    return word % alphabet;
  };
  std::vector<color_t> cells(std::size_t(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int dist = 0;
      for (int pos = 0; pos < length; ++pos)
        if (digit(u, pos) != digit(v, pos)) ++dist;
      cells[std::size_t(u) * n + v] = color_t(dist);
    }
  return Configuration(n, length + 1, std::move(cells));
}

Configuration gen_triangular(int s) {
  if (s < 4) throw Error(Errc::bad_params, "triangular scheme needs s >= 4");
  return gen_johnson(s, 2);
}

Configuration gen_lattice(int s) {
  if (s < 2) throw Error(Errc::bad_params, "lattice scheme needs s >= 2");
  const int n = s * s;
  std::vector<color_t> cells(std::size_t(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      color_t c;
      if (u == v)
        c = 0;
      else if (u / s == v / s || u % s == v % s)
        c = 1;
      else
        c = 2;
      cells[std::size_t(u) * n + v] = c;
    }
  return Configuration(n, 3, std::move(cells));
}

Configuration gen_crown(int s) {
  if (s < 3) throw Error(Errc::bad_params, "crown scheme needs s >= 3");
  return drg_to_scheme(crown_graph(s)).first;
}

SimpleGraph triangular_graph(int s) {
  if (s < 4) throw Error(Errc::bad_params, "triangular graph needs s >= 4");
  return line_graph(complete_graph(s));
}

SimpleGraph lattice_graph(int s) {
  if (s < 2) throw Error(Errc::bad_params, "lattice graph needs s >= 2");
  SimpleGraph g(s * s);
  for (int u = 0; u < s * s; ++u)
    for (int v = u + 1; v < s * s; ++v)
      if (u / s == v / s || u % s == v % s) g.add_edge(u, v);
  return g;
}

Configuration paley_configuration(int p) {
  if (!is_prime(p) || p < 5)
    throw Error(Errc::bad_params, "need an odd prime p >= 5");
  std::vector<char> is_square(p, 0);
  for (int x = 1; x < p; ++x) is_square[std::int64_t(x) * x % p] = 1;
  std::vector<color_t> cells(std::size_t(p) * p);
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v) {
      int diff = ((v - u) % p + p) % p;
      cells[std::size_t(u) * p + v] =
          diff == 0 ? 0 : (is_square[diff] ? 1 : 2);
    }
  return Configuration(p, 3, std::move(cells));
}

Configuration cyclotomic_configuration(int p, int e) {
  if (!is_prime(p) || p > kMaxVertices)
    throw Error(Errc::bad_params, "p must be prime (and small)");
  if (e < 1 || (p - 1) % e != 0)
    throw Error(Errc::bad_params, "e must divide p - 1");
  int g = 0;
  for (int cand = 2; cand < p; ++cand)
    if (multiplicative_order(cand, p) == p - 1) {
      g = cand;
      break;
    }
  std::vector<int> dlog(p, -1);
  for (int t = 0; t < p - 1; ++t) dlog[mod_pow(g, t, p)] = t;
  std::vector<color_t> cells(std::size_t(p) * p);
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v) {
      int diff = ((v - u) % p + p) % p;
      cells[std::size_t(u) * p + v] =
          diff == 0 ? 0 : color_t(1 + dlog[diff] % e);
    }
  return Configuration(p, e + 1, std::move(cells));
}

std::pair<Configuration, IntersectionArray> drg_to_scheme(
    const SimpleGraph& g) {
  const int n = g.n();
  if (!is_connected(g))
    throw Error(Errc::not_distance_regular, "graph is disconnected");
  int k0 = 0;
  if (!is_regular(g, &k0))
    throw Error(Errc::not_regular, "graph is not regular");

  std::vector<std::vector<int>> dist(n);
  int diameter = 0;
  for (int u = 0; u < n; ++u) {
    dist[u] = bfs_distances(g, u);
    for (int d : dist[u]) diameter = std::max(diameter, d);
  }

  IntersectionArray ia;
  ia.diameter = diameter;
  ia.b.assign(diameter, -1);
  ia.c.assign(diameter, -1);
  ia.a.assign(diameter + 1, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int i = dist[u][v];
      std::int64_t below = 0, same = 0, above = 0;
      for (int w : g.neighbors(v)) {
        int dw = dist[u][w];
        if (dw == i - 1)
          ++below;
        else if (dw == i)
          ++same;
        else
          ++above;
      }
      auto pin = [&](std::int64_t& slot, std::int64_t val) {
        if (slot == -1)
          slot = val;
        else if (slot != val)
          throw Error(Errc::not_distance_regular,
                      "intersection numbers vary at distance " +
                          std::to_string(i));
      };
      if (i >= 1) pin(ia.c[i - 1], below);
      pin(ia.a[i], same);
      if (i < diameter) pin(ia.b[i], above);
      else if (above != 0)
        throw Error(Errc::not_distance_regular, "neighbor beyond diameter");
    }

  std::vector<color_t> cells(std::size_t(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      cells[std::size_t(u) * n + v] = color_t(dist[u][v]);
  return {Configuration(n, diameter + 1, std::move(cells)), ia};
}

Configuration line_graph_scheme(const SimpleGraph& g) {
  SimpleGraph lg = line_graph(g);
  return wl_stabilize(adjacency_configuration(lg)).stable;
}

BigInt cameron_min_degree(int m, int k, int d, CameronElement e) {
  if (k < 1 || k > m - 1 || d < 1)
    throw Error(Errc::bad_params, "need 1 <= k <= m-1 and d >= 1");
  BigInt moved;
  switch (e) {
    case CameronElement::transposition:
      if (m < 2) throw Error(Errc::bad_params, "transposition needs m >= 2");
      moved = 2 * binomial(m - 2, k - 1);
      break;
    case CameronElement::three_cycle:
      if (m < 3) throw Error(Errc::bad_params, "3-cycle needs m >= 3");
      moved = binomial(m, k) - binomial(m - 3, k) - binomial(m - 3, k - 3);
      break;
  }
  BigInt block = binomial(m, k);
  for (int i = 1; i < d; ++i) moved *= block;
  return moved;
}

BigInt hamming_motion_upper(int length, int alphabet) {
  if (length < 1 || alphabet < 2)
    throw Error(Errc::bad_params, "need length >= 1 and alphabet >= 2");
  return 2 * pow_big(alphabet, length - 1);
}

namespace {

// Shared machinery: find a color whose distance relabeling turns the scheme
// metric, then compare the resulting intersection array with the target.
std::optional<MetricMatch> match_metric(
    const IntersectionTensor& t, int m, int d,
    const std::function<std::int64_t(int)>& want_b,
    const std::function<std::int64_t(int)>& want_c) {
  const int r = t.rank();
  auto table = color_distance_table(t);
  for (color_t i1 : t.edge_colors()) {
    if (t.paired(i1) != i1) continue;
    const auto& row = table[i1];
    // Need exactly one color at each distance 0..d.
    std::vector<int> at_dist(d + 1, -1);
    bool metric = true;
    for (int j = 0; j < r && metric; ++j) {
      if (row[j] < 0 || row[j] > d || at_dist[row[j]] != -1)
        metric = false;
      else
        at_dist[row[j]] = j;
    }
    if (!metric) continue;
    bool ok = true;
    for (int j = 0; j <= d && ok; ++j) {
      color_t sj = color_t(at_dist[j]);
      color_t s1 = color_t(at_dist[1]);
      if (j >= 1 && t.p(s1, at_dist[j - 1], sj) != want_c(j)) ok = false;
      if (j < d && t.p(s1, at_dist[j + 1], sj) != want_b(j)) ok = false;
    }
    if (!ok) continue;
    MetricMatch match;
    match.m = m;
    match.d = d;
    match.relabel.assign(r, 0);
    for (int j = 0; j < r; ++j) match.relabel[j] = color_t(row[j]);
    return match;
  }
  return std::nullopt;
}

}  // namespace

std::optional<MetricMatch> recognize_johnson(const IntersectionTensor& t) {
  if (t.diagonal_colors().size() != 1) return std::nullopt;
  const int d = t.rank() - 1;
  if (d < 1) return std::nullopt;
  const std::int64_t n = t.n();
  int m = -1;
  for (int cand = 2 * d; cand <= 2 * d + n; ++cand) {
    BigInt b = binomial(cand, d);
    if (b == n) {
      m = cand;
      break;
    }
    if (b > n) break;
  }
  if (m < 0) return std::nullopt;
  const int mm = m;
  return match_metric(
      t, m, d,
      [mm, d](int j) { return std::int64_t(d - j) * (mm - d - j); },
      [](int j) { return std::int64_t(j) * j; });
}

std::optional<MetricMatch> recognize_hamming(const IntersectionTensor& t) {
  if (t.diagonal_colors().size() != 1) return std::nullopt;
  const int d = t.rank() - 1;
  if (d < 1) return std::nullopt;
  const std::int64_t n = t.n();
  int m = -1;
  for (int cand = 2; ; ++cand) {
    BigInt p = pow_big(cand, d);
    if (p == n) {
      m = cand;
      break;
    }
    if (p > n) break;
  }
  if (m < 0) return std::nullopt;
  const int mm = m;
  return match_metric(
      t, m, d,
      [mm, d](int j) { return std::int64_t(d - j) * (mm - 1); },
      [](int j) { return std::int64_t(j); });
}

}  // namespace cc
