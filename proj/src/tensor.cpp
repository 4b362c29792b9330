#include "ccmotion/tensor.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

namespace cc {

namespace {

// Per-pair walk counts (c(u,w), c(w,v)) as a sorted sparse vector.
using SparseSig = std::vector<std::pair<std::uint64_t, std::int64_t>>;

SparseSig pair_signature(const Configuration& cfg, int u, int v) {
  int n = cfg.n();
  std::vector<std::uint64_t> keys(n);
  for (int w = 0; w < n; ++w)
    keys[w] = (static_cast<std::uint64_t>(cfg.color(u, w)) << 32) |
              cfg.color(w, v);
  std::sort(keys.begin(), keys.end());
  SparseSig sig;
  for (int a = 0; a < n;) {
    int b = a;
    while (b < n && keys[b] == keys[a]) ++b;
    sig.emplace_back(keys[a], b - a);
    a = b;
  }
  return sig;
}

CoherenceWitness make_witness(const SparseSig& ref, int ru, int rv,
                              const SparseSig& got, int u, int v, color_t t) {
  // First (i,j) where the two signatures disagree.
  CoherenceWitness w;
  w.t = t;
  w.u1 = ru;
  w.v1 = rv;
  w.u2 = u;
  w.v2 = v;
  std::size_t a = 0, b = 0;
  while (a < ref.size() || b < got.size()) {
    std::uint64_t ka = a < ref.size() ? ref[a].first : ~std::uint64_t(0);
    std::uint64_t kb = b < got.size() ? got[b].first : ~std::uint64_t(0);
    if (ka == kb) {
      if (ref[a].second != got[b].second) {
        w.i = static_cast<color_t>(ka >> 32);
        w.j = static_cast<color_t>(ka & 0xffffffffu);
        w.count1 = ref[a].second;
        w.count2 = got[b].second;
        return w;
      }
      ++a;
      ++b;
    } else if (ka < kb) {
      w.i = static_cast<color_t>(ka >> 32);
      w.j = static_cast<color_t>(ka & 0xffffffffu);
      w.count1 = ref[a].second;
      w.count2 = 0;
      return w;
    } else {
      w.i = static_cast<color_t>(kb >> 32);
      w.j = static_cast<color_t>(kb & 0xffffffffu);
      w.count1 = 0;
      w.count2 = got[b].second;
      return w;
    }
  }
  throw Error(Errc::bad_params, "witness requested for equal signatures");
}

}  // namespace

std::optional<CoherenceWitness> coherence_witness(const Configuration& cfg) {
  int n = cfg.n(), r = cfg.rank();
  std::vector<SparseSig> ref(r);
  std::vector<int> ref_u(r, -1), ref_v(r, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      color_t t = cfg.color(u, v);
      SparseSig sig = pair_signature(cfg, u, v);
      if (ref_u[t] < 0) {
        ref[t] = std::move(sig);
        ref_u[t] = u;
        ref_v[t] = v;
      } else if (sig != ref[t]) {
        return make_witness(ref[t], ref_u[t], ref_v[t], sig, u, v, t);
      }
    }
  return std::nullopt;
}

IntersectionTensor intersection_tensor(const Configuration& cfg) {
  int n = cfg.n(), r = cfg.rank();
  if (r > IntersectionTensor::kMaxRank)
    throw Error(Errc::rank_overflow,
                "rank " + std::to_string(r) + " exceeds dense tensor cap " +
                    std::to_string(IntersectionTensor::kMaxRank));

  IntersectionTensor t;
  t.n_ = n;
  t.r_ = r;
  t.p_.assign(static_cast<std::size_t>(r) * r * r, 0);
  t.pairing_.resize(r);
  t.diagonal_.resize(r);
  for (color_t i = 0; i < static_cast<color_t>(r); ++i) {
    t.pairing_[i] = cfg.paired(i);
    t.diagonal_[i] = cfg.is_diagonal(i) ? 1 : 0;
  }

  std::vector<SparseSig> ref(r);
  std::vector<int> ref_u(r, -1), ref_v(r, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      color_t tc = cfg.color(u, v);
      SparseSig sig = pair_signature(cfg, u, v);
      if (ref_u[tc] < 0) {
        for (const auto& [key, cnt] : sig) {
          color_t i = static_cast<color_t>(key >> 32);
          color_t j = static_cast<color_t>(key & 0xffffffffu);
          t.p_[(static_cast<std::size_t>(i) * r + j) * r + tc] = cnt;
        }
        ref[tc] = std::move(sig);
        ref_u[tc] = u;
        ref_v[tc] = v;
      } else if (sig != ref[tc]) {
        throw NotCoherentError(
            make_witness(ref[tc], ref_u[tc], ref_v[tc], sig, u, v, tc));
      }
    }

  t.homogeneous_ = cfg.homogeneous();
  if (t.homogeneous_) {
    t.k_.assign(r, 0);
    for (int v = 0; v < n; ++v) ++t.k_[cfg.color(0, v)];
  }
  return t;
}

std::int64_t IntersectionTensor::degree(color_t i) const {
  if (!homogeneous_)
    throw Error(Errc::not_homogeneous, "degrees need a homogeneous input");
  return k_[i];
}

std::int64_t IntersectionTensor::union_degree(
    const std::vector<color_t>& colors) const {
  std::int64_t k = 0;
  for (color_t i : colors) k += degree(i);
  return k;
}

std::int64_t IntersectionTensor::union_common(const std::vector<color_t>& I,
                                              color_t t) const {
  std::int64_t c = 0;
  for (color_t a : I) {
    if (!is_symmetric_color(a))
      throw Error(Errc::not_closed_under_pairing,
                  "common-neighbor counts need symmetric colors");
    for (color_t b : I) c += p(a, b, t);
  }
  return c;
}

std::int64_t IntersectionTensor::union_max_common(
    const std::vector<color_t>& I) const {
  std::int64_t q = 0;
  for (color_t t = 0; t < static_cast<color_t>(r_); ++t)
    if (!is_diagonal(t)) q = std::max(q, union_common(I, t));
  return q;
}

std::vector<color_t> IntersectionTensor::diagonal_colors() const {
  std::vector<color_t> out;
  for (color_t i = 0; i < static_cast<color_t>(r_); ++i)
    if (diagonal_[i]) out.push_back(i);
  return out;
}

std::vector<color_t> IntersectionTensor::edge_colors() const {
  std::vector<color_t> out;
  for (color_t i = 0; i < static_cast<color_t>(r_); ++i)
    if (!diagonal_[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> color_distance_table(
    const IntersectionTensor& t) {
  int r = t.rank();
  // A color-i walk step extends a (u, x_m, v) chain: from pair color f we can
  // reach pair color f' one step closer iff p(i, f', f) > 0.  BFS from the
  // diagonal colors towards each target color.
  std::vector<std::vector<int>> dist(r, std::vector<int>(r, -1));
  for (color_t i = 0; i < static_cast<color_t>(r); ++i) {
    if (t.is_diagonal(i)) continue;
    std::deque<color_t> queue;
    for (color_t d = 0; d < static_cast<color_t>(r); ++d)
      if (t.is_diagonal(d)) {
        dist[i][d] = 0;
        queue.push_back(d);
      }
    while (!queue.empty()) {
      color_t f = queue.front();
      queue.pop_front();
      // c(u,v)=g and one i-step from u lands on pair color f: p(i, f, g) > 0.
      for (color_t g = 0; g < static_cast<color_t>(r); ++g)
        if (dist[i][g] < 0 && t.p(i, f, g) > 0) {
          dist[i][g] = dist[i][f] + 1;
          queue.push_back(g);
        }
    }
  }
  return dist;
}

StructuralFlags structural_flags(const Configuration& cfg,
                                 const IntersectionTensor& t) {
  StructuralFlags f;
  f.homogeneous = cfg.homogeneous();
  f.association_scheme = f.homogeneous && cfg.all_symmetric();
  f.diameter.assign(t.rank(), -1);
  if (!f.homogeneous) return f;

  auto dist = color_distance_table(t);
  bool all_connected = true;
  int scheme_diam = 0;
  for (color_t i = 0; i < static_cast<color_t>(t.rank()); ++i) {
    if (t.is_diagonal(i)) continue;
    int diam = 0;
    bool connected = true;
    for (color_t j = 0; j < static_cast<color_t>(t.rank()); ++j) {
      if (dist[i][j] < 0) connected = false;
      diam = std::max(diam, dist[i][j]);
    }
    f.diameter[i] = connected ? diam : -1;
    if (!connected) all_connected = false;
    scheme_diam = std::max(scheme_diam, f.diameter[i]);
  }
  f.primitive = all_connected && t.rank() > 1;
  f.scheme_diameter = all_connected ? scheme_diam : -1;
  return f;
}

ConstituentStats constituent_stats(const IntersectionTensor& t, color_t i) {
  if (t.is_diagonal(i))
    throw Error(Errc::bad_params, "constituent stats need an edge color");
  ConstituentStats s;
  s.k = t.degree(i);
  s.lambda = t.p(i, i, i);
  for (color_t tc = 0; tc < static_cast<color_t>(t.rank()); ++tc)
    if (!t.is_diagonal(tc)) s.q = std::max(s.q, t.p(i, i, tc));
  auto dist = color_distance_table(t);
  s.connected = true;
  int diam = 0;
  for (color_t j = 0; j < static_cast<color_t>(t.rank()); ++j) {
    if (dist[i][j] < 0) s.connected = false;
    diam = std::max(diam, dist[i][j]);
  }
  s.diameter = s.connected ? diam : -1;
  return s;
}

std::pair<Configuration, std::vector<color_t>> order_by_degree(
    const Configuration& cfg) {
  if (!cfg.homogeneous())
    throw Error(Errc::not_homogeneous, "degree ordering needs one vertex color");
  int n = cfg.n(), r = cfg.rank();
  std::vector<std::int64_t> k(r, 0);
  for (int v = 0; v < n; ++v) ++k[cfg.color(0, v)];
  // Out-degrees must be constant per color for the order to mean anything.
  for (int u = 1; u < n; ++u) {
    std::vector<std::int64_t> row(r, 0);
    for (int v = 0; v < n; ++v) ++row[cfg.color(u, v)];
    if (row != k)
      throw Error(Errc::not_homogeneous,
                  "color degrees vary between rows (vertex " +
                      std::to_string(u) + ")");
  }

  std::vector<color_t> edge;
  color_t diag = 0;
  for (color_t i = 0; i < static_cast<color_t>(r); ++i)
    if (cfg.is_diagonal(i))
      diag = i;
    else
      edge.push_back(i);
  std::stable_sort(edge.begin(), edge.end(),
                   [&](color_t a, color_t b) { return k[a] < k[b]; });
  std::vector<color_t> pi(r);
  pi[diag] = 0;
  for (std::size_t idx = 0; idx < edge.size(); ++idx)
    pi[edge[idx]] = static_cast<color_t>(idx + 1);
  return {cfg.permuted_colors(pi), pi};
}

IdentityReport verify_identities(const Configuration& cfg,
                                 const IntersectionTensor& t,
                                 std::uint64_t seed) {
  int n = cfg.n(), r = cfg.rank();
  IdentityReport rep;

  // Partition: each cell carries exactly one valid color id; diagonal colors
  // tile the diagonal and never leak off it (enforced at construction, but
  // re-derived here from the raw cells).
  std::vector<std::int64_t> used(r, 0);
  bool diag_ok = true;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      color_t c = cfg.color(u, v);
      ++used[c];
      if (cfg.is_diagonal(c) != (u == v)) diag_ok = false;
    }
  rep.partition_ok = true;
  for (color_t i = 0; i < static_cast<color_t>(r); ++i)
    if (used[i] == 0) rep.partition_ok = false;
  rep.diagonal_ok = diag_ok;

  rep.row_sums_ok = true;
  if (cfg.homogeneous()) {
    for (color_t i = 0; i < static_cast<color_t>(r) && rep.row_sums_ok; ++i)
      for (color_t tc = 0; tc < static_cast<color_t>(r); ++tc) {
        std::int64_t sum = 0;
        for (color_t j = 0; j < static_cast<color_t>(r); ++j)
          sum += t.p(i, j, tc);
        if (sum != t.degree(i)) {
          rep.row_sums_ok = false;
          break;
        }
      }

    rep.degree_symmetry_ok = true;
    for (color_t i = 0; i < static_cast<color_t>(r); ++i)
      for (color_t j = 0; j < static_cast<color_t>(r); ++j)
        for (color_t s = 0; s < static_cast<color_t>(r); ++s)
          if (t.p(i, j, s) * t.degree(s) !=
              t.p(s, t.paired(j), i) * t.degree(i))
            rep.degree_symmetry_ok = false;
  } else {
    rep.degree_symmetry_ok = true;  // degree-form identities are homogeneous-only
  }

  // Product identity by independent dense multiplication.
  auto check_product = [&](color_t i, color_t j) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        std::int64_t cnt = 0;
        for (int w = 0; w < n; ++w)
          if (cfg.color(u, w) == i && cfg.color(w, v) == j) ++cnt;
        if (cnt != t.p(i, j, cfg.color(u, v))) return false;
      }
    return true;
  };
  rep.product_ok = true;
  double full_cost = static_cast<double>(n) * n * n * r * r;
  if (full_cost <= 2e8) {
    for (color_t i = 0; i < static_cast<color_t>(r); ++i)
      for (color_t j = 0; j < static_cast<color_t>(r); ++j) {
        if (!check_product(i, j)) rep.product_ok = false;
        ++rep.products_checked;
      }
  } else {
    std::mt19937_64 rng(seed);
    int samples = std::max(1, static_cast<int>(2e8 / (static_cast<double>(n) * n * n)));
    samples = std::min(samples, r * r);
    for (int s = 0; s < samples; ++s) {
      color_t i = static_cast<color_t>(rng() % r);
      color_t j = static_cast<color_t>(rng() % r);
      if (!check_product(i, j)) rep.product_ok = false;
      ++rep.products_checked;
    }
  }
  return rep;
}

}  // namespace cc
