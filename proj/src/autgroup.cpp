#include "ccmotion/autgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "ccmotion/distinguish.hpp"
#include "ccmotion/error.hpp"
#include "ccmotion/tensor.hpp"
#include "ccmotion/wl.hpp"

namespace cc {
namespace {

using Perm = std::vector<int>;

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a*b)(x) = a(b(x))
Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm b(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) b[a[x]] = static_cast<int>(x);
  return b;
}

int support_size(const Perm& a) {
  int s = 0;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] != static_cast<int>(x)) ++s;
  return s;
}

// 1-dimensional refinement of a vertex coloring against a fixed pair
// coloring: split cells by the multiset of (pair color, partner cell) until
// nothing moves.  Canonical: new ids follow (old id, sorted signature).
std::vector<int> refine_vertex_coloring(const std::vector<std::vector<int>>& pc,
                                        std::vector<int> vc) {
  const int n = static_cast<int>(vc.size());
  const std::int64_t mix = static_cast<std::int64_t>(n) * n + n + 2;
  for (;;) {
    std::vector<std::vector<std::int64_t>> sig(n);
    for (int u = 0; u < n; ++u) {
      sig[u].reserve(n);
      for (int w = 0; w < n; ++w)
        sig[u].push_back(static_cast<std::int64_t>(pc[u][w]) * mix + vc[w]);
      std::sort(sig[u].begin(), sig[u].end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (vc[a] != vc[b]) return vc[a] < vc[b];
      return sig[a] < sig[b];
    });
    std::vector<int> next(n);
    int classes = 0;
    for (int idx = 0; idx < n; ++idx) {
      if (idx > 0) {
        int a = order[idx - 1], b = order[idx];
        if (vc[a] != vc[b] || sig[a] != sig[b]) ++classes;
      }
      next[order[idx]] = classes;
    }
    ++classes;
    int old_classes = 1 + *std::max_element(vc.begin(), vc.end());
    if (classes == old_classes) return vc;
    vc = std::move(next);
  }
}

// State shared by the backtracking searches: the WL-stable pair coloring and
// the individualization ladder chosen along the base.
struct SearchContext {
  int n = 0;
  std::vector<std::vector<int>> pc;       // stable pair colors
  std::vector<int> base;                  // base points b_0, b_1, ...
  std::vector<std::vector<int>> ladder;   // ladder[i]: refined vertex coloring
                                          // with b_0..b_{i-1} individualized
};

SearchContext build_context(const Configuration& stable) {
  SearchContext ctx;
  ctx.n = stable.n();
  ctx.pc.assign(ctx.n, std::vector<int>(ctx.n));
  for (int u = 0; u < ctx.n; ++u)
    for (int v = 0; v < ctx.n; ++v)
      ctx.pc[u][v] = static_cast<int>(stable.color(u, v));

  std::vector<int> vc(ctx.n);
  for (int v = 0; v < ctx.n; ++v) vc[v] = ctx.pc[v][v];
  vc = refine_vertex_coloring(ctx.pc, vc);
  ctx.ladder.push_back(vc);
  for (;;) {
    int classes = 1 + *std::max_element(vc.begin(), vc.end());
    std::vector<int> size(classes, 0);
    for (int v = 0; v < ctx.n; ++v) ++size[vc[v]];
    int target = -1;
    for (int c = 0; c < classes; ++c)
      if (size[c] > 1 && (target < 0 || size[c] > size[target])) target = c;
    if (target < 0) break;
    int b = -1;
    for (int v = 0; v < ctx.n && b < 0; ++v)
      if (vc[v] == target) b = v;
    ctx.base.push_back(b);
    vc[b] = classes;
    vc = refine_vertex_coloring(ctx.pc, vc);
    ctx.ladder.push_back(vc);
  }
  return ctx;
}

// Depth-first extension of a partial color-preserving map.  `order` fixes the
// vertex assignment sequence; `cls` is an automorphism-invariant vertex
// coloring every image must respect.
struct Extender {
  const SearchContext* ctx;
  const std::vector<int>* cls;
  std::vector<int> order;
  std::vector<int> img;
  std::vector<char> used;

  bool extend(int k) {
    const int n = ctx->n;
    if (k == n) return true;
    int u = order[k];
    if (img[u] >= 0) {
      // Pre-pinned (base prefix or the coset-defining image).
      int x = img[u];
      for (int j = 0; j < k; ++j) {
        int v = order[j];
        if (ctx->pc[x][img[v]] != ctx->pc[u][v]) return false;
      }
      return extend(k + 1);
    }
    for (int x = 0; x < n; ++x) {
      if (used[x] || (*cls)[x] != (*cls)[u]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int v = order[j];
        ok = ctx->pc[x][img[v]] == ctx->pc[u][v];
      }
      if (!ok) continue;
      img[u] = x;
      used[x] = 1;
      if (extend(k + 1)) return true;
      img[u] = -1;
      used[x] = 0;
    }
    return false;
  }
};

// One automorphism fixing base[0..level) pointwise and sending base[level]
// to w, or nullopt.
std::optional<Perm> coset_representative(const SearchContext& ctx, int level,
                                         int w) {
  const int n = ctx.n;
  Extender e;
  e.ctx = &ctx;
  e.cls = &ctx.ladder[level];
  e.img.assign(n, -1);
  e.used.assign(n, 0);
  e.order.reserve(n);
  std::vector<char> queued(n, 0);
  for (int j = 0; j < level; ++j) {
    int b = ctx.base[j];
    e.order.push_back(b);
    queued[b] = 1;
    e.img[b] = b;
    e.used[b] = 1;
  }
  int bi = ctx.base[level];
  e.order.push_back(bi);
  queued[bi] = 1;
  e.img[bi] = w;
  e.used[w] = 1;
  if ((*e.cls)[w] != (*e.cls)[bi]) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (!queued[v]) e.order.push_back(v);
  if (!e.extend(0)) return std::nullopt;
  return Perm(e.img.begin(), e.img.end());
}

struct Chain {
  SearchContext ctx;
  // transversal[i]: image of base[i] -> representative, identity included.
  std::vector<std::map<int, Perm>> transversal;

  BigInt order() const {
    BigInt o = 1;
    for (const auto& t : transversal) o *= static_cast<long>(t.size());
    return o;
  }
};

Chain build_chain(const Configuration& stable) {
  Chain ch;
  ch.ctx = build_context(stable);
  const int n = ch.ctx.n;
  for (std::size_t i = 0; i < ch.ctx.base.size(); ++i) {
    std::map<int, Perm> t;
    int bi = ch.ctx.base[i];
    t[bi] = identity_perm(n);
    for (int w = 0; w < n; ++w) {
      if (w == bi) continue;
      if (ch.ctx.ladder[i][w] != ch.ctx.ladder[i][bi]) continue;
      auto rep = coset_representative(ch.ctx, static_cast<int>(i), w);
      if (rep) t[w] = std::move(*rep);
    }
    ch.transversal.push_back(std::move(t));
  }
  return ch;
}

struct MotionScan {
  std::int64_t best;
  std::int64_t count = 0;
};

void enumerate(const Chain& ch, std::size_t level, const Perm& prefix,
               MotionScan& scan) {
  if (level == ch.transversal.size()) {
    ++scan.count;
    int s = support_size(prefix);
    if (s > 0 && s < scan.best) scan.best = s;
    return;
  }
  for (const auto& [w, rep] : ch.transversal[level])
    enumerate(ch, level + 1, compose(prefix, rep), scan);
}

std::int64_t fallback_motion_estimate(const Chain& ch,
                                      const std::vector<Perm>& gens) {
  std::int64_t best = ch.ctx.n;
  auto feed = [&](const Perm& p) {
    int s = support_size(p);
    if (s > 0 && s < best) best = s;
  };
  for (const auto& g : gens) {
    feed(g);
    feed(inverse(g));
  }
  std::size_t cap = 64;
  for (std::size_t i = 0; i < gens.size() && i < cap; ++i)
    for (std::size_t j = 0; j < gens.size() && j < cap; ++j) {
      feed(compose(gens[i], gens[j]));
      feed(compose(gens[i], inverse(gens[j])));
    }
  std::size_t budget = 20000;
  for (const auto& t : ch.transversal)
    for (const auto& [w, r] : t) {
      Perm rinv = inverse(r);
      for (const auto& g : gens) {
        if (budget == 0) return best;
        feed(compose(r, compose(g, rinv)));
        --budget;
      }
    }
  return best;
}

}  // namespace

GroupInfo automorphisms(const Configuration& cfg, int vertex_cap,
                        double enum_cap) {
  if (cfg.n() > vertex_cap)
    throw Error(Errc::cap_exceeded,
                "n = " + std::to_string(cfg.n()) + " exceeds vertex cap " +
                    std::to_string(vertex_cap));
  const int n = cfg.n();
  Configuration stable = wl_stabilize(cfg).stable;
  Chain ch = build_chain(stable);

  GroupInfo info;
  info.order = ch.order();
  for (const auto& t : ch.transversal)
    for (const auto& [w, rep] : t)
      if (support_size(rep) > 0) info.generators.push_back(rep);

  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& g : info.generators)
    for (int v = 0; v < n; ++v) root[find(v)] = find(g[v]);
  int orbits = 0;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) ++orbits;
  info.orbit_count = orbits;

  if (info.order == 1) {
    info.motion = n;  // trivial group sentinel: minimal degree defined as n
    info.exact = true;
    return info;
  }
  if (info.order.get_d() <= enum_cap) {
    MotionScan scan{n + 1, 0};
    enumerate(ch, 0, identity_perm(n), scan);
    if (BigInt(static_cast<long>(scan.count)) != info.order)
      throw Error(Errc::soundness_failure,
                  "transversal enumeration missed group elements");
    info.motion = scan.best;
    info.exact = true;
    return info;
  }
  info.motion = fallback_motion_estimate(ch, info.generators);
  info.exact = false;
  if (stable.homogeneous()) {
    // motion >= Dmin always; if the search met the floor the value is exact.
    auto rep = distinguishing_report(stable, intersection_tensor(stable));
    if (info.motion == rep.dmin) info.exact = true;
  }
  return info;
}

std::int64_t exact_motion(const Configuration& cfg, double enum_cap,
                          int vertex_cap) {
  GroupInfo info = automorphisms(cfg, vertex_cap, enum_cap);
  if (!info.exact)
    throw Error(Errc::cap_exceeded,
                "group order " + info.order.get_str() +
                    " above enumeration cap and no exact fallback");
  return info.motion;
}

Configuration orbital_configuration(
    const std::vector<std::vector<int>>& generators, int n,
    bool require_transitive) {
  if (n < 1) throw Error(Errc::bad_params, "need n >= 1");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n)
      throw Error(Errc::bad_params, "generator length != n");
    std::vector<char> seen(n, 0);
    for (int x : g) {
      if (x < 0 || x >= n || seen[x])
        throw Error(Errc::bad_params, "generator is not a permutation");
      seen[x] = 1;
    }
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * n;
  std::vector<std::size_t> root(pairs);
  std::iota(root.begin(), root.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto idx = [n](int u, int v) {
    return static_cast<std::size_t>(u) * n + v;
  };
  for (const auto& g : generators)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        root[find(idx(u, v))] = find(idx(g[u], g[v]));

  if (require_transitive) {
    std::size_t r0 = find(idx(0, 0));
    for (int v = 1; v < n; ++v)
      if (find(idx(v, v)) != r0)
        throw Error(Errc::not_transitive,
                    "vertex action has more than one orbit");
  }

  std::map<std::size_t, color_t> id_of_root;
  std::vector<color_t> colors(pairs);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      std::size_t r = find(idx(u, v));
      auto [it, fresh] =
          id_of_root.emplace(r, static_cast<color_t>(id_of_root.size()));
      colors[idx(u, v)] = it->second;
    }
  Configuration cfg(n, static_cast<int>(id_of_root.size()), std::move(colors));
  // Pair orbits of a group are always coherent; a witness here means a bug.
  if (auto w = coherence_witness(cfg))
    throw Error(Errc::soundness_failure,
                "orbital configuration failed coherence");
  return cfg;
}

}  // namespace cc
