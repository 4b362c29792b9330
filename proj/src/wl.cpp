#include "ccmotion/wl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

#include "ccmotion/error.hpp"

namespace cc {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t pair_hash(color_t a, color_t b) {
  return splitmix64((std::uint64_t(a) << 32) | b);
}

using Sig = std::vector<std::pair<std::uint64_t, int>>;

// Sorted run-length-encoded multiset of (c(u,w), c(w,v)) over all w.
Sig explicit_sig(const Configuration& cfg, int u, int v) {
  const int n = cfg.n();
  std::vector<std::uint64_t> keys(n);
  for (int w = 0; w < n; ++w)
    keys[w] = (std::uint64_t(cfg.color(u, w)) << 32) | cfg.color(w, v);
  std::sort(keys.begin(), keys.end());
  Sig sig;
  for (int w = 0; w < n;) {
    int w2 = w;
    while (w2 < n && keys[w2] == keys[w]) ++w2;
    sig.emplace_back(keys[w], w2 - w);
    w = w2;
  }
  return sig;
}

}  // namespace

Configuration wl_round(const Configuration& cfg) {
  const int n = cfg.n();
  const std::int64_t np = std::int64_t(n) * n;

  // Multiset hash (sum of per-element hashes) -- order-free and cheap.
  std::vector<std::uint64_t> hash(np);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      std::uint64_t h = 0;
      for (int w = 0; w < n; ++w)
        h += pair_hash(cfg.color(u, w), cfg.color(w, v));
      hash[std::int64_t(u) * n + v] = h;
    }

  std::vector<std::int64_t> idx(np);
  std::iota(idx.begin(), idx.end(), 0);
  const auto& cells = cfg.cells();
  std::sort(idx.begin(), idx.end(), [&](std::int64_t a, std::int64_t b) {
    if (cells[a] != cells[b]) return cells[a] < cells[b];
    return hash[a] < hash[b];
  });

  // Within each (old color, hash) bucket, verify the hash grouping against
  // explicit signatures and split lexicographically on any collision.
  std::vector<color_t> fresh(np);
  color_t next = 0;
  std::int64_t at = 0;
  while (at < np) {
    std::int64_t end = at;
    while (end < np && cells[idx[end]] == cells[idx[at]] &&
           hash[idx[end]] == hash[idx[at]])
      ++end;
    Sig rep = explicit_sig(cfg, int(idx[at] / n), int(idx[at] % n));
    std::map<Sig, std::vector<std::int64_t>> split;
    bool collision = false;
    for (std::int64_t q = at; q < end; ++q) {
      Sig s = explicit_sig(cfg, int(idx[q] / n), int(idx[q] % n));
      if (s != rep) collision = true;
      split[std::move(s)].push_back(idx[q]);
    }
    if (!collision) {
      for (std::int64_t q = at; q < end; ++q) fresh[idx[q]] = next;
      ++next;
    } else {
      for (const auto& [sig, members] : split) {
        for (std::int64_t p : members) fresh[p] = next;
        ++next;
      }
    }
    at = end;
  }
  return Configuration(n, int(next), std::move(fresh));
}

RefinementTrace wl_stabilize(const Configuration& cfg, int max_rounds) {
  RefinementTrace trace{cfg, {cfg.rank()}, 0};
  Configuration cur = cfg;
  for (int round = 0; round < max_rounds; ++round) {
    Configuration fine = wl_round(cur);
    trace.rank_history.push_back(fine.rank());
    if (fine.rank() == cur.rank()) {
      trace.stable = std::move(cur);
      return trace;
    }
    cur = std::move(fine);
    ++trace.rounds;
  }
  throw Error(Errc::cap_exceeded, "refinement did not stabilize within cap");
}

Configuration individualize(const Configuration& cfg,
                            const std::vector<int>& vertices) {
  const int n = cfg.n();
  std::vector<char> taken(n, 0);
  for (int v : vertices) {
    if (v < 0 || v >= n) throw Error(Errc::bad_params, "vertex out of range");
    if (taken[v]) throw Error(Errc::bad_params, "vertex listed twice");
    taken[v] = 1;
  }
  std::vector<color_t> cells = cfg.cells();
  color_t next = color_t(cfg.rank());
  for (int v : vertices) cells[std::int64_t(v) * n + v] = next++;

  // Order-preserving compaction of the ids that survive.
  std::vector<char> used(next, 0);
  for (color_t c : cells) used[c] = 1;
  std::vector<color_t> remap(next, 0);
  color_t dense = 0;
  for (color_t c = 0; c < next; ++c)
    if (used[c]) remap[c] = dense++;
  for (color_t& c : cells) c = remap[c];
  return Configuration(n, int(dense), std::move(cells));
}

bool splits_completely(const Configuration& cfg,
                       const std::vector<int>& vertices) {
  Configuration seeded = individualize(cfg, vertices);
  RefinementTrace trace = wl_stabilize(seeded);
  return std::int64_t(trace.stable.rank()) ==
         std::int64_t(cfg.n()) * cfg.n();
}

std::vector<int> greedy_distinguishing_set(const Configuration& cfg) {
  const int n = cfg.n();
  std::vector<std::pair<int, int>> open;  // pairs u < v not yet covered
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) open.emplace_back(u, v);
  std::vector<int> picked;
  while (!open.empty()) {
    int best = -1;
    std::int64_t best_gain = -1;
    for (int z = 0; z < n; ++z) {
      std::int64_t gain = 0;
      for (auto [u, v] : open)
        if (cfg.color(z, u) != cfg.color(z, v)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = z;
      }
    }
    // z == u always distinguishes (u,v): diagonal colors never appear
    // off-diagonal.  So progress is guaranteed.
    picked.push_back(best);
    std::vector<std::pair<int, int>> rest;
    for (auto [u, v] : open)
      if (cfg.color(best, u) == cfg.color(best, v)) rest.emplace_back(u, v);
    open = std::move(rest);
  }
  return picked;
}

}  // namespace cc
