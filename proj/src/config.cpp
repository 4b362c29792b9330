#include "ccmotion/config.hpp"

#include <algorithm>
#include <string>

namespace cc {

namespace {
constexpr color_t kUnset = ~color_t(0);
}

Configuration::Configuration(int n, int rank, std::vector<color_t> colors)
    : n_(n), r_(rank), colors_(std::move(colors)) {
  if (n_ < 1) throw Error(Errc::bad_params, "n must be >= 1");
  if (r_ < 1) throw Error(Errc::bad_params, "rank must be >= 1");
  if (colors_.size() != static_cast<std::size_t>(n_) * n_)
    throw Error(Errc::not_square, "expected " + std::to_string(n_) + "x" +
                                      std::to_string(n_) + " cells, got " +
                                      std::to_string(colors_.size()));

  std::vector<std::uint8_t> on_diag(r_, 0), off_diag(r_, 0);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      color_t c = color(u, v);
      if (c >= static_cast<color_t>(r_))
        throw Error(Errc::bad_params, "cell (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") has color " +
                                          std::to_string(c) + " >= rank");
      (u == v ? on_diag : off_diag)[c] = 1;
    }
  diagonal_.assign(r_, 0);
  diagonal_rank_ = 0;
  for (color_t i = 0; i < static_cast<color_t>(r_); ++i) {
    if (!on_diag[i] && !off_diag[i])
      throw Error(Errc::unused_color_id, "color " + std::to_string(i));
    if (on_diag[i] && off_diag[i])
      throw Error(Errc::vertex_edge_color_clash,
                  "color " + std::to_string(i) +
                      " occurs both on and off the diagonal");
    diagonal_[i] = on_diag[i];
    diagonal_rank_ += on_diag[i];
  }

  pairing_.assign(r_, kUnset);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      color_t c = color(u, v), ct = color(v, u);
      if (pairing_[c] == kUnset) {
        pairing_[c] = ct;
      } else if (pairing_[c] != ct) {
        throw Error(Errc::pairing_undefined,
                    "color " + std::to_string(c) + " transposes to both " +
                        std::to_string(pairing_[c]) + " and " +
                        std::to_string(ct) + " (witness cell (" +
                        std::to_string(u) + "," + std::to_string(v) + "))");
      }
    }
  // Transpose consistency in both directions makes the pairing an involution.
  for (color_t i = 0; i < static_cast<color_t>(r_); ++i)
    if (pairing_[pairing_[i]] != i)
      throw Error(Errc::pairing_undefined,
                  "pairing of color " + std::to_string(i) + " not involutive");
}

bool Configuration::all_symmetric() const {
  for (color_t i = 0; i < static_cast<color_t>(r_); ++i)
    if (pairing_[i] != i) return false;
  return true;
}

void check_permutation(const std::vector<int>& sigma, int n) {
  if (sigma.size() != static_cast<std::size_t>(n))
    throw Error(Errc::bad_params, "permutation length mismatch");
  std::vector<std::uint8_t> seen(n, 0);
  for (int x : sigma) {
    if (x < 0 || x >= n || seen[x])
      throw Error(Errc::bad_params, "not a permutation");
    seen[x] = 1;
  }
}

Configuration Configuration::permuted_vertices(
    const std::vector<int>& sigma) const {
  check_permutation(sigma, n_);
  std::vector<color_t> out(colors_.size());
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      out[static_cast<std::size_t>(sigma[u]) * n_ + sigma[v]] = color(u, v);
  return Configuration(n_, r_, std::move(out));
}

Configuration Configuration::permuted_colors(
    const std::vector<color_t>& pi) const {
  if (pi.size() != static_cast<std::size_t>(r_))
    throw Error(Errc::bad_params, "color permutation length mismatch");
  std::vector<std::uint8_t> seen(r_, 0);
  for (color_t x : pi) {
    if (x >= static_cast<color_t>(r_) || seen[x])
      throw Error(Errc::bad_params, "not a color permutation");
    seen[x] = 1;
  }
  std::vector<color_t> out(colors_.size());
  for (std::size_t idx = 0; idx < colors_.size(); ++idx)
    out[idx] = pi[colors_[idx]];
  return Configuration(n_, r_, std::move(out));
}

}  // namespace cc
