#pragma once

#include <cstdint>
#include <vector>

#include "ccmotion/error.hpp"

namespace cc {

using color_t = std::uint32_t;

// A complete coloring of V x V with colors 0..rank-1 such that
//   (i)  vertex colors c(v,v) never occur off the diagonal, and
//   (ii) the transpose of a color class is a color class (pairing i -> i*).
// Both are checked at construction; everything downstream assumes them.
class Configuration {
 public:
  // colors is row-major n*n.  Every id < rank must occur.
  Configuration(int n, int rank, std::vector<color_t> colors);

  int n() const { return n_; }
  int rank() const { return r_; }
  color_t color(int u, int v) const {
    return colors_[static_cast<std::size_t>(u) * n_ + v];
  }
  color_t vertex_color(int v) const { return color(v, v); }
  color_t paired(color_t i) const { return pairing_[i]; }
  bool is_diagonal(color_t i) const { return diagonal_[i] != 0; }
  bool is_symmetric_color(color_t i) const { return pairing_[i] == i; }
  const std::vector<color_t>& cells() const { return colors_; }

  int diagonal_rank() const { return diagonal_rank_; }
  bool homogeneous() const { return diagonal_rank_ == 1; }
  // True when every color is self-paired (with homogeneity: association scheme).
  bool all_symmetric() const;

  // Result has color(sigma[u], sigma[v]) = this->color(u, v).
  Configuration permuted_vertices(const std::vector<int>& sigma) const;
  // Result recolors cell values by pi (pi must be a bijection on 0..rank-1).
  Configuration permuted_colors(const std::vector<color_t>& pi) const;

  bool operator==(const Configuration& o) const {
    return n_ == o.n_ && r_ == o.r_ && colors_ == o.colors_;
  }

 private:
  int n_;
  int r_;
  std::vector<color_t> colors_;
  std::vector<color_t> pairing_;
  std::vector<std::uint8_t> diagonal_;
  int diagonal_rank_;
};

// Checks that sigma is a bijection 0..n-1.
void check_permutation(const std::vector<int>& sigma, int n);

}  // namespace cc
