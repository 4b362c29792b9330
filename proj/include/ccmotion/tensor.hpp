#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ccmotion/config.hpp"
#include "ccmotion/rational.hpp"

namespace cc {

// p(i,j,t) = |{w : c(u,w)=i, c(w,v)=j}| for every (u,v) with c(u,v)=t.
// Exists iff the configuration is coherent.
class IntersectionTensor {
 public:
  // Dense r^3 table; beyond this the sparse coherence check still works but
  // tensor-consuming operations refuse.
  static constexpr int kMaxRank = 200;

  int rank() const { return r_; }
  int n() const { return n_; }
  std::int64_t p(color_t i, color_t j, color_t t) const {
    return p_[(static_cast<std::size_t>(i) * r_ + j) * r_ + t];
  }
  color_t paired(color_t i) const { return pairing_[i]; }
  bool is_diagonal(color_t i) const { return diagonal_[i] != 0; }
  bool is_symmetric_color(color_t i) const { return pairing_[i] == i; }
  bool homogeneous() const { return homogeneous_; }

  // k_i = out-degree of color i; requires homogeneity.
  std::int64_t degree(color_t i) const;

  // Degree of the union of (distinct) colors.
  std::int64_t union_degree(const std::vector<color_t>& colors) const;

  // Common neighbors of u,v in the union graph over symmetric colors I, as a
  // function of the pair color t: sum over a,b in I of p(a,b,t).
  std::int64_t union_common(const std::vector<color_t>& I, color_t t) const;

  // max over nondiagonal t of union_common(I, t); the q(X_I) of the
  // zero-weight spectral bound.
  std::int64_t union_max_common(const std::vector<color_t>& I) const;

  std::vector<color_t> diagonal_colors() const;
  std::vector<color_t> edge_colors() const;

 private:
  friend IntersectionTensor intersection_tensor(const Configuration&);
  int n_ = 0, r_ = 0;
  bool homogeneous_ = false;
  std::vector<std::int64_t> p_;
  std::vector<std::int64_t> k_;  // per color, homogeneous only
  std::vector<color_t> pairing_;
  std::vector<std::uint8_t> diagonal_;
};

// Throws NotCoherentError (with witness) if the counts are not constant per
// color triple, and Error(rank_overflow) above kMaxRank.
IntersectionTensor intersection_tensor(const Configuration& cfg);

// Sparse check with no rank cap: nullopt means coherent.
std::optional<CoherenceWitness> coherence_witness(const Configuration& cfg);

// dist[i][j] = least number of color-i steps from u to v over pairs with
// c(u,v)=j (-1 if unreachable).  Well-defined for homogeneous coherent input.
std::vector<std::vector<int>> color_distance_table(const IntersectionTensor& t);

struct StructuralFlags {
  bool homogeneous = false;
  bool association_scheme = false;  // homogeneous and every color symmetric
  bool primitive = false;           // homogeneous and every constituent connected
  // Per color: diameter of the constituent digraph, -1 if disconnected or
  // diagonal.  scheme_diameter = max over edge colors, -1 if any disconnected.
  std::vector<int> diameter;
  int scheme_diameter = -1;
};

StructuralFlags structural_flags(const Configuration& cfg,
                                 const IntersectionTensor& t);

struct ConstituentStats {
  std::int64_t k = 0;       // degree
  std::int64_t lambda = 0;  // p(i,i,i)
  std::int64_t q = 0;       // max over nondiagonal t of p(i,i,t)
  int diameter = -1;
  bool connected = false;
};

ConstituentStats constituent_stats(const IntersectionTensor& t, color_t i);

// Relabels colors so the diagonal color is 0 and edge colors come in
// ascending degree order (ties by original id).  Homogeneous input only.
// Returns the relabeled configuration and the color map pi (new = pi[old]).
std::pair<Configuration, std::vector<color_t>> order_by_degree(
    const Configuration& cfg);

struct IdentityReport {
  bool partition_ok = false;       // the color classes partition V x V
  bool diagonal_ok = false;        // diagonal colors tile exactly the diagonal
  bool row_sums_ok = false;        // sum_j p(i,j,t) = k_i (homogeneous)
  bool degree_symmetry_ok = false; // p(i,j,s) k_s = p(s,j*,i) k_i
  bool product_ok = false;         // A_i A_j = sum_t p(i,j,t) A_t, checked by
                                   // dense multiplication
  int products_checked = 0;
  bool all() const {
    return partition_ok && diagonal_ok && row_sums_ok && degree_symmetry_ok &&
           product_ok;
  }
};

// Exact verification of the defining matrix identities.  The product identity
// is checked by independent dense integer multiplication for every color pair
// while n^3 r^2 stays under ~2e8, else for a seeded sample of pairs.
IdentityReport verify_identities(const Configuration& cfg,
                                 const IntersectionTensor& t,
                                 std::uint64_t seed = 0);

}  // namespace cc
