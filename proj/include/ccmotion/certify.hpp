#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccmotion/config.hpp"
#include "ccmotion/rational.hpp"
#include "ccmotion/tensor.hpp"

namespace cc {

// The three structural classes of a primitive rank-4 configuration.
enum class Branch { oriented_colors, drg_diameter3, assoc_diameter2 };
const char* branch_name(Branch b);

// One audited deduction: named rule, the fact it leans on, the exact values
// of every checked hypothesis, and the conclusion.  Re-checkable from the
// tensor alone.
struct Step {
  std::string rule;
  std::string anchor;
  std::vector<std::pair<std::string, Rational>> hypotheses;
  std::string conclusion;
  bool holds = true;
  std::optional<Rational> bound;  // motion lower bound this step certifies
};

struct Verdict {
  enum class Kind { motion_at_least, exceptional, inconclusive };
  enum class Family { none, johnson, hamming, small_n, srg_minus2 };
  Kind kind = Kind::inconclusive;
  Family family = Family::none;
  Rational bound;  // motion_at_least only
  std::string reason;
};

struct Certificate {
  std::string input_hash;  // FNV-1a over (n, rank, color matrix)
  std::optional<Branch> branch;
  std::vector<Step> steps;
  Verdict verdict;
};

std::string input_hash(const Configuration& cfg);

// OrientedColors if some edge color is not self-paired; else DRGDiameter3 if
// a constituent has diameter 3; else AssocDiameter2.
// Throws Error(not_rank4) / Error(not_primitive).
Branch classify_rank4(const Configuration& cfg, const IntersectionTensor& t);

// Oriented pair {i, i*} plus one undirected color t.  Verifies X_t is
// strongly regular, the reversal identities, and the in/out-overlap floor
// p(i,i,i) + p(i*,i*,i) >= (2 k_i - k_t - 1)/3; then cases on the parameters
// of X_t: T(s)/L2(s) gives the distance-halved bound n/18 (with the exact
// distinguishing numbers re-verified), complement-of-T(s) routes through the
// clique distinguishing lemma, complement-of-L2(s) is recorded as an excluded
// arrangement, and any other strongly regular X_t invokes the n/8 motion
// floor for non-exceptional strongly regular graphs (n >= 29).  n <= 100 is
// recorded as too small for the case analysis.
// Throws Error(branch_mismatch) when the color structure is not {i, i*, t}.
std::vector<Step> oriented_branch(const Configuration& cfg,
                                  const IntersectionTensor& t);

// Rank-4 association scheme, diameter 2, degrees ordered: if k2 >= gamma*k3,
// every pair is distinguished by >= gamma*n/6 vertices, so motion is too.
// Returns nullopt when the degree hypothesis fails.  The conclusion is
// re-verified against the exact distinguishing numbers.
std::optional<Step> lemma_k2_large(const IntersectionTensor& t,
                                   const Rational& gamma);

// Under max(k1,k2) <= eps*k3/2 (precondition; Error(hypothesis_violated)
// otherwise) the five parameter inequalities
//   p(1,2,3) <= eps k1,  p(1,1,3) <= eps k1,  p(2,2,3) <= eps k2,
//   p(3,3,1) >= (1-eps) k3,  p(3,3,2) >= (1-eps) k3
// are theorems; each is asserted and returned as a sub-step.
std::vector<Step> param_inequalities(const IntersectionTensor& t,
                                     const Rational& eps);

struct InequalityCheck {
  bool holds = false;
  Rational slack;  // RHS - LHS
  Step step;
};

// p(i,j,s) + p(j,l,r) <= k_j + p(i,l,tt), valid whenever a triangle with
// side colors (s, r, tt) exists: c(u,v)=s, c(v,w)=r, c(u,w)=tt, witnessed by
// p(tt, r, s) > 0.  Throws Error(no_such_triangle) otherwise.
InequalityCheck triangle_inequality(const IntersectionTensor& t, color_t i,
                                    color_t j, color_t l, color_t s, color_t r,
                                    color_t tt);

// Specializations for ordered rank-4 diameter-2 schemes with
// max(k1,k2) <= eps*k3/2 (each re-checks its own triangle witness):
//   p(i,j,s) <= p(i,3,tt) + eps k_j        (triangle (s,3,tt) required)
InequalityCheck corollary_shift_dominant(const IntersectionTensor& t,
                                         const Rational& eps, color_t i,
                                         color_t j, color_t s, color_t tt);
//   p(i,j,s) <= p(i,3,s) + eps k_j          for i,j,s in {1,2}
InequalityCheck corollary_diam2_shift(const IntersectionTensor& t,
                                      const Rational& eps, color_t i,
                                      color_t j, color_t s);
//   2 p(i,j,s) <= k_j + eps k_i             for i,j,s in {1,2}
InequalityCheck corollary_double_count(const IntersectionTensor& t,
                                       const Rational& eps, color_t i,
                                       color_t j, color_t s);

// The five-way disjunction for ordered rank-4 diameter-2 schemes with the
// pinned eps = 1e-16: (1) Dmin >= eps n/12; (2) q + xi <= (1-eps) k on X1 or
// X2; (3) X1 is SRG(-2) or a line graph of a connected regular triangle-free
// graph; (4) same for X2, plus k2 <= (101/100) k1; (5) n >= 12, X12 SRG(-2)
// and k2 <= (101/100) k1.  All holding outcomes are returned; none holding
// throws Error(no_outcome).
enum class Diam2Outcome {
  distinguished,
  spectral_gap_x1,
  spectral_gap_x2,
  x1_line_or_srg,
  x2_line_or_srg,
  x12_srg
};
const char* diam2_outcome_name(Diam2Outcome o);

struct Diam2Result {
  std::vector<Diam2Outcome> outcomes;
  std::vector<Step> steps;
};
Diam2Result theorem_diam2(const Configuration& cfg,
                          const IntersectionTensor& t);

// X_I must be the triangular graph T(s) (parameter + clique-geometry check;
// Error(not_triangular) otherwise).  Computes, over every line C and pair
// x != y in C, the fraction of z in C \ {x,y} with c(z,x) != c(z,y).  If the
// minimum fraction reaches alpha (0 < alpha < 1/2 required), motion >=
// alpha n/2 and a splitting set of O(log n) vertices exists.
struct SunWilmesResult {
  bool holds = false;
  Rational alpha_true;
  int witness_line = -1, witness_x = -1, witness_y = -1;
  Rational splitting_set_bound;  // ceil((4/alpha) ln n + 2), informational
  std::vector<Step> steps;
};
SunWilmesResult sun_wilmes_check(const Configuration& cfg,
                                 const IntersectionTensor& t,
                                 const std::vector<color_t>& I,
                                 const Rational& alpha);

// Hypothesis predicates and direct conclusion checks for the three
// strongly-regular-constituent theorems (thresholds eps < 1/100, 1e-11,
// 1e-26 evaluated exactly; at desk scale they are recorded, not triggered).
std::vector<Step> srg_branch_checks(const Configuration& cfg,
                                    const IntersectionTensor& t);

// Standalone predicate: under k2 <= eps*k3/2 (0 < eps <= 1/100) and
// p(2,2,2) >= (1-delta)/2 k2, k2/8 <= p(2,2,1) <= k2/3 (0 < delta <= 1/100),
// asserts k2 <= 20 k1.  Throws Error(hypothesis_violated) naming the failed
// hypothesis.
Step lemma_k2_le_20k1(const IntersectionTensor& t, const Rational& eps,
                      const Rational& delta);

// Standalone predicate: under n >= 29, k2 <= eps*k3/2 (eps < 1/10) and a
// clique geometry on X12 with at most m lines per vertex, asserts
// p(2,3,1) <= (m^2-2)/2 k1 and k2 <= 3/(2-4 eps) (m^2-2) k1; with the
// X1-SRG(-2) flag, the stronger (m^2-4)/8 and 3/(8(1-2 eps)) (m^2-4) forms.
Step lemma_geometry_degree_ratio(const IntersectionTensor& t,
                                 const Rational& eps, int m,
                                 bool x1_srg_minus2);

// Coefficient of k1 in the two p(2,3,1) conclusions above.
Rational geometry_ratio_coefficient(int m, bool x1_srg_minus2);

// The line-graph case: the listed constituent must be L(Y) for a connected
// k-regular triangle-free Y with k >= 3, n >= 5, and must not be strongly
// regular.  Reconstructs Y through the m=2 clique geometry, re-verifies the
// base-graph hypotheses and the degree floor k >= n/8, counts the base
// distinguishing number directly (>= n/8), and certifies motion >= n_L/16.
// Bipartite bases short-circuit: no 5-cycle forces a complete bipartite
// base, whose line graph is strongly regular, so the case cannot apply.
// Throws Error(not_line_graph) / Error(has_triangle) on structural misuse.
std::vector<Step> line_graph_branch(const Configuration& cfg,
                                    const IntersectionTensor& t,
                                    color_t constituent);

// Full pipeline: Johnson/Hamming/SRG(-2)-family recognition, branch
// classification and branch steps for primitive rank-4 inputs, then the
// generic fallbacks (distinguishing floor, zero-weight spectral bound per
// constituent and union, bounded-degree floor).  Never throws except for
// internal soundness failures; structural errors become Inconclusive.
Certificate certify(const Configuration& cfg);

// Canonical JSON rendering (sorted keys, exact rationals); used for replay.
std::string certificate_json(const Certificate& c);

// Re-runs the pipeline and compares the rendered certificates byte-for-byte.
bool replay_matches(const Configuration& cfg, const Certificate& stored);

}  // namespace cc
