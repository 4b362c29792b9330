#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccmotion/config.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/rational.hpp"
#include "ccmotion/spectral.hpp"
#include "ccmotion/tensor.hpp"

namespace cc {

// Common-neighbor statistics feeding the clique-geometry criterion.
struct MetschParams {
  std::int64_t lambda1 = 0;  // min common neighbors over adjacent pairs
  std::int64_t lambda2 = 0;  // max common neighbors over adjacent pairs
  std::int64_t mu = 1;       // max common neighbors at distance 2 (1 if none)
  std::int64_t k = 0;        // degree (graph must be regular)
  int m = 1;
};

MetschParams metsch_params(const SimpleGraph& g, int m);

// True iff 2 l1 - l2 > (2m-1)(mu-1) - 1 and k < (m+1)(l1+1) - m(m+1)(mu-1)/2.
bool metsch_check(const MetschParams& p);

// A partition of the edge set into large cliques ("lines").
struct CliqueGeometry {
  int m = 1;
  std::vector<std::vector<int>> lines;   // each sorted ascending
  std::vector<int> per_vertex_count;     // lines through each vertex
  std::int64_t line_size_floor = 0;      // l1 + 2 - (m-1)(mu-1)
};

// Grows, from every edge, the clique spanned by the edge inside its common
// neighborhood (peeling low-degree vertices, then closing to a maximal
// clique), keeps those meeting the size floor, and verifies the geometry
// axioms: every edge in exactly one line, at most m lines per vertex,
// pairwise line intersections of size at most 1.
CliqueGeometry extract_lines(const SimpleGraph& g, const MetschParams& p);

// Same extraction and axiom verification, gated by an explicit size floor
// instead of the common-neighbor criterion.  Useful when the geometry is
// known to exist (e.g. the star decomposition of a triangular graph) but the
// criterion inequalities are out of range.
CliqueGeometry extract_lines_with_floor(const SimpleGraph& g, int m,
                                        std::int64_t size_floor);

// Exact check that no eigenvalue of the analyzed constituent lies below -m.
bool smallest_eigenvalue_floor(const CliqueGeometry& geo, const Spectrum& s);

// Returns m^2 and asserts that no vertex pair at distance 2 has more than
// m^2 common neighbors.
BigInt clique_mu_bound(const CliqueGeometry& geo, const SimpleGraph& g);

// 1 - k/theta for the Delsarte clique-size bound; theta must be negative.
Rational delsarte_clique_size(const BigInt& k, const Rational& theta);

// The root graph Y with L(Y) isomorphic to the input, built from a geometry
// in which every vertex lies on exactly two lines.  vertex_to_line_pair[x]
// is the Y-edge (pair of line ids) representing x; the map is verified to
// be a graph isomorphism L(Y) -> X.
struct RootGraphResult {
  SimpleGraph root{1};
  std::vector<std::pair<int, int>> vertex_to_line_pair;
};
RootGraphResult reconstruct_root_graph(const SimpleGraph& g,
                                       const CliqueGeometry& geo);

// Strongly regular parameter quadruple.
struct SrgParams {
  std::int64_t n = 0, k = 0, lambda = 0, mu = 0;
};

// Parameters of the union constituent over a pairing-closed edge-color set,
// when it is strongly regular (constant common-neighbor counts inside and
// outside the set).
std::optional<SrgParams> srg_of_union(const IntersectionTensor& t,
                                      const std::vector<color_t>& set);

// Classification of SRGs with smallest eigenvalue -2 by parameters.
struct SrgMinus2Verdict {
  enum class Kind { triangular, lattice, sporadic, none } kind;
  int s = 0;  // T(s) / L2(s) parameter when matched
};

// Requires the quadruple to force smallest eigenvalue exactly -2
// (k = 2 lambda - mu + 4 with lambda - mu + 4 >= 0), then matches
// T(s) = (s(s-1)/2, 2(s-2), s-2, 4), then L2(s) = (s^2, 2(s-1), s-2, 2),
// then the sporadic n <= 28 bucket.
SrgMinus2Verdict recognize_srg_minus2(const SrgParams& p);

// An x with t out-neighbors y_1..y_t in colors I, pairwise colored in J.
struct ClawWitness {
  int center = 0;
  std::vector<int> leaves;
};
std::optional<ClawWitness> claw_search(const Configuration& cfg,
                                       const std::vector<color_t>& I,
                                       const std::vector<color_t>& J, int t);

}  // namespace cc
