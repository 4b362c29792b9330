#pragma once

#include <optional>
#include <vector>

#include "ccmotion/config.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/rational.hpp"
#include "ccmotion/tensor.hpp"

namespace cc {

// ---- generators -----------------------------------------------------------

// Vertices: d-subsets of an m-set, color(S,T) = d - |S n T|.  Needs 2d <= m.
Configuration gen_johnson(int m, int d);

// Vertices: words of the given length over an alphabet of the given size,
// color = Hamming distance.
Configuration gen_hamming(int length, int alphabet);

// Rank-3 scheme of the triangular graph T(s) = line graph of K_s, s >= 4.
Configuration gen_triangular(int s);

// Rank-3 scheme of the s x s rook's graph, s >= 2.
Configuration gen_lattice(int s);

// Distance scheme of the crown graph (K_{s,s} minus a perfect matching),
// s >= 3: diameter 3, rank 4.
Configuration gen_crown(int s);

SimpleGraph triangular_graph(int s);
SimpleGraph lattice_graph(int s);

// Quadratic-residue coloring on F_p.  p = 1 mod 4 gives the symmetric
// rank-3 scheme, p = 3 mod 4 the oriented tournament configuration.
Configuration paley_configuration(int p);

// Color x != y by the coset of (y - x) modulo e-th powers in F_p^*.
// Rank e + 1; requires p prime and e | p - 1.
Configuration cyclotomic_configuration(int p, int e);

// ---- distance-regular graphs ---------------------------------------------

struct IntersectionArray {
  int diameter = 0;
  std::vector<std::int64_t> b;  // b_0 .. b_{d-1}
  std::vector<std::int64_t> c;  // c_1 .. c_d
  std::vector<std::int64_t> a;  // a_0 .. a_d
};

// Checks distance-regularity directly (connected + constant a/b/c per
// distance) and returns the distance coloring, which is coherent for a
// distance-regular graph.
std::pair<Configuration, IntersectionArray> drg_to_scheme(const SimpleGraph& g);

// Refinement fixed point of the edge/non-edge coloring of the line graph.
Configuration line_graph_scheme(const SimpleGraph& g);

// ---- minimal-degree formulas ----------------------------------------------

enum class CameronElement { transposition, three_cycle };

// Support size, in the product action on C(m,k)^d tuples, of a permutation
// acting as the given cycle type on the underlying m points of one
// coordinate: transposition moves 2 C(m-2,k-1) k-subsets, a 3-cycle moves
// C(m,k) - C(m-3,k) - C(m-3,k-3).
BigInt cameron_min_degree(int m, int k, int d, CameronElement e);

// Support of an alphabet transposition applied in one coordinate of the
// length-d Hamming scheme: 2 m^(d-1).
BigInt hamming_motion_upper(int length, int alphabet);

// ---- parameter recognizers -------------------------------------------------

struct MetricMatch {
  int m = 0;      // set size (Johnson) or alphabet size (Hamming)
  int d = 0;      // diameter
  std::vector<color_t> relabel;  // relabel[old color] = distance
};

// Matches the intersection array of J(m,d) / H(d,m) after relabeling colors
// by distance from some edge color.  This certifies parameters (the full
// intersection array), not isomorphism: callers needing the graph itself
// must check geometry separately.
std::optional<MetricMatch> recognize_johnson(const IntersectionTensor& t);
std::optional<MetricMatch> recognize_hamming(const IntersectionTensor& t);

}  // namespace cc
