#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cc {

// Failure taxonomy shared across the library.  Every throw carries a code so
// callers (CLI exit codes, tests) can branch without string matching.
enum class Errc {
  bad_params,
  not_square,
  vertex_edge_color_clash,
  pairing_undefined,
  unused_color_id,
  not_coherent,
  not_homogeneous,
  same_vertex,
  degree_too_large,
  bad_alpha,
  rank_overflow,
  cap_exceeded,
  wrong_rank,
  not_rank4,
  not_primitive,
  not_closed_under_pairing,
  degree_mismatch,
  not_monic,
  geometry_violation,
  vertex_not_in_two_lines,
  nonnegative_theta,
  eigenvalue_not_minus2,
  not_regular,
  has_triangle,
  not_distance_regular,
  not_transitive,
  hypothesis_violated,
  branch_mismatch,
  no_such_triangle,
  not_triangular,
  no_outcome,
  not_line_graph,
  parse_error,
  soundness_failure,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

// Two ordered pairs of the same color that disagree on the number of
// w with c(u,w)=i and c(w,v)=j.  Refutes coherence.
struct CoherenceWitness {
  std::uint32_t i = 0, j = 0, t = 0;
  int u1 = 0, v1 = 0;
  long long count1 = 0;
  int u2 = 0, v2 = 0;
  long long count2 = 0;
};

struct NotCoherentError : Error {
  CoherenceWitness witness;
  explicit NotCoherentError(const CoherenceWitness& w);
};

}  // namespace cc
