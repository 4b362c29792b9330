#include "ccmotion/rational.hpp"

#include "ccmotion/error.hpp"

namespace cc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_params: return "bad_params";
    case Errc::not_square: return "not_square";
    case Errc::vertex_edge_color_clash: return "vertex_edge_color_clash";
    case Errc::pairing_undefined: return "pairing_undefined";
    case Errc::unused_color_id: return "unused_color_id";
    case Errc::not_coherent: return "not_coherent";
    case Errc::not_homogeneous: return "not_homogeneous";
    case Errc::same_vertex: return "same_vertex";
    case Errc::degree_too_large: return "degree_too_large";
    case Errc::bad_alpha: return "bad_alpha";
    case Errc::rank_overflow: return "rank_overflow";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::wrong_rank: return "wrong_rank";
    case Errc::not_rank4: return "not_rank4";
    case Errc::not_primitive: return "not_primitive";
    case Errc::not_closed_under_pairing: return "not_closed_under_pairing";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::not_monic: return "not_monic";
    case Errc::geometry_violation: return "geometry_violation";
    case Errc::vertex_not_in_two_lines: return "vertex_not_in_two_lines";
    case Errc::nonnegative_theta: return "nonnegative_theta";
    case Errc::eigenvalue_not_minus2: return "eigenvalue_not_minus2";
    case Errc::not_regular: return "not_regular";
    case Errc::has_triangle: return "has_triangle";
    case Errc::not_distance_regular: return "not_distance_regular";
    case Errc::not_transitive: return "not_transitive";
    case Errc::hypothesis_violated: return "hypothesis_violated";
    case Errc::branch_mismatch: return "branch_mismatch";
    case Errc::no_such_triangle: return "no_such_triangle";
    case Errc::not_triangular: return "not_triangular";
    case Errc::no_outcome: return "no_outcome";
    case Errc::not_line_graph: return "not_line_graph";
    case Errc::parse_error: return "parse_error";
    case Errc::soundness_failure: return "soundness_failure";
  }
  return "unknown";
}

NotCoherentError::NotCoherentError(const CoherenceWitness& w)
    : Error(Errc::not_coherent,
            "pairs (" + std::to_string(w.u1) + "," + std::to_string(w.v1) +
                ") and (" + std::to_string(w.u2) + "," + std::to_string(w.v2) +
                ") share color " + std::to_string(w.t) + " but count " +
                std::to_string(w.count1) + " vs " + std::to_string(w.count2) +
                " walks through colors (" + std::to_string(w.i) + "," +
                std::to_string(w.j) + ")"),
      witness(w) {}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt isqrt_ceil(const BigInt& x) {
  if (x < 0) throw Error(Errc::bad_params, "isqrt_ceil of negative value");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
  if (root * root < x) root += 1;
  return root;
}

BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace cc
