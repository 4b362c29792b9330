#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccmotion/autgroup.hpp"
#include "ccmotion/distinguish.hpp"
#include "ccmotion/families.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/wl.hpp"

#include "helpers.hpp"

using namespace cc;

namespace {

void check_generators(const Configuration& cfg, const GroupInfo& g) {
  for (const auto& perm : g.generators) {
    CHECK_NOTHROW(check_permutation(perm, cfg.n()));
    bool identity = true;
    bool preserves = true;
    for (std::size_t v = 0; v < perm.size(); ++v)
      if (perm[v] != static_cast<int>(v)) identity = false;
    for (int u = 0; u < cfg.n() && preserves; ++u)
      for (int v = 0; v < cfg.n(); ++v)
        if (cfg.color(perm[u], perm[v]) != cfg.color(u, v)) {
          preserves = false;
          break;
        }
    CHECK_FALSE(identity);
    CHECK(preserves);
  }
}

}  // namespace

TEST_CASE("full-scan cross-validation on small instances") {
  struct Row {
    const char* name;
    Configuration cfg;
    std::int64_t order;
  };
  const Row rows[] = {
      {"c4-rotation-orbital", cctest::c4_rotation_orbital(), 4},
      {"hamming(2,2)", gen_hamming(2, 2), 8},
      {"crown(3)", gen_crown(3), 12},
      {"paley(7)", paley_configuration(7), 21},
      {"petersen", drg_to_scheme(petersen_graph()).first, 120},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    cctest::BruteGroup ref = cctest::brute_group(row.cfg);
    CHECK(ref.order == BigInt(row.order));
    GroupInfo g = automorphisms(row.cfg);
    CHECK(g.order == ref.order);
    CHECK(g.motion == ref.motion);
    CHECK(g.exact);
    check_generators(row.cfg, g);
  }
}

TEST_CASE("pinned orders and motion") {
  // Orbital configuration of the rotation group of a 4-cycle: only the
  // rotations survive, and every non-identity rotation is fixed-point-free.
  GroupInfo c4 = automorphisms(cctest::c4_rotation_orbital());
  CHECK(c4.order == BigInt(4));
  CHECK(c4.motion == 4);
  CHECK(c4.orbit_count == 1);

  // 4-cycle distance scheme: dihedral of order 8; a reflection through two
  // opposite vertices has support 2.
  GroupInfo h22 = automorphisms(gen_hamming(2, 2));
  CHECK(h22.order == BigInt(8));
  CHECK(h22.motion == 2);

  // 2-subset scheme on 5 points: S_5 acting on pairs, a transposition
  // moves the 6 pairs meeting {a,b} in one point.
  GroupInfo j52 = automorphisms(gen_johnson(5, 2));
  CHECK(j52.order == BigInt(120));
  CHECK(j52.motion == 6);
  CHECK(j52.orbit_count == 1);

  // Binary cube scheme: 2^3 3! = 48; swapping two coordinates fixes the
  // four words agreeing there.
  GroupInfo h32 = automorphisms(gen_hamming(3, 2));
  CHECK(h32.order == BigInt(48));
  CHECK(h32.motion == 4);

  // Ternary square: (3!)^2 2 = 72 wreath elements; a row transposition
  // moves six cells.
  GroupInfo h23 = automorphisms(gen_hamming(2, 3));
  CHECK(h23.order == BigInt(72));
  CHECK(h23.motion == 6);
  GroupInfo l23 = automorphisms(gen_lattice(3));
  CHECK(l23.order == BigInt(72));
  CHECK(l23.motion == 6);

  // Paley(13): x -> ax + b with a a nonzero square; x -> ax fixes 0 only.
  GroupInfo p13 = automorphisms(paley_configuration(13));
  CHECK(p13.order == BigInt(78));
  CHECK(p13.motion == 12);

  // Cubic-residue coloring on F_13: a must be a cube, 13 * 4 maps.
  GroupInfo cyc = automorphisms(cyclotomic_configuration(13, 3));
  CHECK(cyc.order == BigInt(52));
  CHECK(cyc.motion == 12);

  // Point-line incidence graph of the projective plane of order 2:
  // collineations and dualities.  An involutory collineation fixes three
  // points and three lines.
  GroupInfo hw = automorphisms(wl_stabilize(
      adjacency_configuration(heawood_graph())).stable);
  CHECK(hw.order == BigInt(336));
  CHECK(hw.motion == 8);
}

TEST_CASE("motion above the enumeration cap settles on the distinguishing floor") {
  // 11! elements is far beyond the cap, but the minimal-support search finds
  // a transposition image (support 2(s-2) = 18) matching the
  // distinguishing-number floor, so the result is still exact.
  Configuration t11 = gen_triangular(11);
  GroupInfo g = automorphisms(t11);
  CHECK(g.order == BigInt(39916800));
  CHECK(g.motion == 18);
  CHECK(g.exact);
  CHECK(distinguishing_report(t11, intersection_tensor(t11)).dmin == 18);
  CHECK(exact_motion(t11) == 18);
}

TEST_CASE("inexact motion is flagged when the floor is not met") {
  // Paley(13): order 78 over a cap of 10, true motion 12, floor 8.  The
  // estimate cannot certify, so exact drops and exact_motion refuses.
  GroupInfo g = automorphisms(paley_configuration(13), 60, 10.0);
  CHECK(g.order == BigInt(78));
  CHECK_FALSE(g.exact);
  CHECK(g.motion >= 12);  // every non-identity affine map moves >= 12 points
  try {
    exact_motion(paley_configuration(13), 10.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::cap_exceeded);
  }
}

TEST_CASE("vertex cap") {
  try {
    exact_motion(gen_johnson(9, 3));  // 84 vertices
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::cap_exceeded);
  }
}

TEST_CASE("orbital configurations") {
  // Single 5-cycle: five pair orbits (diagonal plus four shifts), pairing
  // matches inverse shifts.
  Configuration c5 = orbital_configuration({{1, 2, 3, 4, 0}}, 5, true);
  CHECK(c5.rank() == 5);
  CHECK(c5.n() == 5);
  color_t shift1 = c5.color(0, 1);
  color_t shift4 = c5.color(0, 4);
  CHECK(c5.paired(shift1) == shift4);

  // The trivial group gives the discrete configuration...
  Configuration disc = orbital_configuration({}, 3);
  CHECK(disc.rank() == 9);
  GroupInfo g = automorphisms(disc);
  CHECK(g.order == BigInt(1));
  CHECK(g.generators.empty());
  CHECK(g.motion == 3);  // convention for the trivial group
  CHECK(g.orbit_count == 3);
  CHECK(g.exact);

  // ...and is refused when transitivity is demanded.
  try {
    orbital_configuration({}, 3, true);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_transitive);
  }
}

TEST_CASE("line graph preserves the group") {
  GroupInfo base = automorphisms(wl_stabilize(
      adjacency_configuration(heawood_graph())).stable);
  GroupInfo line = automorphisms(line_graph_scheme(heawood_graph()));
  CHECK(base.order == line.order);
  CHECK(line.order == BigInt(336));
}
