#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccmotion/autgroup.hpp"
#include "ccmotion/certify.hpp"
#include "ccmotion/families.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/tensor.hpp"
#include "ccmotion/wl.hpp"

#include "helpers.hpp"

using namespace cc;

namespace {

Errc thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return Errc::parse_error;  // sentinel: "did not throw"
}

std::vector<std::string> rules_of(const std::vector<Step>& steps) {
  std::vector<std::string> r;
  for (const Step& s : steps) r.push_back(s.rule);
  return r;
}

// Color of adjacent line-graph vertices, resolved through the shared
// lexicographic edge order of line_graph / line_graph_scheme.
color_t adjacency_color(const Configuration& cfg, const SimpleGraph& base) {
  SimpleGraph lg = line_graph(base);
  return cfg.color(0, lg.neighbors(0).at(0));
}

}  // namespace

TEST_CASE("input hash") {
  std::string h = input_hash(gen_johnson(5, 2));
  CHECK(h.size() == 16);
  for (char c : h) CHECK(std::isxdigit(static_cast<unsigned char>(c)));
  CHECK(h == input_hash(gen_johnson(5, 2)));
  CHECK(h == input_hash(gen_triangular(5)));  // same builder, same matrix
  CHECK(h != input_hash(gen_johnson(6, 2)));
  Configuration permuted =
      gen_johnson(5, 2).permuted_vertices({1, 0, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(h != input_hash(permuted));  // hash is over the raw matrix
}

TEST_CASE("rank-4 branch classification") {
  auto classify = [](const Configuration& c) {
    return classify_rank4(c, intersection_tensor(c));
  };
  CHECK(thrown_code([&] { (void)classify(gen_triangular(5)); }) ==
        Errc::not_rank4);
  CHECK(thrown_code([&] { (void)classify(gen_crown(4)); }) ==
        Errc::not_primitive);
  CHECK(classify(gen_johnson(7, 3)) == Branch::drg_diameter3);
  CHECK(classify(cyclotomic_configuration(13, 3)) == Branch::assoc_diameter2);
  CHECK(std::string(branch_name(Branch::assoc_diameter2)) ==
        "assoc-diameter-2");
}

TEST_CASE("oriented branch on the rotation orbital") {
  Configuration cfg = cctest::c4_rotation_orbital();
  auto [oc, pi] = order_by_degree(cfg);
  std::vector<Step> steps = oriented_branch(oc, intersection_tensor(oc));
  CHECK(rules_of(steps) ==
        std::vector<std::string>{
            "oriented-structure", "reversal-balance",
            "undirected-constituent-strongly-regular", "in-out-overlap-floor",
            "excluded-arrangement"});
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) CHECK(steps[i].holds);
  // The matching constituent has complement-of-lattice parameters, but the
  // arrangement the theorem excludes is not realized here: recorded, no
  // conclusion drawn.
  CHECK_FALSE(steps.back().holds);
  for (const Step& s : steps) CHECK_FALSE(s.bound.has_value());
}

TEST_CASE("oriented branch refuses other color structures") {
  Configuration cyc = cyclotomic_configuration(13, 3);
  CHECK(thrown_code([&] {
          (void)oriented_branch(cyc, intersection_tensor(cyc));
        }) == Errc::branch_mismatch);
}

TEST_CASE("heavy-middle-color distinguishing lemma") {
  IntersectionTensor t = intersection_tensor(cyclotomic_configuration(13, 3));
  auto st = lemma_k2_large(t, Rational(1));
  REQUIRE(st.has_value());
  CHECK(st->rule == "pair-distinguishing-by-heavy-color");
  CHECK(st->holds);
  CHECK(st->bound == Rational(13, 6));
  CHECK_FALSE(lemma_k2_large(t, Rational(2)).has_value());  // k2 < 2 k3
  CHECK(thrown_code([&] { (void)lemma_k2_large(t, Rational(0)); }) ==
        Errc::bad_params);
}

TEST_CASE("parameter inequalities under a saturated eps") {
  IntersectionTensor t = intersection_tensor(cyclotomic_configuration(13, 3));
  // eps = 2 max(k1,k2)/k3 = 2 saturates the precondition exactly.
  std::vector<Step> steps = param_inequalities(t, Rational(2));
  REQUIRE(steps.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(steps[i].rule == "parameter-inequality-" + std::to_string(i + 1));
    CHECK(steps[i].holds);
  }
  // The binary cube is ordered rank 4 but its matching constituent is
  // disconnected, so the diameter-2 hypothesis cannot be met.
  auto [cube, pi] = order_by_degree(gen_hamming(3, 2));
  IntersectionTensor ct = intersection_tensor(cube);
  CHECK(thrown_code([&] { (void)param_inequalities(ct, Rational(2)); }) ==
        Errc::hypothesis_violated);
}

TEST_CASE("triangle inequality") {
  IntersectionTensor t = intersection_tensor(gen_johnson(5, 2));
  InequalityCheck chk = triangle_inequality(t, 1, 1, 1, 1, 1, 1);
  CHECK(chk.holds);
  CHECK(chk.slack == Rational(3));  // 3 + 3 <= 6 + 3
  CHECK(chk.step.rule == "triangle-inequality");
  // No triangle with all sides "disjoint" exists on 5 points.
  CHECK(thrown_code([&] {
          (void)triangle_inequality(t, 1, 1, 1, 2, 2, 2);
        }) == Errc::no_such_triangle);
}

TEST_CASE("triangle corollaries under the dominant-color precondition") {
  IntersectionTensor t = intersection_tensor(cyclotomic_configuration(13, 3));
  InequalityCheck a = corollary_shift_dominant(t, Rational(2), 1, 1, 1, 2);
  CHECK(a.holds);
  CHECK(a.slack == Rational(9));  // 0 <= 1 + 8
  CHECK(a.step.rule == "triangle-shift-to-dominant-color");

  InequalityCheck b = corollary_diam2_shift(t, Rational(2), 1, 1, 1);
  CHECK(b.holds);
  CHECK(b.slack == Rational(10));  // 0 <= 2 + 8
  CHECK(b.step.rule == "triangle-shift-within-diameter-two");

  InequalityCheck c = corollary_double_count(t, Rational(2), 2, 2, 1);
  CHECK(c.holds);
  CHECK(c.step.rule == "triangle-double-count");
  CHECK(c.step.conclusion.find("moreover") != std::string::npos);

  // A small eps fails the precondition: recorded, nothing asserted.
  InequalityCheck d = corollary_double_count(t, Rational(1, 100), 1, 1, 1);
  CHECK_FALSE(d.holds);
  CHECK_FALSE(d.step.holds);
  CHECK(d.step.conclusion.find("precondition fails") != std::string::npos);

  CHECK(thrown_code([&] {
          (void)corollary_diam2_shift(t, Rational(2), 1, 1, 3);
        }) == Errc::bad_params);  // s must be a light color
}

TEST_CASE("five-way alternative on the cubic-residue scheme") {
  Configuration cyc = cyclotomic_configuration(13, 3);
  Diam2Result res = theorem_diam2(cyc, intersection_tensor(cyc));
  REQUIRE(res.outcomes.size() == 1);
  CHECK(res.outcomes[0] == Diam2Outcome::distinguished);
  CHECK(std::string(diam2_outcome_name(res.outcomes[0])) != "");
  REQUIRE(res.steps.size() == 6);
  CHECK(res.steps[0].rule == "outcome-pair-distinguishing");
  CHECK(res.steps[0].holds);
  REQUIRE(res.steps[0].bound.has_value());
  CHECK(*res.steps[0].bound > 0);
  CHECK(*res.steps[0].bound < 1);  // eps-scaled floor is tiny at this size
  for (std::size_t i = 1; i < res.steps.size(); ++i)
    CHECK_FALSE(res.steps[i].holds);
}

TEST_CASE("within-clique distinguishing: triangular graph alone fails") {
  Configuration t5 = gen_triangular(5);
  SunWilmesResult res =
      sun_wilmes_check(t5, intersection_tensor(t5), {1}, Rational(1, 3));
  CHECK_FALSE(res.holds);
  CHECK(res.alpha_true == Rational(0));  // star mates never disagree
  CHECK(res.witness_line >= 0);
  CHECK(rules_of(res.steps) ==
        std::vector<std::string>{
            "triangular-union-parameters", "clique-geometry-extraction",
            "root-graph-complete", "within-clique-distinguishing"});
  CHECK_FALSE(res.steps.back().holds);
  CHECK_FALSE(res.steps.back().bound.has_value());
}

TEST_CASE("within-clique distinguishing: affine orbital refinement succeeds") {
  Configuration f20 = cctest::f20_orbital_t5();
  std::vector<color_t> I = cctest::f20_t5_adjacency_colors(f20);
  SunWilmesResult res =
      sun_wilmes_check(f20, intersection_tensor(f20), I, Rational(1, 3));
  CHECK(res.holds);
  CHECK(res.alpha_true == Rational(1, 2));
  CHECK(res.splitting_set_bound == Rational(30));
  REQUIRE(res.steps.size() == 4);
  REQUIRE(res.steps.back().bound.has_value());
  CHECK(*res.steps.back().bound == Rational(5, 3));  // alpha n / 2
  CHECK(*res.steps.back().bound <= Rational(exact_motion(f20)));
}

TEST_CASE("within-clique distinguishing: guards") {
  Configuration j62 = gen_johnson(6, 2);
  CHECK(thrown_code([&] {
          (void)sun_wilmes_check(j62, intersection_tensor(j62), {2},
                                 Rational(1, 3));
        }) == Errc::not_triangular);
  CHECK(thrown_code([&] {
          (void)sun_wilmes_check(j62, intersection_tensor(j62), {1},
                                 Rational(1, 2));
        }) == Errc::bad_alpha);
  Configuration c4 = cctest::c4_rotation_orbital();
  color_t shift = c4.color(0, 1);
  CHECK(thrown_code([&] {
          (void)sun_wilmes_check(c4, intersection_tensor(c4), {shift},
                                 Rational(1, 3));
        }) == Errc::not_closed_under_pairing);
}

TEST_CASE("strongly-regular-constituent routes are recorded, not triggered") {
  Configuration cyc = cyclotomic_configuration(13, 3);
  std::vector<Step> steps = srg_branch_checks(cyc, intersection_tensor(cyc));
  CHECK(rules_of(steps) ==
        std::vector<std::string>{"union-srg-route", "x2-srg-route",
                                 "x12-zero-weight-evaluation",
                                 "x1-srg-route"});
  CHECK_FALSE(steps[0].holds);
  CHECK_FALSE(steps[1].holds);
  CHECK(steps[2].holds);  // exact evaluation of the union spectral gap
  CHECK_FALSE(steps[3].holds);
  for (const Step& s : steps) CHECK_FALSE(s.bound.has_value());
}

TEST_CASE("standalone degree-cap lemmas refuse desk-scale inputs") {
  IntersectionTensor t = intersection_tensor(cyclotomic_configuration(13, 3));
  CHECK(thrown_code([&] {
          (void)lemma_k2_le_20k1(t, Rational(1, 100), Rational(1, 100));
        }) == Errc::hypothesis_violated);
  CHECK(thrown_code([&] {
          (void)lemma_geometry_degree_ratio(t, Rational(1, 20), 2, false);
        }) == Errc::hypothesis_violated);  // n < 29
  CHECK(geometry_ratio_coefficient(3, false) == Rational(7, 2));
  CHECK(geometry_ratio_coefficient(3, true) == Rational(5, 8));
  CHECK(thrown_code([&] { (void)geometry_ratio_coefficient(1, false); }) ==
        Errc::bad_params);
}

TEST_CASE("line-graph branch walks the reconstruction") {
  Configuration lp = line_graph_scheme(petersen_graph());
  color_t c = adjacency_color(lp, petersen_graph());
  std::vector<Step> steps =
      line_graph_branch(lp, intersection_tensor(lp), c);
  CHECK(rules_of(steps) ==
        std::vector<std::string>{
            "constituent-not-strongly-regular", "scheme-structure",
            "base-graph-reconstruction", "edge-degree-floor",
            "whitney-transfer"});
  CHECK(steps[0].holds);
  CHECK_FALSE(steps[1].holds);  // metric of diameter 3, not diameter 2
  CHECK(steps[2].holds);
  CHECK_FALSE(steps[3].holds);  // line graph has diameter 3
  CHECK(steps[4].holds);
  for (const Step& s : steps) CHECK_FALSE(s.bound.has_value());
}

TEST_CASE("line-graph branch short-circuits") {
  // Strongly regular constituent: one rejecting step.
  Configuration l23 = gen_lattice(3);
  std::vector<Step> steps =
      line_graph_branch(l23, intersection_tensor(l23), 1);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].rule == "constituent-not-strongly-regular");
  CHECK_FALSE(steps[0].holds);

  // Bipartite base: no five-cycle, the case cannot apply.
  Configuration lh = line_graph_scheme(heawood_graph());
  color_t c = adjacency_color(lh, heawood_graph());
  steps = line_graph_branch(lh, intersection_tensor(lh), c);
  REQUIRE(!steps.empty());
  CHECK(steps.back().rule == "bipartite-case-contradiction");
  CHECK_FALSE(steps.back().holds);

  // Not a line graph at all.
  Configuration cyc = cyclotomic_configuration(13, 3);
  CHECK(thrown_code([&] {
          (void)line_graph_branch(cyc, intersection_tensor(cyc), 1);
        }) == Errc::not_line_graph);
  CHECK(thrown_code([&] {
          (void)line_graph_branch(cyc, intersection_tensor(cyc), 0);
        }) == Errc::bad_params);
}

TEST_CASE("pipeline: exceptional families") {
  Certificate j = certify(gen_johnson(7, 2));
  CHECK(j.verdict.kind == Verdict::Kind::exceptional);
  CHECK(j.verdict.family == Verdict::Family::johnson);
  CHECK_FALSE(j.branch.has_value());
  auto rules = rules_of(j.steps);
  CHECK(std::count(rules.begin(), rules.end(), "johnson-parameter-match") ==
        1);
  CHECK(replay_matches(gen_johnson(7, 2), j));

  // Same verdict through the distance coloring of the complement member.
  Certificate pet = certify(drg_to_scheme(petersen_graph()).first);
  CHECK(pet.verdict.family == Verdict::Family::johnson);

  // Primitive rank-4 metric scheme of diameter 3: branch recorded, family
  // still recognized.
  Certificate j73 = certify(gen_johnson(7, 3));
  CHECK(j73.verdict.kind == Verdict::Kind::exceptional);
  CHECK(j73.verdict.family == Verdict::Family::johnson);
  REQUIRE(j73.branch.has_value());
  CHECK(*j73.branch == Branch::drg_diameter3);
  rules = rules_of(j73.steps);
  CHECK(std::count(rules.begin(), rules.end(),
                   "metric-scheme-of-diameter-3") == 1);

  for (const Configuration& h :
       {gen_hamming(3, 2), gen_hamming(2, 4), gen_crown(4)}) {
    Certificate c = certify(h);
    CHECK(c.verdict.kind == Verdict::Kind::exceptional);
    CHECK(c.verdict.family == Verdict::Family::hamming);
    CHECK_FALSE(c.branch.has_value());
  }

  Certificate hv = certify(cctest::halved_five_cube());
  CHECK(hv.verdict.kind == Verdict::Kind::exceptional);
  CHECK(hv.verdict.family == Verdict::Family::srg_minus2);
}

TEST_CASE("pipeline: motion bounds") {
  Certificate p = certify(paley_configuration(13));
  CHECK(p.verdict.kind == Verdict::Kind::motion_at_least);
  CHECK(p.verdict.family == Verdict::Family::none);
  CHECK(p.verdict.bound == Rational(8));  // the distinguishing floor wins
  CHECK(p.verdict.reason.find("(8/13)*n") != std::string::npos);
  CHECK_FALSE(p.branch.has_value());
  REQUIRE(p.steps.size() == 6);
  CHECK(p.steps[2].rule == "distinguishing-floor");
  CHECK(Rational(8) <= Rational(exact_motion(paley_configuration(13))));
  CHECK(replay_matches(paley_configuration(13), p));

  Certificate cy = certify(cyclotomic_configuration(13, 3));
  CHECK(cy.verdict.kind == Verdict::Kind::motion_at_least);
  CHECK(cy.verdict.bound == Rational(10));
  REQUIRE(cy.branch.has_value());
  CHECK(*cy.branch == Branch::assoc_diameter2);
  CHECK(cy.steps.size() == 24);  // full assoc-diameter-2 case analysis
  CHECK(Rational(10) <=
        Rational(exact_motion(cyclotomic_configuration(13, 3))));

  Certificate c4 = certify(cctest::c4_rotation_orbital());
  CHECK(c4.verdict.kind == Verdict::Kind::motion_at_least);
  CHECK(c4.verdict.bound == Rational(4));  // rigid up to rotation: all moved
  CHECK_FALSE(c4.branch.has_value());      // imprimitive, no branch entered
  CHECK(c4.steps.size() == 5);
}

TEST_CASE("pipeline: inconclusive inputs") {
  // Not homogeneous: profiled and returned.
  SimpleGraph k23 = complete_bipartite(2, 3);
  Configuration stable = wl_stabilize(adjacency_configuration(k23)).stable;
  Certificate c = certify(stable);
  CHECK(c.verdict.kind == Verdict::Kind::inconclusive);
  CHECK(c.verdict.reason.find("not homogeneous") != std::string::npos);
  REQUIRE(c.steps.size() == 1);
  CHECK(c.steps[0].rule == "structural-profile");

  // Incoherent: the tensor refuses, the pipeline records the refusal.
  SimpleGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  Certificate bad = certify(adjacency_configuration(p3));
  CHECK(bad.verdict.kind == Verdict::Kind::inconclusive);
  REQUIRE(bad.steps.size() == 1);
  CHECK(bad.steps[0].rule == "pipeline-error");
  CHECK_FALSE(bad.steps[0].holds);
  CHECK_FALSE(bad.verdict.reason.empty());
}

TEST_CASE("certificate rendering and replay") {
  Configuration paley = paley_configuration(13);
  Certificate cert = certify(paley);
  std::string text = certificate_json(cert);
  nlohmann::json doc = nlohmann::json::parse(text);
  REQUIRE(doc.is_object());
  CHECK(doc.size() == 4);
  CHECK(doc["branch"].is_null());
  CHECK(doc["input_hash"] == cert.input_hash);
  CHECK(doc["steps"].is_array());
  CHECK(doc["steps"].size() == 6);
  for (const auto& st : doc["steps"]) {
    CHECK(st.contains("rule"));
    CHECK(st.contains("anchor"));
    CHECK(st.contains("conclusion"));
    CHECK(st.contains("holds"));
    CHECK(st.contains("hypotheses"));
  }
  CHECK(doc["verdict"]["kind"] == "motion_at_least");
  CHECK(doc["verdict"]["family"] == "none");
  CHECK(doc["verdict"]["bound_num"] == "8");
  CHECK(doc["verdict"]["bound_den"] == "1");

  nlohmann::json cy =
      nlohmann::json::parse(certificate_json(certify(
          cyclotomic_configuration(13, 3))));
  CHECK(cy["branch"] == "assoc-diameter-2");

  // Tampering is caught by byte-exact replay.
  CHECK(replay_matches(paley, cert));
  Certificate forged = cert;
  forged.verdict.bound = forged.verdict.bound + 1;
  CHECK_FALSE(replay_matches(paley, forged));
  forged = cert;
  forged.steps[2].holds = !forged.steps[2].holds;
  CHECK_FALSE(replay_matches(paley, forged));
}
