// Command-line front end: generate corpus instances, validate CCF files, and
// run the analysis pipeline (tensor, WL, distinguishing numbers, spectra,
// clique geometry, certificates, exact motion).
//
// Exit codes: 0 success, 1 validation failure, 2 cap exceeded, 3 internal
// assertion (soundness) failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccmotion/autgroup.hpp"
#include "ccmotion/ccf.hpp"
#include "ccmotion/certify.hpp"
#include "ccmotion/distinguish.hpp"
#include "ccmotion/error.hpp"
#include "ccmotion/families.hpp"
#include "ccmotion/geometry.hpp"
#include "ccmotion/graph.hpp"
#include "ccmotion/spectral.hpp"
#include "ccmotion/tensor.hpp"
#include "ccmotion/wl.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  double cap = 1e6;
  std::uint64_t seed = 0;
};

bool want_json(const Options& opt) { return opt.format == "json"; }

json rational_json(const cc::Rational& r) {
  return json{{"num", r.get_num().get_str()},
              {"den", r.get_den().get_str()},
              {"approx", cc::to_double(r)}};
}

cc::Configuration load(const std::string& path) {
  return cc::read_ccf_file(path);
}

// ---- gen --------------------------------------------------------------------

cc::Configuration generate(const std::string& family,
                           const std::vector<int>& p) {
  auto arity = [&](std::size_t want) {
    if (p.size() != want)
      throw cc::Error(cc::Errc::bad_params,
                      family + " takes " + std::to_string(want) +
                          " integer parameter(s), got " +
                          std::to_string(p.size()));
  };
  if (family == "johnson") {
    arity(2);
    return cc::gen_johnson(p[0], p[1]);
  }
  if (family == "hamming") {
    arity(2);
    return cc::gen_hamming(p[0], p[1]);
  }
  if (family == "triangular") {
    arity(1);
    return cc::gen_triangular(p[0]);
  }
  if (family == "lattice") {
    arity(1);
    return cc::gen_lattice(p[0]);
  }
  if (family == "crown") {
    arity(1);
    return cc::gen_crown(p[0]);
  }
  if (family == "paley") {
    arity(1);
    return cc::paley_configuration(p[0]);
  }
  if (family == "cyclotomic") {
    arity(2);
    return cc::cyclotomic_configuration(p[0], p[1]);
  }
  if (family == "cycle") {
    arity(1);
    return cc::drg_to_scheme(cc::cycle_graph(p[0])).first;
  }
  if (family == "petersen") {
    arity(0);
    return cc::drg_to_scheme(cc::petersen_graph()).first;
  }
  throw cc::Error(cc::Errc::bad_params,
                  "unknown family \"" + family +
                      "\" (johnson, hamming, triangular, lattice, crown, "
                      "paley, cyclotomic, cycle, petersen)");
}

// ---- check ------------------------------------------------------------------

int run_check(const std::string& path, const Options& opt) {
  cc::Configuration cfg = load(path);
  std::optional<cc::CoherenceWitness> w = cc::coherence_witness(cfg);
  if (want_json(opt)) {
    json out{{"file", path},
             {"n", cfg.n()},
             {"rank", cfg.rank()},
             {"valid", true},
             {"coherent", !w.has_value()}};
    if (w)
      out["witness"] = {{"i", w->i},       {"j", w->j},
                        {"t", w->t},       {"u1", w->u1},
                        {"v1", w->v1},     {"count1", w->count1},
                        {"u2", w->u2},     {"v2", w->v2},
                        {"count2", w->count2}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << path << ": valid configuration, n=" << cfg.n()
              << " rank=" << cfg.rank() << "\n";
    if (w)
      std::cout << "not coherent: pairs (" << w->u1 << "," << w->v1
                << ") and (" << w->u2 << "," << w->v2 << ") of color " << w->t
                << " see " << w->count1 << " vs " << w->count2
                << " walks through colors (" << w->i << "," << w->j << ")\n";
    else
      std::cout << "coherent\n";
  }
  return w ? 1 : 0;
}

// ---- analyze ----------------------------------------------------------------

int run_analyze(const std::string& path, const Options& opt) {
  cc::Configuration cfg = load(path);
  cc::IntersectionTensor t = cc::intersection_tensor(cfg);
  cc::StructuralFlags flags = cc::structural_flags(cfg, t);
  cc::IdentityReport ids = cc::verify_identities(cfg, t, opt.seed);

  json colors = json::array();
  for (cc::color_t c = 0; c < static_cast<cc::color_t>(t.rank()); ++c) {
    json entry{{"color", c},
               {"paired", t.paired(c)},
               {"diagonal", t.is_diagonal(c)},
               {"diameter", flags.diameter[c]}};
    if (!t.is_diagonal(c) && t.homogeneous()) {
      cc::ConstituentStats st = cc::constituent_stats(t, c);
      entry["degree"] = st.k;
      entry["lambda"] = st.lambda;
      entry["q"] = st.q;
      entry["connected"] = st.connected;
    }
    colors.push_back(entry);
  }
  json out{{"file", path},
           {"n", cfg.n()},
           {"rank", cfg.rank()},
           {"homogeneous", flags.homogeneous},
           {"association_scheme", flags.association_scheme},
           {"primitive", flags.primitive},
           {"scheme_diameter", flags.scheme_diameter},
           {"colors", colors},
           {"identities",
            {{"partition", ids.partition_ok},
             {"diagonal", ids.diagonal_ok},
             {"row_sums", ids.row_sums_ok},
             {"degree_symmetry", ids.degree_symmetry_ok},
             {"products", ids.product_ok},
             {"products_checked", ids.products_checked}}},
           {"identities_ok", ids.all()}};
  std::cout << out.dump(2) << "\n";
  return ids.all() ? 0 : 1;
}

// ---- wl ---------------------------------------------------------------------

int run_wl(const std::string& path, const Options& opt) {
  cc::Configuration cfg = load(path);
  cc::RefinementTrace tr = cc::wl_stabilize(cfg);
  bool already_stable = tr.rounds == 0;
  if (want_json(opt)) {
    json out{{"file", path},
             {"input_rank", cfg.rank()},
             {"stable_rank", tr.stable.rank()},
             {"rounds", tr.rounds},
             {"rank_history", tr.rank_history},
             {"already_stable", already_stable}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "rank " << cfg.rank() << " -> " << tr.stable.rank() << " in "
              << tr.rounds << " round(s); history:";
    for (int r : tr.rank_history) std::cout << " " << r;
    std::cout << (already_stable ? " (input already stable)" : "") << "\n";
  }
  return 0;
}

// ---- distinguish --------------------------------------------------------------

int run_distinguish(const std::string& path, const Options& opt) {
  cc::Configuration cfg = load(path);
  cc::IntersectionTensor t = cc::intersection_tensor(cfg);
  cc::DistinguishReport rep = cc::distinguishing_report(cfg, t);
  if (want_json(opt)) {
    json out{{"file", path},
             {"d_color", rep.d_color},
             {"dmin", rep.dmin},
             {"argmin", rep.argmin}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Dmin = " << rep.dmin << " at color " << rep.argmin << "\n";
    for (cc::color_t c = 0; c < static_cast<cc::color_t>(t.rank()); ++c)
      if (!t.is_diagonal(c))
        std::cout << "  D(" << c << ") = " << rep.d_color[c] << "\n";
  }
  return 0;
}

// ---- spectrum -----------------------------------------------------------------

json spectrum_json(const cc::Spectrum& sp) {
  json eig = json::array();
  for (const cc::BigInt& e : sp.integer_eigenvalues) eig.push_back(e.get_str());
  json cp = json::array();
  for (const cc::BigInt& c : sp.char_poly) cp.push_back(c.get_str());
  return json{{"colors", sp.colors},
              {"symmetrized", sp.symmetrized},
              {"k", sp.k.get_str()},
              {"integer_eigenvalues", eig},
              {"exact", sp.exact},
              {"xi", rational_json(sp.xi)},
              {"xi_reaches_k", sp.xi_reaches_k},
              {"char_poly", cp},
              {"nontrivial_numeric", sp.nontrivial_numeric}};
}

void spectrum_text(const cc::Spectrum& sp) {
  std::cout << "colors {";
  for (std::size_t i = 0; i < sp.colors.size(); ++i)
    std::cout << (i ? "," : "") << sp.colors[i];
  std::cout << "}: k = " << sp.k.get_str() << ", xi = " << cc::to_double(sp.xi)
            << (sp.exact ? " (exact)" : " (certified upper)")
            << ", integer eigenvalues:";
  for (const cc::BigInt& e : sp.integer_eigenvalues)
    std::cout << " " << e.get_str();
  std::cout << "\n";
}

int run_spectrum(const std::string& path, const std::vector<int>& colors,
                 const Options& opt) {
  cc::Configuration cfg = load(path);
  cc::IntersectionTensor t = cc::intersection_tensor(cfg);
  std::vector<cc::Spectrum> specs;
  if (!colors.empty()) {
    std::vector<cc::color_t> set(colors.begin(), colors.end());
    specs.push_back(cc::union_spectrum(t, set));
  } else {
    for (cc::color_t c : t.edge_colors())
      if (t.is_symmetric_color(c) || c < t.paired(c))
        specs.push_back(cc::constituent_spectrum(t, c));
  }
  if (want_json(opt)) {
    json out = json::array();
    for (const cc::Spectrum& sp : specs) out.push_back(spectrum_json(sp));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const cc::Spectrum& sp : specs) spectrum_text(sp);
  }
  return 0;
}

// ---- geometry -----------------------------------------------------------------

int run_geometry(const std::string& path, int color, int m,
                 const Options& opt) {
  cc::Configuration cfg = load(path);
  if (color <= 0 || color >= cfg.rank() ||
      !cfg.is_symmetric_color(static_cast<cc::color_t>(color)))
    throw cc::Error(cc::Errc::bad_params,
                    "--color must name a symmetric edge color");
  cc::SimpleGraph g =
      cc::color_graph(cfg, {static_cast<cc::color_t>(color)});
  cc::MetschParams mp = cc::metsch_params(g, m);
  bool criterion = cc::metsch_check(mp);
  cc::CliqueGeometry geo = cc::extract_lines(g, mp);  // throws if gate fails
  int min_size = cfg.n(), max_size = 0;
  for (const auto& line : geo.lines) {
    min_size = std::min<int>(min_size, line.size());
    max_size = std::max<int>(max_size, line.size());
  }
  if (want_json(opt)) {
    json lines = json::array();
    for (const auto& line : geo.lines) lines.push_back(line);
    json out{{"file", path},
             {"color", color},
             {"m", m},
             {"k", mp.k},
             {"lambda1", mp.lambda1},
             {"lambda2", mp.lambda2},
             {"mu", mp.mu},
             {"criterion", criterion},
             {"line_count", geo.lines.size()},
             {"line_size_min", min_size},
             {"line_size_max", max_size},
             {"lines", lines}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "criterion holds (m=" << m << "): " << geo.lines.size()
              << " line(s), sizes " << min_size << ".." << max_size << "\n";
  }
  return 0;
}

// ---- certify ------------------------------------------------------------------

int run_certify(const std::string& path, bool as_json, const Options& opt) {
  cc::Configuration cfg = load(path);
  cc::Certificate cert = cc::certify(cfg);
  if (as_json || want_json(opt)) {
    std::cout << cc::certificate_json(cert);
  } else {
    std::cout << "input " << cert.input_hash;
    if (cert.branch) std::cout << "  branch " << cc::branch_name(*cert.branch);
    std::cout << "\n";
    for (const cc::Step& st : cert.steps) {
      std::cout << (st.holds ? "  [ok]   " : "  [skip] ") << st.rule;
      if (st.bound)
        std::cout << "  bound " << cc::to_string(*st.bound) << " ("
                  << cc::to_double(*st.bound) << ")";
      std::cout << "\n         " << st.conclusion << "\n";
    }
    switch (cert.verdict.kind) {
      case cc::Verdict::Kind::motion_at_least:
        std::cout << "verdict: motion >= " << cc::to_string(cert.verdict.bound)
                  << " (" << cc::to_double(cert.verdict.bound) << ")\n";
        break;
      case cc::Verdict::Kind::exceptional:
        std::cout << "verdict: exceptional — " << cert.verdict.reason << "\n";
        break;
      default:
        std::cout << "verdict: inconclusive — " << cert.verdict.reason << "\n";
    }
  }
  return 0;
}

// ---- motion -------------------------------------------------------------------

int run_motion(const std::string& path, bool exact, const Options& opt) {
  cc::Configuration cfg = load(path);
  const int vertex_cap = 512;  // the enumeration cap is the real guard
  if (exact) {
    std::int64_t motion = cc::exact_motion(cfg, opt.cap, vertex_cap);
    if (want_json(opt))
      std::cout << json{{"file", path}, {"motion", motion}, {"exact", true}}
                       .dump(2)
                << "\n";
    else
      std::cout << motion << "\n";
    return 0;
  }
  cc::GroupInfo info = cc::automorphisms(cfg, vertex_cap, opt.cap);
  if (want_json(opt)) {
    json out{{"file", path},
             {"order", info.order.get_str()},
             {"motion", info.motion},
             {"exact", info.exact},
             {"orbit_count", info.orbit_count},
             {"generators", info.generators.size()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "order " << info.order.get_str() << ", motion "
              << info.motion << (info.exact ? "" : " (estimate)")
              << ", orbits " << info.orbit_count << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherent-configuration motion toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("CCMOTION_CAP")) opt.cap = std::atof(env);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cap", opt.cap, "enumeration cap for the group oracle");
  app.add_option("--seed", opt.seed, "seed for randomized identity checks");

  std::string family, in_file, out_file;
  std::vector<int> params, colors;
  int color = 1, m = 2;
  bool exact = false, cert_json = false;

  CLI::App* gen = app.add_subcommand("gen", "generate a family instance");
  gen->add_option("family", family)->required();
  gen->add_option("params", params);
  gen->add_option("-o,--output", out_file, "output CCF file")->required();

  CLI::App* check = app.add_subcommand("check", "validate + coherence check");
  check->add_option("file", in_file)->required();

  CLI::App* analyze = app.add_subcommand("analyze", "tensor + stats JSON");
  analyze->add_option("file", in_file)->required();

  CLI::App* wl = app.add_subcommand("wl", "refine to the stable coloring");
  wl->add_option("file", in_file)->required();

  CLI::App* dist = app.add_subcommand("distinguish", "distinguishing numbers");
  dist->add_option("file", in_file)->required();

  CLI::App* spec = app.add_subcommand("spectrum", "constituent spectra");
  spec->add_option("file", in_file)->required();
  spec->add_option("--colors", colors, "union over this color set")
      ->delimiter(',');

  CLI::App* geo = app.add_subcommand("geometry", "clique geometry extraction");
  geo->add_option("file", in_file)->required();
  geo->add_option("--color", color, "symmetric edge color")->required();
  geo->add_option("--m", m, "max lines per vertex")->required();

  CLI::App* cert = app.add_subcommand("certify", "run the motion pipeline");
  cert->add_option("file", in_file)->required();
  cert->add_flag("--json", cert_json, "emit the certificate as JSON");

  CLI::App* motion = app.add_subcommand("motion", "automorphism group oracle");
  motion->add_option("file", in_file)->required();
  motion->add_flag("--exact", exact, "fail instead of estimating");

  for (CLI::App* sub : {gen, check, analyze, wl, dist, spec, geo, cert, motion})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      cc::write_ccf_file(out_file, generate(family, params));
      std::cout << out_file << " written\n";
      return 0;
    }
    if (check->parsed()) return run_check(in_file, opt);
    if (analyze->parsed()) return run_analyze(in_file, opt);
    if (wl->parsed()) return run_wl(in_file, opt);
    if (dist->parsed()) return run_distinguish(in_file, opt);
    if (spec->parsed()) return run_spectrum(in_file, colors, opt);
    if (geo->parsed()) return run_geometry(in_file, color, m, opt);
    if (cert->parsed()) return run_certify(in_file, cert_json, opt);
    if (motion->parsed()) return run_motion(in_file, exact, opt);
  } catch (const cc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code == cc::Errc::cap_exceeded) return 2;
    if (e.code == cc::Errc::soundness_failure ||
        e.code == cc::Errc::no_outcome)
      return 3;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
