/* Command line front end.
 *
 * Exit codes: 0 success (including reproduced fixtures), 1 internal
 * consistency failure, 2 input error, 3 resource limit.
 */
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "psidet/corpus.hpp"
#include "psidet/embedding.hpp"
#include "psidet/errors.hpp"
#include "psidet/fixtures.hpp"
#include "psidet/fqcount.hpp"
#include "psidet/graph.hpp"
#include "psidet/graphalg.hpp"
#include "psidet/graphpoly.hpp"
#include "psidet/lpoly.hpp"
#include "psidet/motive.hpp"
#include "psidet/subspace.hpp"
#include "psidet/tau.hpp"
#include "psidet/version.hpp"
#include "psidet/wheel3.hpp"

namespace {

using namespace psidet;

bool g_no_header = false;

void header() {
  if (!g_no_header) std::cout << version_string << "\n";
}

std::vector<uint32_t> parse_primes(const std::string& list) {
  std::vector<uint32_t> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw_input("prime list entry '" + tok + "' is not a number");
    }
    require_input(used == tok.size() && v >= 2 && v <= 0xffffffffUL,
                  "prime list entry '" + tok + "' is out of range");
    out.push_back(static_cast<uint32_t>(v));
  }
  require_input(!out.empty(), "prime list is empty");
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// graph commands

FeynmanGraph load_validated(const std::string& path) {
  FeynmanGraph g = load_graph(path);
  validate_graph(g);
  return g;
}

void cmd_graph_validate(const std::string& path) {
  FeynmanGraph g = load_validated(path);
  header();
  std::cout << "graph '" << g.name << "': valid (" << g.num_vertices() << " vertices, " << g.n()
            << " edges" << (g.has_rotation ? ", rotation present" : "") << ")\n";
}

void cmd_graph_info(const std::string& path) {
  FeynmanGraph g = load_validated(path);
  header();
  std::cout << "name: " << g.name << "\n";
  std::cout << "vertices: " << g.num_vertices() << "\n";
  std::cout << "edges: " << g.n() << " (";
  for (size_t e = 0; e < g.n(); ++e) std::cout << (e ? " " : "") << g.edges[e].id;
  std::cout << ")\n";
  std::cout << "externals: " << g.externals.size() << "\n";
  std::cout << "connected: " << bool_str(graph_is_connected(g)) << "\n";
  std::cout << "loop number: " << g.loop_number() << "\n";
  if (!g.has_rotation) {
    std::cout << "rotation: absent\n";
    return;
  }
  std::cout << "rotation: present\n";
  FaceSet fs = trace_faces(g);
  std::cout << "faces: " << fs.face_count() << "\n";
  std::cout << "genus: " << fs.genus << "\n";
  std::cout << "closed 2-cell: " << bool_str(is_closed_2cell(g, fs)) << "\n";
}

void cmd_graph_psi(const std::string& path) {
  FeynmanGraph g = load_validated(path);
  header();
  MultiPoly trees = psi_from_trees(g);
  LoopBasis basis;
  if (g.has_rotation) {
    FaceSet fs = trace_faces(g);
    basis = loop_basis(g, &fs);
  } else {
    basis = loop_basis(g);
  }
  MultiPoly det = psi_from_det(g, basis);
  std::cout << "graph: " << g.name << "\n";
  std::cout << "psi via spanning trees: " << trees.to_string() << "\n";
  std::cout << "psi via determinant:    " << det.to_string() << "\n";
  std::cout << "monomials: " << trees.num_terms() << "\n";
  const bool same = trees == det;
  std::cout << "trees == det: " << bool_str(same) << "\n";
  if (!same) throw_internal("spanning-tree and determinant routes disagree");
}

void cmd_graph_pgamma(const std::string& path) {
  FeynmanGraph g = load_validated(path);
  header();
  std::cout << "graph: " << g.name << "\n";
  std::cout << "momentum dimension: " << momentum_dimension(g) << "\n";
  std::cout << "p_gamma: " << p_gamma(g).to_string() << "\n";
}

void cmd_graph_connectivity(const std::string& path) {
  FeynmanGraph g = load_validated(path);
  header();
  ConnectivityReport r = connectivity_report(g);
  std::cout << "graph: " << g.name << "\n";
  std::cout << "connected: " << bool_str(r.connected) << "\n";
  std::cout << "looping edges: " << bool_str(r.has_looping) << "\n";
  std::cout << "multiple edges: " << bool_str(r.has_multiple) << "\n";
  std::cout << "1PI (2-edge-connected): " << bool_str(r.one_pi) << "\n";
  std::cout << "3-edge-connected: " << bool_str(r.three_edge) << "\n";
  std::cout << "2-vertex-connected: " << bool_str(r.two_vertex) << "\n";
  std::cout << "3-vertex-connected: " << bool_str(r.three_vertex) << "\n";
}

// ---------------------------------------------------------------------------
// tau commands

void cmd_tau_matrix(const std::string& path) {
  FeynmanGraph g = load_validated(path);
  header();
  LoopBasis basis;
  if (g.has_rotation) {
    FaceSet fs = trace_faces(g);
    basis = loop_basis(g, &fs);
  } else {
    basis = loop_basis(g);
  }
  TauMap tm = tau_matrix(g, basis);
  std::cout << "graph: " << g.name << "\n";
  std::cout << "tau matrix: " << tm.matrix.rows() << " x " << tm.matrix.cols()
            << " (matrix coordinates x edges";
  for (const auto& e : g.edges) std::cout << " " << e.id;
  std::cout << ")\n";
  for (size_t r = 0; r < tm.matrix.rows(); ++r) {
    std::cout << "[";
    for (size_t c = 0; c < tm.matrix.cols(); ++c)
      std::cout << " " << tm.matrix.at(r, c).get_str();
    std::cout << " ]\n";
  }
}

void cmd_tau_check(const std::string& path, bool rank_only) {
  FeynmanGraph g = load_validated(path);
  header();
  if (!rank_only && !g.has_rotation)
    throw_input("graph '" + g.name +
                "' carries no rotation system; pass --rank-only for the rank verdict alone");
  FaceSet fs;
  LoopBasis basis;
  if (g.has_rotation) {
    fs = trace_faces(g);
    basis = loop_basis(g, &fs);
  } else {
    basis = loop_basis(g);
  }
  TauMap tm = tau_matrix(g, basis);
  const size_t rank = tau_rank(tm);
  std::cout << "graph: " << g.name << "\n";
  std::ostringstream line;
  line << "injective: " << bool_str(rank == tm.n) << " (rank " << rank << "/" << tm.n << ")";
  if (!rank_only) {
    CertificateReport rep = certify_injectivity(g);
    line << "; certified: ";
    if (rep.chains.empty()) {
      line << "none";
    } else {
      for (size_t i = 0; i < rep.chains.size(); ++i) line << (i ? ", " : "") << rep.chains[i];
    }
    SigmaReport sr = sigma_gamma(g, fs, basis, tm);
    line << "; sigma: " << sr.selection.mask();
  }
  std::cout << line.str() << "\n";
}

// ---------------------------------------------------------------------------
// classes commands

void print_verify(const VerifyReport& rep) {
  for (const PrimeCheck& pc : rep.primes) {
    std::cout << "verify q=" << pc.q << ": ";
    if (!pc.counted) {
      std::cout << "skipped (" << pc.note << ")\n";
      continue;
    }
    std::cout << "expected " << pc.expected.get_str() << ", counted " << pc.actual
              << (pc.match ? ", match" : ", MISMATCH") << "\n";
  }
}

// resource skips take precedence, then mismatches
void enforce_verify(const VerifyReport& rep) {
  for (const PrimeCheck& pc : rep.primes)
    if (!pc.counted) throw_resource(pc.note);
  if (!rep.all_match) throw_internal("oracle count disagrees with the symbolic class");
}

void cmd_classes_det(size_t loops, bool projective, const std::string& verify,
                     unsigned long long budget, size_t threads) {
  const LPoly cls = det_complement_class(loops, projective);
  header();
  std::cout << "det complement (loops " << loops << ", " << (projective ? "projective" : "affine")
            << ")\n";
  std::cout << "class (expanded): " << cls.to_string() << "\n";
  std::cout << "class (factored): " << display_factor(cls).to_string() << "\n";
  if (verify.empty()) return;
  require_input(!projective, "verification counts affine points; drop --projective");
  CountRequest req;
  req.kind = CountKind::det_complement;
  req.ell = loops;
  req.budget = budget;
  req.threads = threads;
  VerifyReport rep = verify_class(cls, req, parse_primes(verify));
  print_verify(rep);
  std::cout << "verify: " << (rep.all_match ? "all match" : "MISMATCH") << "\n";
  enforce_verify(rep);
}

void cmd_classes_frames(const std::string& mask, size_t loops, size_t genus,
                        const std::string& verify, unsigned long long budget, size_t threads) {
  const DivisorSelection sel = selection_from_mask(loops, genus, mask);
  require_input(loops == 3 && genus == 0, "supported only for three loops at genus zero");
  const SubspaceConfig cfg = config_from_selection(sel);
  const LPoly cls = frame_class_r3(cfg);
  header();
  std::cout << "selection: " << mask << " (components";
  const auto comps = sigma_lg(loops, genus);
  bool any = false;
  for (size_t i : sel.indices) {
    std::cout << " " << comps[i].label();
    any = true;
  }
  if (!any) std::cout << " none";
  std::cout << ")\n";
  std::cout << "space dims: " << cfg.d1 << " " << cfg.d2 << " " << cfg.d3 << "\n";
  std::cout << "frame class (expanded): " << cls.to_string() << "\n";
  std::cout << "frame class (factored): " << display_factor(cls).to_string() << "\n";
  if (verify.empty()) return;
  CountRequest req;
  req.kind = CountKind::frame_locus;
  req.config = cfg;
  req.budget = budget;
  req.threads = threads;
  VerifyReport rep = verify_class(cls, req, parse_primes(verify));
  print_verify(rep);
  std::cout << "verify: " << (rep.all_match ? "all match" : "MISMATCH") << "\n";
  enforce_verify(rep);
}

// ---------------------------------------------------------------------------
// wheel3 report

unsigned long long strata_union_count(const std::array<unsigned long long, 64>& buckets,
                                      unsigned chosen) {
  unsigned long long sum = 0;
  for (unsigned i = 1; i < 64; ++i)
    if (i & chosen) sum += buckets[i];
  return sum;
}

void cmd_wheel3(const std::string& format) {
  const Wheel3Report rep = wheel3_report();
  header();
  if (format == "text") {
    std::cout << wheel3_text(rep);
    return;
  }
  if (format == "csv") {
    std::cout << wheel3_csv(rep);
    return;
  }
  // json: symbolic entries plus point counts at the two smallest primes
  const std::vector<uint32_t> primes = {2, 3};
  nlohmann::json out;
  out["schema"] = json_schema_version;
  out["command"] = "wheel3";
  out["components_display_order"] = wheel3_display_labels();
  std::array<std::array<unsigned long long, 64>, 2> buckets{};
  for (size_t pi = 0; pi < primes.size(); ++pi) buckets[pi] = count_strata(primes[pi]);
  nlohmann::json frames = nlohmann::json::array();
  nlohmann::json strata = nlohmann::json::array();
  for (const SweepEntry& e : rep.rows) {
    unsigned bits = 0;
    for (size_t i = 0; i < 6; ++i)
      if (e.mask[i] == '1') bits |= 1u << i;
    const SubspaceConfig cfg = config_from_selection(selection_from_mask(3, 0, e.mask));
    nlohmann::json fc, sc;
    fc["markers"] = wheel3_pretty_markers(e.markers);
    fc["bitmask"] = e.mask;
    fc["class_expanded"] = e.frame_over_cube.to_string();
    fc["class_factored_display"] = display_factor(e.frame_over_cube).to_string();
    sc["markers"] = fc["markers"];
    sc["bitmask"] = e.mask;
    sc["class_expanded"] = e.stratum.to_string();
    sc["class_factored_display"] = display_factor(e.stratum).to_string();
    for (size_t pi = 0; pi < primes.size(); ++pi) {
      const std::string key = std::to_string(primes[pi]);
      fc["oracle_counts"][key] = count_frames(cfg, primes[pi]);
      sc["oracle_counts"][key] = buckets[pi][bits];
    }
    frames.push_back(std::move(fc));
    strata.push_back(std::move(sc));
  }
  out["tables"]["frames_over_cube"] = std::move(frames);
  out["tables"]["strata"] = std::move(strata);
  auto summary = [&primes, &buckets](const LPoly& cls, unsigned chosen) {
    nlohmann::json s;
    s["class_expanded"] = cls.to_string();
    s["class_factored_display"] = display_factor(cls).to_string();
    for (size_t pi = 0; pi < primes.size(); ++pi) {
      const std::string key = std::to_string(primes[pi]);
      if (chosen == 0)
        s["oracle_counts"][key] = count_det_complement(3, primes[pi]);
      else
        s["oracle_counts"][key] = strata_union_count(buckets[pi], chosen);
    }
    return s;
  };
  unsigned five = 0;
  const std::string five_mask = wheel3_mask_from_markers("111110");
  for (size_t i = 0; i < 6; ++i)
    if (five_mask[i] == '1') five |= 1u << i;
  out["summary"]["whole_minus_det"] = summary(rep.total, 0);
  out["summary"]["divisor_union_minus_det"] = summary(rep.divisor_part, 63);
  out["summary"]["five_component_union_minus_det"] = summary(rep.five_part, five);
  std::cout << out.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// oracle commands

void cmd_oracle_wheel3(const std::vector<uint32_t>& primes, unsigned long long budget,
                       size_t threads) {
  header();
  std::cout << "oracle verify: wheel3 sweep\n";
  const std::array<LPoly, 64> cls = inclusion_exclusion_strata();
  size_t strata_checks = 0, strata_ok = 0;
  for (uint32_t q : primes) {
    const auto buckets = count_strata(q, budget);
    for (unsigned i = 0; i < 64; ++i) {
      ++strata_checks;
      if (cls[i].eval(Int(q)) == Int(static_cast<unsigned long>(buckets[i]))) {
        ++strata_ok;
      } else {
        std::cout << "stratum " << i << " at q=" << q << ": expected "
                  << cls[i].eval(Int(q)).get_str() << ", counted " << buckets[i]
                  << ", MISMATCH\n";
      }
    }
  }
  size_t frame_checks = 0, frame_ok = 0;
  for (unsigned bits = 0; bits < 64; ++bits) {
    std::string mask(6, '0');
    for (unsigned i = 0; i < 6; ++i)
      if (bits & (1u << i)) mask[i] = '1';
    const SubspaceConfig cfg = config_from_selection(selection_from_mask(3, 0, mask));
    CountRequest req;
    req.kind = CountKind::frame_locus;
    req.config = cfg;
    req.budget = budget;
    req.threads = threads;
    VerifyReport rep = verify_class(frame_class_r3(cfg), req, primes);
    ++frame_checks;
    if (rep.all_match) {
      ++frame_ok;
    } else {
      std::cout << "intersection " << mask << ": ";
      print_verify(rep);
    }
  }
  std::cout << "stratum checks: " << strata_ok << "/" << strata_checks << " match\n";
  std::cout << "intersection checks: " << frame_ok << "/" << frame_checks << " match\n";
  const bool all = strata_ok == strata_checks && frame_ok == frame_checks;
  std::cout << "all match: " << bool_str(all) << "\n";
  if (!all) throw_internal("oracle counts disagree with the symbolic classes");
}

void cmd_oracle_det(size_t loops, const std::vector<uint32_t>& primes, unsigned long long budget,
                    size_t threads) {
  header();
  std::cout << "oracle verify: det complement, loops " << loops << "\n";
  const LPoly cls = det_complement_class(loops, false);
  CountRequest req;
  req.kind = CountKind::det_complement;
  req.ell = loops;
  req.budget = budget;
  req.threads = threads;
  VerifyReport rep = verify_class(cls, req, primes);
  for (const PrimeCheck& pc : rep.primes) {
    std::cout << "q=" << pc.q << ": ";
    if (!pc.counted) {
      std::cout << "skipped (" << pc.note << ")\n";
      continue;
    }
    Int space(1);
    for (size_t k = 0; k < loops * loops; ++k) space *= pc.q;
    std::cout << "expected " << pc.expected.get_str() << ", counted " << pc.actual
              << (pc.match ? ", match" : ", MISMATCH") << " (" << space.get_str()
              << " candidate matrices)\n";
  }
  std::cout << "all match: " << bool_str(rep.all_match) << "\n";
  enforce_verify(rep);
}

void cmd_oracle_grf3(const std::vector<uint32_t>& primes, unsigned long long budget,
                     size_t threads) {
  header();
  std::cout << "oracle verify: closed-form frame expression\n";
  size_t reproduced = 0;
  bool healthy = true;
  for (const DiscrepancyFixture& fix : known_discrepancies()) {
    CountRequest req;
    req.kind = CountKind::frame_locus;
    req.config = fix.config;
    req.budget = budget;
    req.threads = threads;
    const VerifyReport rep_closed = verify_class(fix.reported, req, primes);
    const VerifyReport rep_actual = verify_class(fix.actual, req, primes);
    std::cout << "fixture '" << fix.name << "'\n";
    std::cout << "  closed form: " << display_factor(fix.reported).to_string() << "\n";
    std::cout << "  strata form: " << display_factor(fix.actual).to_string() << "\n";
    for (size_t i = 0; i < rep_closed.primes.size(); ++i) {
      const PrimeCheck& pc = rep_closed.primes[i];
      const PrimeCheck& pa = rep_actual.primes[i];
      std::cout << "  q=" << pc.q << ": ";
      if (!pc.counted) {
        std::cout << "skipped (" << pc.note << ")\n";
        continue;
      }
      std::cout << "closed form " << pc.expected.get_str() << ", strata form "
                << pa.expected.get_str() << ", counted " << pc.actual << " -> "
                << (pc.match ? "closed form agrees" : "count confirms the strata form") << "\n";
    }
    const bool ok = !rep_closed.all_match && rep_actual.all_match;
    if (ok) {
      ++reproduced;
      std::cout << "  registered fixture reproduced\n";
    } else {
      healthy = false;
      std::cout << "  FIXTURE STALE OR STRATA MISMATCH\n";
    }
  }
  std::cout << "fixtures reproduced: " << reproduced << "/" << known_discrepancies().size()
            << "\n";
  if (!healthy) throw_internal("fixture registry does not match the oracle");
}

// ---------------------------------------------------------------------------
// corpus generation

void cmd_corpus(const std::string& kind, size_t count, uint64_t seed, size_t max_edges) {
  header();
  std::mt19937_64 rng(seed);
  for (size_t k = 0; k < count; ++k) {
    FeynmanGraph g = kind == "planar" ? random_planar_graph(rng, max_edges)
                                      : random_connected_multigraph(rng, max_edges);
    g.name += "_" + std::to_string(k);
    std::cout << graph_to_json(g).dump() << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  try {
    CLI::App app{"graph polynomials, tau embeddings, and divisor classes"};
    app.fallthrough();
    app.add_flag("--no-header", g_no_header, "suppress the version line");
    app.require_subcommand(1);

    std::string path;
    std::string verify;
    std::string mask;
    std::string qlist = "2,3";
    std::string format = "text";
    std::string kind;
    bool rank_only = false;
    bool projective = false;
    bool mode_wheel3 = false, mode_det = false, mode_grf3 = false;
    size_t loops = 3, genus = 0, threads = 0, count = 1, max_edges = 0;
    unsigned long long budget = 0;
    uint64_t seed = 1;

    CLI::App* graph = app.add_subcommand("graph", "graph inspection and polynomials");
    graph->fallthrough();
    graph->require_subcommand(1);
    auto add_graph_sub = [&](const char* name, const char* desc, auto fn) {
      CLI::App* sub = graph->add_subcommand(name, desc);
      sub->fallthrough();
      sub->add_option("file", path, "graph file")->required();
      sub->callback([fn]() { fn(); });
      return sub;
    };
    add_graph_sub("validate", "parse and check a graph file", [&]() { cmd_graph_validate(path); });
    add_graph_sub("info", "summary of a graph file", [&]() { cmd_graph_info(path); });
    add_graph_sub("psi", "first graph polynomial by both routes",
                  [&]() { cmd_graph_psi(path); });
    add_graph_sub("pgamma", "momentum polynomial over cut sets",
                  [&]() { cmd_graph_pgamma(path); });
    add_graph_sub("connectivity", "connectivity flags", [&]() { cmd_graph_connectivity(path); });

    CLI::App* tau = app.add_subcommand("tau", "edge-variable to matrix-entry map");
    tau->fallthrough();
    tau->require_subcommand(1);
    CLI::App* tmat = tau->add_subcommand("matrix", "print the linear map");
    tmat->fallthrough();
    tmat->add_option("file", path, "graph file")->required();
    tmat->callback([&]() { cmd_tau_matrix(path); });
    CLI::App* tchk = tau->add_subcommand("check", "injectivity verdict and certificates");
    tchk->fallthrough();
    tchk->add_option("file", path, "graph file")->required();
    tchk->add_flag("--rank-only", rank_only, "skip certificates and the divisor selection");
    tchk->callback([&]() { cmd_tau_check(path, rank_only); });

    CLI::App* classes = app.add_subcommand("classes", "Grothendieck classes");
    classes->fallthrough();
    classes->require_subcommand(1);
    CLI::App* cdet = classes->add_subcommand("det-complement", "class of the determinant complement");
    cdet->fallthrough();
    cdet->add_option("--loops", loops, "matrix size")->required();
    cdet->add_flag("--projective", projective, "projective form");
    cdet->add_option("--verify", verify, "comma-separated primes for oracle counts");
    cdet->add_option("--budget", budget, "enumeration budget override");
    cdet->add_option("--threads", threads, "worker threads for enumeration");
    cdet->callback([&]() { cmd_classes_det(loops, projective, verify, budget, threads); });
    CLI::App* cfr = classes->add_subcommand("frames", "frame class of a component selection");
    cfr->fallthrough();
    cfr->add_option("--selection", mask,
                    "six characters over the components x12 x13 x23 row1 row2 row3")
        ->required();
    cfr->add_option("--loops", loops, "loop count (three)");
    cfr->add_option("--genus", genus, "genus (zero)");
    cfr->add_option("--verify", verify, "comma-separated primes for oracle counts");
    cfr->add_option("--budget", budget, "enumeration budget override");
    cfr->add_option("--threads", threads, "worker threads for enumeration");
    cfr->callback([&]() { cmd_classes_frames(mask, loops, genus, verify, budget, threads); });

    CLI::App* wheel = app.add_subcommand("wheel3", "sweep tables for the wheel with three spokes");
    wheel->fallthrough();
    wheel->add_option("format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    wheel->callback([&]() { cmd_wheel3(format); });

    CLI::App* oracle = app.add_subcommand("oracle", "finite-field point counts");
    oracle->fallthrough();
    oracle->require_subcommand(1);
    CLI::App* over = oracle->add_subcommand("verify", "compare classes against counts");
    over->fallthrough();
    over->add_flag("--wheel3", mode_wheel3, "all 64 strata and 64 intersections");
    over->add_flag("--det", mode_det, "determinant complement");
    over->add_flag("--grf3-closed", mode_grf3, "closed-form fixtures");
    over->add_option("--loops", loops, "matrix size for --det");
    over->add_option("--q", qlist, "comma-separated primes");
    over->add_option("--budget", budget, "enumeration budget override");
    over->add_option("--threads", threads, "worker threads for enumeration");
    over->callback([&]() {
      const std::vector<uint32_t> primes = parse_primes(qlist);
      const int picked = int(mode_wheel3) + int(mode_det) + int(mode_grf3);
      require_input(picked == 1, "pick exactly one of --wheel3, --det, --grf3-closed");
      if (mode_wheel3) cmd_oracle_wheel3(primes, budget, threads);
      if (mode_det) cmd_oracle_det(loops, primes, budget, threads);
      if (mode_grf3) cmd_oracle_grf3(primes, budget, threads);
    });

    CLI::App* corpus = app.add_subcommand("corpus", "seeded random graph generation");
    corpus->fallthrough();
    corpus->require_subcommand(1);
    auto add_corpus_sub = [&](const char* name, const char* desc, size_t cap) {
      CLI::App* sub = corpus->add_subcommand(name, desc);
      sub->fallthrough();
      sub->add_option("--count", count, "how many graphs")->required();
      sub->add_option("--seed", seed, "generator seed")->required();
      sub->add_option("--max-edges", max_edges, "edge cap per graph");
      sub->callback([&, name, cap]() {
        cmd_corpus(name, count, seed, max_edges ? max_edges : cap);
      });
      return sub;
    };
    add_corpus_sub("multigraph", "connected multigraphs, one JSON object per line", 10);
    add_corpus_sub("planar", "sphere-embedded graphs, one JSON object per line", 12);

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int rc = app.exit(e);
      return rc == 0 ? 0 : 2;
    }
    return 0;
  } catch (const psidet::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
