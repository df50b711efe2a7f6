// Command-line surface: datum/adm/newton/components inspection, single
// checkers, and suite runs with JSON or text reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "adlv/lab.hpp"

namespace {

using namespace adlv;

RootDatum datum_from_options(const std::string& type_name,
                             const std::string& spec_path) {
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    require(in.good(), "ConfigParse", "cannot open " + spec_path);
    Json j = Json::parse(in);
    return build_root_datum(datum_spec_from_json(j));
  }
  require(!type_name.empty(), "ConfigParse", "need --type or --spec");
  return build_root_datum(parse_datum_name(type_name));
}

// --sigma accepts a name ("id", "flip", "triality", "shift", "twist",
// compositions like "shift+flip"), inline JSON, or a JSON file path.
Frobenius sigma_from_option(const RootDatum& d, const std::string& text) {
  if (!text.empty() && text[0] == '{')
    return frobenius_from_json(d, Json::parse(text));
  if (text.size() > 5 && text.substr(text.size() - 5) == ".json") {
    std::ifstream in(text);
    require(in.good(), "ConfigParse", "cannot open " + text);
    return frobenius_from_json(d, Json::parse(in));
  }
  return named_frobenius(d, text);
}

Json orbit_infos_json(const RootDatum& d, const Frobenius& sigma, SimpleSet j) {
  Json arr = Json::array();
  std::set<int> seen;
  for (int r = 0; r < d.n_pos; ++r) {
    bool levi = false;
    for (int t : positive_roots_of_levi(d, j))
      if (t == r) levi = true;
    if (levi || seen.count(r)) continue;
    bool anti = true, minuscule = true;
    for (int t : positive_roots_of_levi(d, j)) {
      Int p = d.pairing<Int>(t, d.coroot_y[r]);
      if (p > 0) anti = false;
      if (p > 1 || p < -1) minuscule = false;
    }
    std::vector<int> orbit = sigma.root_orbit(r);
    for (int t : orbit) seen.insert(t);
    if (!anti || !minuscule) continue;
    try {
      OrbitInfo info = orbit_info(d, sigma, j, r);
      Json o{{"root", print_ivec(d.root_x[r])},
             {"size", info.orbit.size()},
             {"n", info.n},
             {"type", info.type},
             {"omega_sigma_fixed", info.sigma_fixed}};
      if (info.simple_system_divergence) o["simple_system_divergence"] = true;
      arr.push_back(o);
    } catch (const Error& e) {
      arr.push_back(Json{{"root", print_ivec(d.root_x[r])}, {"error", e.what()}});
    }
  }
  return arr;
}

int cmd_components(const RootDatum& d, const Frobenius& sigma, const IVec& lambda,
                   const std::string& b_text) {
  ExtAffElem b = parse_elem(d, b_text);
  NormalizedB nb = levi_j_and_normalize(d, sigma, b);
  HNStatus hn = hn_status(d, sigma, lambda, nb.rep);
  Json rep{{"schema", "adlv-report/1"},
           {"datum", datum_spec_to_json(d.spec)},
           {"sigma", frobenius_to_json(sigma)},
           {"lambda", print_ivec(lambda)},
           {"b", print_elem(b)},
           {"b_normalized", print_elem(nb.rep)},
           {"J", set_elements(nb.j)},
           {"hn", {{"nonempty", hn.nonempty},
                   {"irreducible", hn.irreducible},
                   {"lambda_central", hn.lambda_central},
                   {"lambda_diamond", print_qvec(hn.lambda_diamond)},
                   {"defect", print_qvec(hn.defect)}}}};
  if (!hn.nonempty) {
    std::cout << rep.dump(2) << "\n";
    return 0;
  }
  std::vector<Pi1MJElem> splus = s_plus(d, sigma, lambda, nb);
  AdmissibleSet adm = adm_set(d, lambda);
  Json xs = Json::array();
  for (const Pi1MJElem& x : splus) {
    Json leaf_json = Json::array(), dist = Json::array();
    try {
      LeafResult leaf = s_leaf(d, sigma, adm, x);
      for (const ExtAffElem& y : leaf.leaf) leaf_json.push_back(print_elem(y));
      for (const ExtAffElem& y : leaf.distinguished) dist.push_back(print_elem(y));
    } catch (const Error& e) {
      leaf_json = Json{{"error", e.what()}};
    }
    xs.push_back(Json{{"mu", print_ivec(x.mu)},
                      {"rep", print_elem(x.rep)},
                      {"leaf", leaf_json},
                      {"distinguished", dist}});
  }
  rep["s_plus"] = xs;
  ArrowGraph graph = arrows(d, sigma, lambda, nb.j, splus);
  Json edges = Json::array();
  for (const ArrowEdge& e : graph.edges) {
    edges.push_back(Json{{"from", print_ivec(splus[e.from].mu)},
                         {"to", print_ivec(splus[e.to].mu)},
                         {"gamma", print_ivec(d.root_x[e.gamma])},
                         {"r", e.r},
                         {"tail", e.tail},
                         {"qualified", e.connectivity_qualified}});
  }
  rep["arrow_edges"] = edges;
  rep["arrow_connected"] = graph.connected;
  rep["orbit_infos"] = orbit_infos_json(d, sigma, nb.j);
  {
    Json orbits = Json::array();
    for (const auto& orb : sigma.simple_orbits()) {
      Json o = Json::array();
      for (int i : orb) o.push_back(i + 1);
      orbits.push_back(o);
    }
    rep["sigma_orbits"] = orbits;
  }
  if (hn.irreducible) {
    Pi0Prediction p = pi0_prediction(d, sigma, lambda, nb, hn);
    rep["pi0"] = Json{{"group", p.group.str()},
                      {"order", p.order},
                      {"consistency", p.consistency}};
  } else {
    rep["pi0"] = Json{{"discrete_fiber", hn.lambda_central}};
  }
  // decomposition cross-check
  AdmScan scan = scan_adm(adm, sigma);
  NewtonKottwitz binv = newton_point(nb.rep, sigma);
  std::vector<ExtAffElem> sset = s_set_by_scan(adm, scan, binv);
  std::vector<ExtAffElem> united;
  for (const Pi1MJElem& x : splus) {
    try {
      LeafResult leaf = s_leaf(d, sigma, adm, x);
      united.insert(united.end(), leaf.leaf.begin(), leaf.leaf.end());
    } catch (const Error&) {
    }
  }
  sort_elems(united);
  rep["consistency"] = united == sset;
  std::cout << rep.dump(2) << "\n";
  return united == sset ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adlv: affine Deligne-Lusztig combinatorics toolkit"};
  app.require_subcommand(1);

  std::string type_name, spec_path, sigma_name = "id", elem_text, b_text;
  std::string lambda_text, suite_path, json_out, only_key, lemma_id;
  bool list_elements = false, as_json = false, timings = false, mutate = false;
  bool sampled = false;
  std::uint64_t seed = 0;
  int sample_per_mille = 250;
  Int cap = 1000000;
  int length_bound = 10;
  Int lambda_height = 4;
  bool no_congruence = false;

  auto add_datum_opts = [&](CLI::App* cmd) {
    cmd->add_option("--type", type_name, "datum name, e.g. A2, B2, A1x2, D4");
    cmd->add_option("--spec", spec_path, "JSON datum spec file");
    cmd->add_option("--sigma", sigma_name, "automorphism: id, flip, triality, shift");
  };

  CLI::App* c_datum = app.add_subcommand("datum", "inspect a root datum");
  c_datum->add_option("spec", spec_path, "JSON datum spec file");
  c_datum->add_option("--type", type_name, "datum name");
  c_datum->add_option("--sigma", sigma_name, "also print sigma orbits and pi1 data");

  CLI::App* c_adm = app.add_subcommand("adm", "admissible set");
  add_datum_opts(c_adm);
  c_adm->add_option("--lambda", lambda_text, "coweight coordinates")->required();
  c_adm->add_flag("--list", list_elements, "print the elements");

  CLI::App* c_newton = app.add_subcommand("newton", "invariants of an element");
  add_datum_opts(c_newton);
  c_newton->add_option("--elem", elem_text, "element, e.g. t[1,0].s1")->required();

  CLI::App* c_comp = app.add_subcommand("components", "component report");
  add_datum_opts(c_comp);
  c_comp->add_option("--lambda", lambda_text)->required();
  c_comp->add_option("--b", b_text)->required();

  CLI::App* c_check = app.add_subcommand("check", "run one lemma checker");
  c_check->add_option("lemma", lemma_id, "checker id")->required();
  add_datum_opts(c_check);
  c_check->add_option("--lambda-height", lambda_height);
  c_check->add_option("--length-bound", length_bound);
  c_check->add_option("--cap", cap);
  c_check->add_option("--only", only_key, "replay a single instance key");
  c_check->add_flag("--mutate", mutate, "negate the conclusion (self-test)");
  c_check->add_flag("--sampled", sampled, "sampled mode (seeded subset)");
  c_check->add_option("--seed", seed, "seed for sampled mode");
  c_check->add_option("--sample-per-mille", sample_per_mille,
                      "kept fraction in sampled mode");
  c_check->add_flag("--json", as_json);
  c_check->add_flag("--timings", timings);
  c_check->add_flag("--no-preceq-congruence", no_congruence,
                    "drop the lattice congruence from ⪯ (see docs)");

  CLI::App* c_suite = app.add_subcommand("suite", "run a suite file");
  c_suite->add_option("file", suite_path)->required();
  c_suite->add_flag("--json", as_json);
  c_suite->add_option("--json-out", json_out, "write the JSON report here");
  c_suite->add_flag("--timings", timings);

  CLI::App* c_list = app.add_subcommand("list", "list registered checkers");

  try {
    app.parse(argc, argv);

    if (c_datum->parsed()) {
      RootDatum d = datum_from_options(type_name, spec_path);
      const AffineData& ad = affine_data(d);
      Json out{{"datum", datum_spec_to_json(d.spec)},
               {"rank", d.rank},
               {"positive_roots", d.n_pos},
               {"weyl_order", d.weyl().size()},
               {"pi1", quotient_group(d.rank, d.cartan_t).str()},
               {"omega_order", ad.omega.size()},
               {"simple_affine", ad.simple_aff.size()}};
      if (!sigma_name.empty() && sigma_name != "id") {
        Frobenius sigma = sigma_from_option(d, sigma_name);
        Json orbits = Json::array();
        for (const auto& orb : sigma.simple_orbits()) {
          Json o = Json::array();
          for (int i : orb) o.push_back(i + 1);
          orbits.push_back(o);
        }
        out["sigma"] = frobenius_to_json(sigma);
        out["sigma_orbits"] = orbits;
        out["pi1_sigma_fixed"] = pi1_sigma_fixed(sigma).str();
        out["pi1_sigma_coinvariants"] = pi1_sigma_coinvariants(sigma).str();
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (c_adm->parsed()) {
      RootDatum d = datum_from_options(type_name, spec_path);
      IVec lambda = parse_ivec(lambda_text, d.rank);
      AdmissibleSet adm = adm_set(d, lambda);
      Json out{{"lambda", print_ivec(lambda)},
               {"size", adm.size()},
               {"maximal", adm.maximal.size()}};
      if (list_elements) {
        Json arr = Json::array();
        for (const ExtAffElem& x : adm.elements) arr.push_back(print_elem(x));
        out["elements"] = arr;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (c_newton->parsed()) {
      RootDatum d = datum_from_options(type_name, spec_path);
      Frobenius sigma = sigma_from_option(d, sigma_name);
      ExtAffElem x = parse_elem(d, elem_text);
      NewtonKottwitz nk = newton_point(x, sigma);
      SemiStandardResult ss = is_semi_standard(x, sigma);
      Json out{{"elem", print_elem(x)},
               {"length", length(x)},
               {"newton", print_qvec(nk.newton)},
               {"nu_raw", print_qvec(ss.nu)},
               {"kottwitz", print_ivec(nk.kottwitz)},
               {"eta", print_ivec(eta(x))},
               {"semi_standard", ss.semi_standard},
               {"standard", ss.standard}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (c_comp->parsed()) {
      RootDatum d = datum_from_options(type_name, spec_path);
      Frobenius sigma = sigma_from_option(d, sigma_name);
      IVec lambda = parse_ivec(lambda_text, d.rank);
      return cmd_components(d, sigma, lambda, b_text);
    }
    if (c_check->parsed()) {
      CheckerConfig cfg;
      cfg.lemma_id = lemma_id;
      if (!type_name.empty()) {
        GridEntry e;
        e.datum = parse_datum_name(type_name);
        e.sigma = sigma_name;
        e.lambda_height = Rational(lambda_height);
        e.length_bound = length_bound;
        cfg.grid = {e};
      } else {
        cfg.grid = default_grid();
      }
      cfg.instance_cap = cap;
      cfg.mutate = mutate;
      cfg.only_key = only_key;
      cfg.exhaustive = !sampled;
      cfg.seed = seed;
      cfg.sample_per_mille = sample_per_mille;
      cfg.preceq_congruence = !no_congruence;
      CheckReport rep = run_checker(cfg);
      std::vector<CheckReport> reports{rep};
      if (as_json) std::cout << reports_to_json(reports, timings).dump(2) << "\n";
      else std::cout << reports_to_text(reports, timings);
      return rep.status == "fail" || rep.status == "error" ? 1 : 0;
    }
    if (c_suite->parsed()) {
      std::ifstream in(suite_path);
      require(in.good(), "ConfigParse", "cannot open " + suite_path);
      Json suite = Json::parse(in);
      SuiteResult res = run_suite_json(suite);
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << reports_to_json(res.reports, timings).dump(2) << "\n";
      }
      if (as_json) std::cout << reports_to_json(res.reports, timings).dump(2) << "\n";
      else std::cout << reports_to_text(res.reports, timings);
      return res.ok ? 0 : 1;
    }
    if (c_list->parsed()) {
      for (const CheckerDef& def : checker_registry())
        std::cout << def.id << "\t" << def.quote << "\n";
      return 0;
    }
  } catch (const adlv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
