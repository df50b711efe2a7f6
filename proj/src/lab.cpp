#include "adlv/lab.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace adlv {

int env_threads() {
  const char* v = std::getenv("ADLV_THREADS");
  if (!v) return 1;
  int n = std::atoi(v);
  return n < 1 ? 1 : n;
}

std::vector<GridEntry> default_grid() {
  auto spec = [](const std::string& name) { return parse_datum_name(name); };
  std::vector<GridEntry> g;
  g.push_back({spec("A1"), "id", Rational(4), 10, -1});
  g.push_back({spec("A2"), "id", Rational(4), 10, -1});
  g.push_back({spec("A3"), "id", Rational(4), 10, -1});
  g.push_back({spec("B2"), "id", Rational(4), 10, -1});
  g.push_back({spec("A1x2"), "shift", Rational(4), 10, -1});
  g.push_back({spec("A2"), "flip", Rational(4), 10, -1});
  g.push_back({spec("A3"), "flip", Rational(4), 10, -1});
  g.push_back({spec("D4"), "triality", Rational(3), 8, -1});
  return g;
}

// --- LabContext -----------------------------------------------------------------

LabContext::LabContext(const GridEntry& entry, const CheckerConfig& cfg)
    : entry_(entry), cfg_(cfg) {
  datum_ = build_root_datum(entry.datum);
  sigma_ = named_frobenius(datum_, entry.sigma);
}

std::string LabContext::entry_name() const {
  return datum_name(entry_.datum) + "/" + entry_.sigma;
}

const std::vector<IVec>& LabContext::lambdas() {
  if (!lambdas_done_) {
    lambdas_ = enumerate_dominant(datum_, entry_.lambda_height);
    lambdas_done_ = true;
  }
  return lambdas_;
}

const AdmissibleSet& LabContext::adm(const IVec& lambda) {
  std::vector<Int> key(lambda.data(), lambda.data() + lambda.size());
  auto it = adm_.find(key);
  if (it == adm_.end()) {
    it = adm_.emplace(key, std::make_unique<AdmissibleSet>(adm_set(datum_, lambda)))
             .first;
  }
  return *it->second;
}

const AdmScan& LabContext::scan(const IVec& lambda) {
  std::vector<Int> key(lambda.data(), lambda.data() + lambda.size());
  auto it = scan_.find(key);
  if (it == scan_.end()) {
    it = scan_.emplace(key, std::make_unique<AdmScan>(scan_adm(adm(lambda), sigma_)))
             .first;
  }
  return *it->second;
}

const std::vector<ExtAffElem>& LabContext::ball(int radius) {
  auto it = ball_.find(radius);
  if (it == ball_.end())
    it = ball_.emplace(radius, length_ball_all_classes(datum_, radius)).first;
  return it->second;
}

const std::vector<ExtAffElem>& LabContext::semistd_ball(int radius) {
  auto it = sball_.find(radius);
  if (it == sball_.end()) {
    std::vector<ExtAffElem> out;
    for (const ExtAffElem& x : ball(radius))
      if (is_semi_standard(x, sigma_).semi_standard) out.push_back(x);
    it = sball_.emplace(radius, std::move(out)).first;
  }
  return it->second;
}

std::vector<CompInstance*> LabContext::instances(const IVec& lambda) {
  std::vector<Int> key(lambda.data(), lambda.data() + lambda.size());
  auto it = inst_.find(key);
  if (it == inst_.end()) {
    std::vector<std::unique_ptr<CompInstance>> list;
    const AdmScan& sc = scan(lambda);
    for (const AdmScan::ClassInfo& cls : sc.classes) {
      auto inst = std::make_unique<CompInstance>();
      inst->lambda = lambda;
      inst->b_raw = cls.rep;
      inst->binv = cls.inv;
      try {
        inst->nb = levi_j_and_normalize(datum_, sigma_, cls.rep);
        inst->norm_ok = true;
      } catch (const Error& e) {
        inst->norm_error = e.what();
      }
      if (inst->norm_ok) {
        inst->hn = hn_status(datum_, sigma_, lambda, inst->nb.rep);
        if (inst->hn.nonempty) {
          try {
            inst->splus = s_plus(datum_, sigma_, lambda, inst->nb);
            inst->splus_ok = true;
          } catch (const Error& e) {
            inst->splus_error = e.what();
          }
        }
      }
      list.push_back(std::move(inst));
    }
    it = inst_.emplace(key, std::move(list)).first;
  }
  std::vector<CompInstance*> out;
  for (auto& p : it->second) out.push_back(p.get());
  return out;
}

const std::vector<std::vector<int>>& LabContext::sigma_orbits() {
  if (!orbits_done_) {
    orbits_ = sigma_.simple_orbits();
    orbits_done_ = true;
  }
  return orbits_;
}

// --- Sink -----------------------------------------------------------------------

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

bool Sink::pre(const std::string& key) {
  if (stop_) return false;
  if (!cfg_.only_key.empty() && key != cfg_.only_key) return false;
  if (!cfg_.exhaustive) {
    // deterministic subsample keyed on (instance, seed)
    std::uint64_t h = splitmix64(std::hash<std::string>()(key) ^ cfg_.seed);
    if (Int(h % 1000) >= cfg_.sample_per_mille) return false;
  }
  if (rep_.universe >= cfg_.instance_cap) {
    rep_.status = "budget";
    stop_ = true;
    return false;
  }
  ++rep_.universe;
  return true;
}

void Sink::result(const std::string& key, bool hypothesis, bool conclusion,
                  const Json& detail) {
  result_raw(key, hypothesis, cfg_.mutate && hypothesis ? !conclusion : conclusion,
             detail);
}

void Sink::result_raw(const std::string& key, bool hypothesis, bool conclusion,
                      const Json& detail) {
  if (!hypothesis) return;
  ++rep_.hits;
  if (!conclusion) {
    ++rep_.failures;
    if (Int(rep_.counterexamples.size()) < cfg_.max_counterexamples) {
      Json d = detail;
      d["key"] = key;
      rep_.counterexamples.push_back({key, d});
    }
    if (cfg_.mutate) stop_ = true;  // a twin only needs one witness
  }
}

bool Sink::mutating() const { return cfg_.mutate; }

// --- registry and runner -----------------------------------------------------------

const std::vector<CheckerDef>& checker_registry() {
  static const std::vector<CheckerDef> defs = [] {
    std::vector<CheckerDef> out;
    register_appendix_checkers(out);
    register_section_checkers(out);
    register_component_checkers(out);
    return out;
  }();
  return defs;
}

const CheckerDef& checker_by_id(const std::string& id) {
  for (const CheckerDef& def : checker_registry())
    if (def.id == id) return def;
  fail("UnknownLemma", "no checker with id '" + id + "'");
}

Json checker_config_echo(const CheckerConfig& cfg) {
  Json grid = Json::array();
  for (const GridEntry& e : cfg.grid) {
    grid.push_back({{"datum", datum_name(e.datum)},
                    {"sigma", e.sigma},
                    {"lambda_height", e.lambda_height.str()},
                    {"length_bound", e.length_bound},
                    {"aux_bound", e.aux_bound}});
  }
  return Json{{"lemma", cfg.lemma_id},
              {"grid", grid},
              {"instance_cap", cfg.instance_cap},
              {"mode", cfg.exhaustive ? "exhaustive" : "sampled"},
              {"seed", cfg.seed},
              {"sample_per_mille", cfg.sample_per_mille},
              {"hypothesis_q", cfg.hypothesis_q},
              {"mutate", cfg.mutate},
              {"preceq_congruence", cfg.preceq_congruence},
              {"only", cfg.only_key}};
}

CheckReport run_checker(const CheckerConfig& cfg) {
  const CheckerDef& def = checker_by_id(cfg.lemma_id);
  CheckReport rep;
  rep.lemma_id = cfg.lemma_id;
  rep.quote = def.quote;
  rep.config_echo = checker_config_echo(cfg);
  auto t0 = std::chrono::steady_clock::now();
  bool saved_congruence = preceq_congruence();
  set_preceq_congruence(cfg.preceq_congruence);
  Sink sink(cfg, rep);
  try {
    for (const GridEntry& entry : cfg.grid) {
      LabContext ctx(entry, cfg);
      def.run(ctx, sink);
      if (sink.stopped() && rep.status == "budget") break;
      if (cfg.mutate && rep.failures > 0) break;
    }
  } catch (const Error& e) {
    rep.status = "error";
    rep.error = e.what();
  }
  set_preceq_congruence(saved_congruence);
  if (cfg.mutate && rep.status != "error") {
    // a twin is healthy exactly when it finds counterexamples
    rep.status = rep.failures > 0 ? "twin-ok" : "twin-silent";
  } else if (rep.status.empty()) {
    if (rep.failures > 0) rep.status = "fail";
    else if (rep.hits == 0) rep.status = "vacuous";
    else rep.status = "pass";
  } else if (rep.status == "budget" && rep.failures > 0) {
    rep.status = "fail";
  }
  rep.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SuiteResult run_suite_json(const Json& suite) {
  SuiteResult out;
  require(suite.is_object(), "ConfigParse", "suite must be a JSON object");
  std::vector<GridEntry> grid = default_grid();
  if (suite.contains("grid")) {
    grid.clear();
    for (const auto& e : suite["grid"]) {
      GridEntry g;
      g.datum = e.contains("datum") && e["datum"].is_string()
                    ? parse_datum_name(e["datum"].get<std::string>())
                    : datum_spec_from_json(e.at("datum"));
      g.sigma = e.value("sigma", std::string("id"));
      if (e.contains("lambda_height")) g.lambda_height = Rational(e["lambda_height"].get<Int>());
      g.length_bound = e.value("length_bound", 10);
      g.aux_bound = e.value("aux_bound", -1);
      grid.push_back(g);
    }
  }
  require(suite.contains("checkers") && suite["checkers"].is_array(), "ConfigParse",
          "suite needs a checkers array");
  for (const auto& c : suite["checkers"]) {
    CheckerConfig cfg;
    cfg.grid = grid;
    if (c.is_string()) {
      cfg.lemma_id = c.get<std::string>();
    } else {
      cfg.lemma_id = c.at("lemma").get<std::string>();
      cfg.instance_cap = c.value("instance_cap", cfg.instance_cap);
      cfg.mutate = c.value("mutate", false);
      cfg.only_key = c.value("only", std::string());
      cfg.exhaustive = c.value("mode", std::string("exhaustive")) != "sampled";
      cfg.seed = c.value("seed", std::uint64_t(0));
      cfg.sample_per_mille = c.value("sample_per_mille", cfg.sample_per_mille);
      if (c.contains("grid")) {
        cfg.grid.clear();
        for (const auto& e : c["grid"]) {
          GridEntry g;
          g.datum = parse_datum_name(e.at("datum").get<std::string>());
          g.sigma = e.value("sigma", std::string("id"));
          if (e.contains("lambda_height"))
            g.lambda_height = Rational(e["lambda_height"].get<Int>());
          g.length_bound = e.value("length_bound", 10);
          g.aux_bound = e.value("aux_bound", -1);
          cfg.grid.push_back(g);
        }
      }
    }
    cfg.hypothesis_q = suite.value("hypothesis_q", true);
    cfg.instance_cap = suite.value("instance_cap", cfg.instance_cap);
    out.reports.push_back(run_checker(cfg));
    const CheckReport& r = out.reports.back();
    if (r.status == "fail" || r.status == "error" || r.status == "twin-silent")
      out.ok = false;
  }
  return out;
}

Json reports_to_json(const std::vector<CheckReport>& reports, bool timings) {
  Json arr = Json::array();
  Int total_universe = 0, total_failures = 0;
  for (const CheckReport& r : reports) {
    Json cex = Json::array();
    for (const Counterexample& c : r.counterexamples) cex.push_back(c.detail);
    Json jr{{"lemma", r.lemma_id},
            {"quote", r.quote},
            {"universe", r.universe},
            {"hits", r.hits},
            {"failures", r.failures},
            {"counterexamples", cex},
            {"status", r.status},
            {"config", r.config_echo}};
    if (!r.error.empty()) jr["error"] = r.error;
    if (timings) jr["elapsed_s"] = r.elapsed_s;
    arr.push_back(jr);
    total_universe += r.universe;
    total_failures += r.failures;
  }
  return Json{{"schema", "adlv-report/1"},
              {"toolkit", "adlv 1.0.0"},
              {"reports", arr},
              {"summary",
               {{"checkers", reports.size()},
                {"instances", total_universe},
                {"failures", total_failures}}}};
}

std::string reports_to_text(const std::vector<CheckReport>& reports, bool timings) {
  std::ostringstream os;
  os << "lemma                universe      hits  fail  status\n";
  for (const CheckReport& r : reports) {
    os << r.lemma_id;
    for (size_t i = r.lemma_id.size(); i < 20; ++i) os << ' ';
    std::string u = std::to_string(r.universe), h = std::to_string(r.hits),
                f = std::to_string(r.failures);
    for (size_t i = u.size(); i < 9; ++i) os << ' ';
    os << u << ' ';
    for (size_t i = h.size(); i < 9; ++i) os << ' ';
    os << h << ' ';
    for (size_t i = f.size(); i < 5; ++i) os << ' ';
    os << f << "  " << r.status;
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "  %.2fs", r.elapsed_s);
      os << buf;
    }
    if (!r.error.empty()) os << "  [" << r.error << "]";
    os << "\n";
  }
  Int u = 0, h = 0, f = 0;
  for (const CheckReport& r : reports) {
    u += r.universe;
    h += r.hits;
    f += r.failures;
  }
  os << "total: " << reports.size() << " checkers, " << u << " instances, " << h
     << " hits, " << f << " failures\n";
  return os.str();
}

std::string elem_key(const ExtAffElem& x) { return print_elem(x); }

}  // namespace adlv
