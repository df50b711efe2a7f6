#pragma once

#include <functional>
#include <map>
#include <memory>

#include "adlv/notation.hpp"

namespace adlv {

// --- configuration -------------------------------------------------------------

struct GridEntry {
  DatumSpec datum;
  std::string sigma;           // named automorphism ("id", "flip", ...)
  Rational lambda_height = 4;  // max coroot-height of dominant lambda
  int length_bound = 10;       // radius for ball sweeps
  int aux_bound = -1;          // checker-specific secondary bound (-1: default)
};

std::vector<GridEntry> default_grid();  // D19 desk-scale grid

struct CheckerConfig {
  std::string lemma_id;
  std::vector<GridEntry> grid;
  Int instance_cap = 1000000;
  std::uint64_t seed = 0;        // drives the sampled-mode subset
  bool exhaustive = true;
  int sample_per_mille = 250;    // kept fraction in sampled mode
  bool hypothesis_q = true;    // D21: recorded, never branched on
  bool mutate = false;         // twin mode: conclusions negated
  std::string only_key;        // replay: evaluate just this instance
  bool preceq_congruence = true;  // D1 toggle
  int max_counterexamples = 25;
};

struct Counterexample {
  std::string key;
  Json detail;
};

struct CheckReport {
  std::string lemma_id;
  std::string quote;
  Int universe = 0;   // instances enumerated
  Int hits = 0;       // instances where the hypothesis held
  Int failures = 0;   // hypothesis held, conclusion failed
  std::vector<Counterexample> counterexamples;
  std::string status;  // "pass", "fail", "vacuous", "budget", "error"
  std::string error;
  Json config_echo;
  double elapsed_s = 0;
};

// --- per-(datum, sigma) context with caches --------------------------------------

struct CompInstance {
  IVec lambda;
  ExtAffElem b_raw;        // canonical class representative inside Adm(lambda)
  NewtonKottwitz binv;
  bool norm_ok = false;
  std::string norm_error;
  NormalizedB nb;
  HNStatus hn;
  std::vector<Pi1MJElem> splus;
  bool splus_ok = false;
  std::string splus_error;
  std::shared_ptr<ArrowGraph> graph;  // filled on first use
  std::shared_ptr<J01Result> j01;
};

class LabContext {
public:
  LabContext(const GridEntry& entry, const CheckerConfig& cfg);

  const RootDatum& datum() const { return datum_; }
  const Frobenius& sigma() const { return sigma_; }
  const GridEntry& entry() const { return entry_; }
  const CheckerConfig& config() const { return cfg_; }
  std::string entry_name() const;

  const std::vector<IVec>& lambdas();
  const AdmissibleSet& adm(const IVec& lambda);
  const AdmScan& scan(const IVec& lambda);
  const std::vector<ExtAffElem>& ball(int radius);           // all eta classes
  const std::vector<ExtAffElem>& semistd_ball(int radius);   // semi-standard only
  std::vector<CompInstance*> instances(const IVec& lambda);  // one per b-class

  // sigma-orbits of S_0, as vectors of simple indices.
  const std::vector<std::vector<int>>& sigma_orbits();

private:
  GridEntry entry_;
  CheckerConfig cfg_;
  RootDatum datum_;
  Frobenius sigma_;
  std::vector<IVec> lambdas_;
  bool lambdas_done_ = false;
  std::map<std::vector<Int>, std::unique_ptr<AdmissibleSet>> adm_;
  std::map<std::vector<Int>, std::unique_ptr<AdmScan>> scan_;
  std::map<int, std::vector<ExtAffElem>> ball_;
  std::map<int, std::vector<ExtAffElem>> sball_;
  std::map<std::vector<Int>, std::vector<std::unique_ptr<CompInstance>>> inst_;
  std::vector<std::vector<int>> orbits_;
  bool orbits_done_ = false;
};

// --- sinks and checker plumbing ----------------------------------------------------

class Sink {
public:
  Sink(const CheckerConfig& cfg, CheckReport& rep) : cfg_(cfg), rep_(rep) {}

  // Call before evaluating an instance; false means skip (replay filter/cap).
  bool pre(const std::string& key);
  // Record the outcome. `hypothesis` false marks a universe-only instance.
  void result(const std::string& key, bool hypothesis, bool conclusion,
              const Json& detail = Json::object());
  // For checkers whose twin drops hypotheses instead of negating conclusions.
  void result_raw(const std::string& key, bool hypothesis, bool conclusion,
                  const Json& detail = Json::object());
  bool mutating() const;
  bool stopped() const { return stop_; }

private:
  const CheckerConfig& cfg_;
  CheckReport& rep_;
  bool stop_ = false;
};

struct CheckerDef {
  std::string id;
  std::string quote;  // verbatim anchor
  std::function<void(LabContext&, Sink&)> run;
  bool twin_shipped = true;  // mutated twin included in the self-test
};

const std::vector<CheckerDef>& checker_registry();
const CheckerDef& checker_by_id(const std::string& id);

CheckReport run_checker(const CheckerConfig& cfg);

struct SuiteResult {
  std::vector<CheckReport> reports;
  bool ok = true;  // no counterexamples, no errors
};

SuiteResult run_suite_json(const Json& suite);
Json reports_to_json(const std::vector<CheckReport>& reports, bool timings);
std::string reports_to_text(const std::vector<CheckReport>& reports, bool timings);
Json checker_config_echo(const CheckerConfig& cfg);

// Registration units.
void register_appendix_checkers(std::vector<CheckerDef>& out);
void register_section_checkers(std::vector<CheckerDef>& out);
void register_component_checkers(std::vector<CheckerDef>& out);

// Shared helpers for checker implementations.
std::string elem_key(const ExtAffElem& x);
int env_threads();

}  // namespace adlv
