// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <iostream>
#include <map>
#include <set>

#include "adlv/lab.hpp"

using namespace adlv;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what
            << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// greedy reduced-word length via left descents
int greedy_length(ExtAffElem x) {
  const AffineData& ad = affine_data(*x.datum);
  int l = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (size_t i = 0; i < ad.simple_aff.size(); ++i)
      if (left_descent(x, int(i))) {
        x = left_mult_simple(x, int(i));
        ++l;
        moved = true;
        break;
      }
  }
  return l;
}

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  long mismatches = 0, cover_mismatches = 0, elements = 0;
  for (const char* name : {"A1", "A2", "B2"}) {
    RootDatum d = build_root_datum(parse_datum_name(name));
    auto ball = length_ball_all_classes(d, 8);
    std::map<int, std::vector<ExtAffElem>> by_len;
    for (const ExtAffElem& x : ball) by_len[length(x)].push_back(x);
    for (const ExtAffElem& x : ball) {
      ++elements;
      int l = length(x);
      if (l != greedy_length(x)) ++mismatches;
      if (l != int(inversions(x).size())) ++mismatches;
      if (l >= 1) {
        std::vector<ExtAffElem> expect;
        for (const ExtAffElem& z : by_len[l - 1])
          if (bruhat_leq(z, x)) expect.push_back(z);
        sort_elems(expect);
        if (covers_down(x) != expect) ++cover_mismatches;
      }
    }
  }
  double dt = seconds_since(t0);
  report(1, mismatches == 0 && cover_mismatches == 0 && dt < 60.0,
         "length/Bruhat kernel over A1,A2,B2 (l<=8): " + std::to_string(elements) +
             " elements, " + std::to_string(mismatches) + " length mismatches, " +
             std::to_string(cover_mismatches) + " cover mismatches, " +
             std::to_string(int(dt)) + "s");
}

void criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  RootDatum a1 = build_root_datum(parse_datum_name("A1"));
  bool size_ok = adm_set(a1, IVec::Ones(1)).size() == 3;
  long agree = 0, total = 0;
  for (const char* name : {"A2", "B2"}) {
    RootDatum d = build_root_datum(parse_datum_name(name));
    for (const IVec& lambda : enumerate_dominant(d, Rational(4))) {
      ++total;
      if (adm_set(d, lambda).elements == adm_set_by_ball_filter(d, lambda)) ++agree;
    }
  }
  double dt = seconds_since(t0);
  report(2, size_ok && agree == total && dt < 300.0,
         "|Adm(A1, omega)| = 3 and cover-closure == ball-filter on " +
             std::to_string(total) + " lambdas (A2/B2, height<=4), " +
             std::to_string(int(dt)) + "s");
}

struct SuiteOutcome {
  bool zero_failures = true;
  bool all_hit = true;
  std::string detail;
  Int instances = 0;
};

SuiteOutcome run_ids(const std::vector<std::string>& ids) {
  SuiteOutcome out;
  for (const std::string& id : ids) {
    CheckerConfig cfg;
    cfg.lemma_id = id;
    cfg.grid = default_grid();
    CheckReport rep = run_checker(cfg);
    out.instances += rep.universe;
    if (rep.failures > 0 || rep.status == "error" || rep.status == "fail") {
      out.zero_failures = false;
      out.detail += " " + id + "=" + rep.status;
      if (!rep.counterexamples.empty())
        out.detail += "[" + rep.counterexamples[0].key + "]";
    }
    if (rep.hits == 0) {
      out.all_hit = false;
      out.detail += " " + id + "=vacuous";
    }
  }
  return out;
}

void criterion_3() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteOutcome out = run_ids({"commute", "R1.1", "R1.2", "R1.3", "R4", "R-dist",
                              "LR", "conj"});
  double dt = seconds_since(t0);
  report(3, out.zero_failures && out.all_hit && dt < 900.0,
         "Appendix suite on the default grid: " + std::to_string(out.instances) +
             " instances, " + std::to_string(int(dt)) + "s" + out.detail);
}

void criterion_4() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteOutcome out = run_ids({"K-min.1", "K-min.2", "partial-conj", "semi.1",
                              "semi.2", "semi.3", "semi.4", "flat", "dominant.1",
                              "dominant.2", "dominant.3", "dominant.4", "dominant.5",
                              "min", "unique", "finite-seq", "Left", "permissible",
                              "existence", "non-empty"});
  double dt = seconds_since(t0);
  report(4, out.zero_failures && out.all_hit && dt < 1800.0,
         "section 1/3 suite on the default grid: " + std::to_string(out.instances) +
             " instances, " + std::to_string(int(dt)) + "s" + out.detail);
}

void criterion_5() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteOutcome out = run_ids({"orth.1", "orth.2", "orth.3", "line", "saturate",
                              "conneted", "pr", "anti.1", "anti.2", "anti.3",
                              "J1-decomp", "choice", "weak.1", "weak.2", "weak.3",
                              "weak.4", "type-I", "type-II.1", "type-II.2",
                              "type-II.3", "type-II.4", "c-set", "omega-orbit"});
  double dt = seconds_since(t0);
  // connectivity of the tail-arrow graph is the conneted checker itself
  report(5, out.zero_failures && dt < 2700.0,
         "section 5-7 suite on the default grid (incl. arrow-graph connectivity): " +
             std::to_string(out.instances) + " instances, " +
             std::to_string(int(dt)) + "s" + out.detail);
}

void criterion_6() {
  auto t0 = std::chrono::steady_clock::now();
  long checked = 0, bad = 0;
  bool a1_example = false, a2_example = false;
  for (const GridEntry& entry : default_grid()) {
    CheckerConfig cfg;
    cfg.grid = {entry};
    LabContext ctx(entry, cfg);
    for (const IVec& lambda : ctx.lambdas()) {
      for (CompInstance* inst : ctx.instances(lambda)) {
        if (!inst->norm_ok || !inst->hn.irreducible) continue;
        ++checked;
        try {
          Pi0Prediction p = pi0_prediction(ctx.datum(), ctx.sigma(), lambda,
                                           inst->nb, inst->hn);
          AbelianGroup expect = pi1_sigma_fixed(ctx.sigma());
          if (!p.consistency || !(p.group == expect)) ++bad;
          if (entry.sigma == "id" && datum_name(entry.datum) == "A1" &&
              lambda == ctx.datum().coroot_y[0] && p.order == 2 &&
              length(inst->b_raw) == 0 && eta_index(inst->b_raw) == 0)
            a1_example = true;
          if (entry.sigma == "flip" && datum_name(entry.datum) == "A2" &&
              p.order == 1)
            a2_example = true;
        } catch (const Error&) {
          ++bad;
        }
      }
    }
  }
  double dt = seconds_since(t0);
  report(6, bad == 0 && a1_example && a2_example && checked > 0,
         "pi0 identity on " + std::to_string(checked) +
             " irreducible instances (A1 order-2 and A2-flip order-1 examples "
             "included), " +
             std::to_string(int(dt)) + "s");
}

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  CheckerConfig cfg;
  cfg.lemma_id = "decomp";
  cfg.grid = default_grid();
  CheckReport rep = run_checker(cfg);
  double dt = seconds_since(t0);
  report(7, rep.status == "pass" && rep.hits > 0,
         "decomposition identity on " + std::to_string(rep.hits) +
             " (lambda, b) instances, " + std::to_string(int(dt)) + "s");
}

void criterion_8() {
  auto t0 = std::chrono::steady_clock::now();
  GridEntry d4{parse_datum_name("D4"), "triality", Rational(3), 8, -1};
  bool ok = true;
  std::string detail;
  for (const char* id : {"order3d.small", "order3d.large", "order3d.good",
                         "order3d.central", "order3d.full"}) {
    CheckerConfig cfg;
    cfg.lemma_id = id;
    cfg.grid = {d4};
    CheckReport rep = run_checker(cfg);
    if (rep.failures > 0 || rep.status == "fail" || rep.status == "error") {
      ok = false;
      detail += std::string(" ") + id + "=" + rep.status;
    }
  }
  double dt = seconds_since(t0);
  report(8, ok && dt < 3600.0,
         "order-3d hypothesis clauses on D4 (triality, l<=8, height<=3): zero "
         "counterexamples, " +
             std::to_string(int(dt)) + "s" + detail);
}

void criterion_9() {
  auto t0 = std::chrono::steady_clock::now();
  GridEntry a1{parse_datum_name("A1"), "id", Rational(3), 6, -1};
  GridEntry a2{parse_datum_name("A2"), "id", Rational(3), 6, -1};
  GridEntry a2f{parse_datum_name("A2"), "flip", Rational(3), 6, -1};
  GridEntry a3f{parse_datum_name("A3"), "flip", Rational(3), 6, -1};
  GridEntry a1x2{parse_datum_name("A1x2"), "shift", Rational(3), 6, -1};
  GridEntry a2x2{parse_datum_name("A2x2"), "twist", Rational(3), 5, -1};
  GridEntry d4{parse_datum_name("D4"), "triality", Rational(6), 8, -1};
  GridEntry d4big{parse_datum_name("D4"), "triality", Rational(9), 8, -1};
  std::map<std::string, GridEntry> special{
      {"LR", a2},          {"conj", a2},        {"orth.3", a2f},
      {"line", a2},        {"saturate", a2f},   {"type-I", a1x2},
      {"type-II.1", a2x2}, {"type-II.2", a2x2}, {"type-II.3", a2x2},
      {"type-II.4", a2f},  {"weak.1", d4},      {"weak.2", d4},
      {"weak.3", d4},      {"weak.4", d4},      {"pr", a2},
      {"J1-decomp", a2},   {"order3d.small", d4}, {"order3d.large", d4},
      {"order3d.good", d4big},  {"order3d.central", d4}, {"order3d.full", d4},
      {"dominant.5", a2},  {"existence", a2},   {"permissible", a2},
      {"choice", a2},      {"anti.1", a2},      {"anti.2", a2},
      {"anti.3", a2},      {"orth.1", a2},      {"orth.2", a2},
      {"c-set", a2f},      {"omega-orbit", a2f}};
  long twins = 0, silent = 0;
  std::string detail;
  for (const CheckerDef& def : checker_registry()) {
    CheckerConfig cfg;
    cfg.lemma_id = def.id;
    cfg.mutate = true;
    auto it = special.find(def.id);
    cfg.grid = {it != special.end() ? it->second : a2f};
    if (def.id == "commute" || def.id.rfind("R1", 0) == 0 || def.id == "R4" ||
        def.id == "R-dist")
      cfg.grid = {a1};
    ++twins;
    CheckReport rep = run_checker(cfg);
    if (rep.failures == 0) {
      ++silent;
      detail += " " + def.id;
    }
  }
  double dt = seconds_since(t0);
  report(9, silent == 0,
         "mutation self-test: " + std::to_string(twins) + " twins, " +
             std::to_string(silent) + " silent, " + std::to_string(int(dt)) + "s" +
             (detail.empty() ? "" : " silent:" + detail));
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << int(seconds_since(t0)) << "s total)" << std::endl;
  return failures == 0 ? 0 : 1;
}
