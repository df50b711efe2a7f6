#include <set>

#include "checker_util.hpp"

namespace adlv {

namespace {

using detail::kv;

std::string inst_key(LabContext& ctx, const CompInstance& inst) {
  return ctx.entry_name() + "|" + kv("l", print_ivec(inst.lambda)) +
         kv("b", print_elem(inst.b_raw));
}

template <typename Fn>
void for_instances(LabContext& ctx, Sink& sink, bool need_irreducible, Fn&& fn) {
  for (const IVec& lambda : ctx.lambdas()) {
    for (CompInstance* inst : ctx.instances(lambda)) {
      if (!inst->norm_ok || !inst->hn.nonempty || !inst->splus_ok) continue;
      if (need_irreducible && !inst->hn.irreducible) continue;
      fn(lambda, *inst);
      if (sink.stopped()) return;
    }
  }
}

const ArrowGraph& arrow_graph(LabContext& ctx, CompInstance& inst) {
  if (!inst.graph) {
    inst.graph = std::make_shared<ArrowGraph>(arrows(
        ctx.datum(), ctx.sigma(), inst.lambda, inst.nb.j, inst.splus));
  }
  return *inst.graph;
}

const J01Result& j01_of(LabContext& ctx, CompInstance& inst) {
  if (!inst.j01) {
    inst.j01 = std::make_shared<J01Result>(
        j0_j1(ctx.datum(), ctx.sigma(), inst.nb.j, inst.splus));
  }
  return *inst.j01;
}

// sigma-orbits of J-anti-dominant roots outside Phi_J (dedup by minimal index).
std::vector<std::vector<int>> antidom_orbits(LabContext& ctx, SimpleSet j,
                                             bool coroot_side) {
  const RootDatum& d = ctx.datum();
  std::vector<bool> in_levi(d.n_pos, false);
  for (int r : positive_roots_of_levi(d, j)) in_levi[r] = true;
  std::set<int> seen;
  std::vector<std::vector<int>> out;
  for (int r = 0; r < d.n_pos; ++r) {
    if (in_levi[r] || seen.count(r)) continue;
    bool anti = coroot_side ? detail::coroot_k_antidominant(d, j, r)
                            : detail::root_k_antidominant(d, j, r);
    if (!anti) continue;
    std::vector<int> orbit = ctx.sigma().root_orbit(r);
    bool all_ok = true;
    for (int t : orbit) {
      bool a2 = coroot_side ? detail::coroot_k_antidominant(d, j, t)
                            : detail::root_k_antidominant(d, j, t);
      if (in_levi[t] || !a2) all_ok = false;
    }
    for (int t : orbit) seen.insert(t);
    if (all_ok) out.push_back(orbit);
  }
  return out;
}

// --- decomposition and pi0 (engine identities) --------------------------------------

void check_decomp(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for (const IVec& lambda : ctx.lambdas()) {
    for (CompInstance* inst : ctx.instances(lambda)) {
      std::string key = inst_key(ctx, *inst);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      Json detail_json;
      if (!inst->norm_ok) {
        sink.result(key, true, false, Json{{"normalization", inst->norm_error}});
        continue;
      }
      if (!inst->hn.nonempty) {
        // realized inside Adm(lambda) yet flagged empty: engine contradiction
        sink.result(key, true, false, Json{{"hn", "nonempty=false for realized b"}});
        continue;
      }
      if (!inst->splus_ok) {
        sink.result(key, true, false, Json{{"splus", inst->splus_error}});
        continue;
      }
      const AdmissibleSet& adm = ctx.adm(lambda);
      std::vector<ExtAffElem> united;
      bool ok = true;
      for (const Pi1MJElem& x : inst->splus) {
        try {
          LeafResult leaf = s_leaf(d, sig, adm, x);
          united.insert(united.end(), leaf.leaf.begin(), leaf.leaf.end());
        } catch (const Error& e) {
          ok = false;
          detail_json["leaf_error"] = e.what();
        }
      }
      sort_elems(united);
      auto dup = std::adjacent_find(united.begin(), united.end());
      if (dup != united.end()) {
        ok = false;
        detail_json["overlap"] = print_elem(*dup);
      }
      std::vector<ExtAffElem> scan_set =
          s_set_by_scan(adm, ctx.scan(lambda), inst->binv);
      if (united != scan_set) {
        ok = false;
        detail_json["union_size"] = united.size();
        detail_json["scan_size"] = scan_set.size();
      }
      sink.result(key, true, ok, detail_json);
      if (sink.stopped()) return;
    }
  }
}

void check_pi0(LabContext& ctx, Sink& sink) {
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    (void)lambda;
    std::string key = inst_key(ctx, inst);
    if (!sink.pre(key)) return;
    bool concl = true;
    Json detail_json;
    try {
      Pi0Prediction p =
          pi0_prediction(ctx.datum(), ctx.sigma(), inst.lambda, inst.nb, inst.hn);
      detail_json["group"] = p.group.str();
      detail_json["order"] = p.order;
      concl = p.consistency;
    } catch (const Error& e) {
      concl = false;
      detail_json["error"] = e.what();
    }
    sink.result(key, true, concl, detail_json);
  });
}

// --- Prop 3.5 (unique) and Cor 3.10 (non-empty) --------------------------------------

void check_unique(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  std::vector<std::vector<int>> ks = ctx.sigma_orbits();
  ks.push_back(finite_simple_indices(d));
  for_instances(ctx, sink, false, [&](const IVec& lambda, CompInstance& inst) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    std::vector<ExtAffElem> sset =
        s_set_by_scan(adm, ctx.scan(lambda), inst.binv);
    for (const std::vector<int>& k : ks) {
      bool is_s0 = int(k.size()) == d.rank;
      for (const ExtAffElem& w : sset) {
        std::string key = inst_key(ctx, inst) + kv("K", detail::set_key(k)) +
                          elem_key(w);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        std::vector<ExtAffElem> reps;
        for (const ExtAffElem& y : sigma_class_by_parabolic(w, k, sig))
          if (is_min_coset_rep(y, k) && is_semi_standard(y, sig).semi_standard)
            reps.push_back(y);
        bool concl = reps.size() == 1;
        Json detail_json{{"reps", reps.size()}};
        if (concl && is_s0 && inst.hn.irreducible) {
          const ExtAffElem& w2 = reps[0];
          if (!adm.contains(w2)) {
            concl = false;
            detail_json["distinguished_outside_adm"] = true;
          } else {
            for (const std::vector<int>& r : ctx.sigma_orbits()) {
              if (distinct_test(w2, r, Side::Left, adm)) {
                concl = false;
                detail_json["left_distinct_orbit"] = detail::set_key(r);
                break;
              }
            }
          }
        }
        sink.result(key, true, concl, detail_json);
        if (sink.stopped()) return;
      }
    }
  });
}

void check_nonempty(LabContext& ctx, Sink& sink) {
  const Frobenius& sig = ctx.sigma();
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    for (const ExtAffElem& w :
         s_set_by_scan(adm, ctx.scan(lambda), inst.binv)) {
      std::string key = inst_key(ctx, inst) + elem_key(w);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      bool concl = is_min_coset_rep(w, finite_simple_indices(ctx.datum())) ||
                   !permissible(w, sig, adm).p_set.empty();
      sink.result(key, true, concl);
      if (sink.stopped()) return;
    }
  });
}

// --- section 5.2: saturate and conneted ----------------------------------------------

void check_saturate(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  const WeylGroup& g = d.weyl();
  const int dd = num_datum_components(d);
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    const ArrowGraph& graph = arrow_graph(ctx, inst);
    for (const ArrowEdge& e : graph.edges) {
      if (!e.tail || e.from == e.to) continue;
      std::string key = inst_key(ctx, inst) + kv("x", print_ivec(inst.splus[e.from].mu)) +
                        kv("x2", print_ivec(inst.splus[e.to].mu)) +
                        detail::root_key(d, e.gamma) + "|r" + std::to_string(e.r);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      const ExtAffElem& wx = inst.splus[e.from].rep;
      // delta runs over gamma itself and w_J(gamma); the full W_0-orbit
      // version of this claim has a desk counterexample (A2x2/twist, r = d).
      (void)g;
      WeylElem wj = detail::longest_in_parabolic(d, set_elements(inst.nb.j));
      std::set<int> w_orbit{e.gamma, wj.act_root(e.gamma)};
      bool concl = true;
      for (int delta : w_orbit) {
        for (int i = 1; i <= e.r - 1 && concl; ++i) {
          if (i % dd == 0 || (i - e.r) % dd == 0) continue;
          int di = sig.act_root_pow(delta, i);
          AffRoot a{di, 0};
          if (act_on_affroot(wx, a) != a) concl = false;
        }
        if (!concl) break;
      }
      sink.result(key, true, concl);
      if (sink.stopped()) return;
    }
  });
}

void check_conneted(LabContext& ctx, Sink& sink) {
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    std::string key = inst_key(ctx, inst);
    if (!sink.pre(key)) return;
    const ArrowGraph& graph = arrow_graph(ctx, inst);
    sink.result(key, true, graph.connected,
                Json{{"splus", inst.splus.size()}, {"edges", graph.edges.size()}});
  });
}

// --- section 6: pr, J1-decomp, weak ---------------------------------------------------

void check_pr(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    WeylElem wj = detail::longest_in_parabolic(d, set_elements(j));
    for (const Pi1MJElem& x : inst.splus) {
      for (const std::vector<int>& orbit : antidom_orbits(ctx, j, false)) {
        std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu)) +
                          detail::root_key(d, orbit[0]);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        QVec pr = project_orthogonal_to_levi(d, j, to_rational(x.mu));
        Rational total(0);
        bool exists = false;
        for (int a : orbit) {
          total += d.pairing<Rational>(a, pr);
          if (d.pairing<Int>(wj.act_root(a), x.mu) >= 1) exists = true;
        }
        sink.result(key, true, total > Rational(0) && exists,
                    Json{{"sum", total.str()}});
        if (sink.stopped()) return;
      }
    }
  });
}

void check_j1_decomp(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  for_instances(ctx, sink, false, [&](const IVec& lambda, CompInstance& inst) {
    const J01Result& j01 = j01_of(ctx, inst);
    for (size_t xi = 0; xi < inst.splus.size(); ++xi) {
      const Pi1MJElem& x = inst.splus[xi];
      std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu));
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      auto [x0, x1] = j01.per_x[xi];
      bool concl = (x0 & x1) == 0 && (x0 | x1) == inst.nb.j;
      // no adjacency between J_{x,0} and J_{x,1}
      for (int a : set_elements(x0))
        for (int b : set_elements(x1))
          if (d.adjacent(a, b)) concl = false;
      // mu_x central on J_{x,0}, and w~_x lives in W~_{J_{x,1}}
      for (int a : set_elements(x0))
        if (x.mu[a] != 0) concl = false;
      if (!weyl_in_levi(d, x1, x.w)) concl = false;
      if (length_in_levi(d, x1, x.rep) != 0) concl = false;
      sink.result(key, true, concl);
      if (sink.stopped()) return;
    }
  });
}

// sigma-orbits of connected components of J0, joined into K-sets.
std::vector<SimpleSet> j0_orbit_unions(LabContext& ctx, SimpleSet j0) {
  std::vector<SimpleSet> comps = levi_components(ctx.datum(), j0);
  std::vector<SimpleSet> out;
  std::vector<bool> used(comps.size(), false);
  for (size_t i = 0; i < comps.size(); ++i) {
    if (used[i]) continue;
    SimpleSet k = 0;
    SimpleSet cur = comps[i];
    while (true) {
      for (size_t t = 0; t < comps.size(); ++t)
        if (comps[t] == cur) used[t] = true;
      k |= cur;
      cur = ctx.sigma().act_set(cur);
      if (k & cur) break;
    }
    out.push_back(k);
  }
  return out;
}

void check_weak(LabContext& ctx, Sink& sink, int upto) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    const J01Result& j01 = j01_of(ctx, inst);
    for (SimpleSet k : j0_orbit_unions(ctx, j01.j0)) {
      if (k == 0) continue;
      std::string key =
          inst_key(ctx, inst) + kv("K", detail::set_key(set_elements(k)));
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      bool hyp = true;
      for (const Pi1MJElem& x2 : inst.splus) {
        for (int dlt : set_elements(k))
          if (preceq(d, IVec(x2.mu + d.coroot_y[dlt]), lambda)) hyp = false;
        if (!hyp) break;
      }
      bool concl = true;
      Json detail_json;
      if (hyp) {
        concl = false;
        for (const Pi1MJElem& x : inst.splus) {
          for (int beta = 0; beta < d.n_pos && !concl; ++beta) {
            bool outside = false;
            for (int t = 0; t < d.rank; ++t)
              if (d.root_x[beta][t] != 0 && !set_contains(j, t)) outside = true;
            if (!outside) continue;
            if (!detail::coroot_k_antidominant(d, j, beta) ||
                !detail::coroot_k_minuscule(d, j, beta))
              continue;
            // clause (1)
            if (!preceq(d, IVec(x.mu + d.coroot_y[beta]), lambda)) continue;
            bool noncentral = false;
            for (int a : set_elements(k))
              if (d.pairing<Int>(a, d.coroot_y[beta]) != 0) noncentral = true;
            if (!noncentral) continue;
            if (upto == 1) { concl = true; break; }
            // clause (2)
            PsiData psi = psi_data(d, sig, j, beta);
            int big = std::max(sig.order, psi.n) * 3;
            bool c2 = true;
            for (int i = 1; i <= big; ++i) {
              if (i % psi.n == 0) continue;
              int bi = sig.act_root_pow(beta, i);
              AffRoot a{bi, 0};
              if (act_on_affroot(x.rep, a) != a) { c2 = false; break; }
            }
            if (!c2) continue;
            if (upto == 2) { concl = true; break; }
            // clause (3)
            int bn = sig.act_root_pow(beta, psi.n);
            if (d.pairing<Int>(d.weyl().act_root(x.w, bn), x.mu) < 1) continue;
            if (upto == 3) { concl = true; break; }
            // clause (4): if sigma^n moves Psi_beta ∩ J0, the rigid E6 shape
            SimpleSet psi_j0 = 0;
            for (int a : set_elements(j01.j0))
              if (psi.component_of(d, a) == psi.component_of(d, beta))
                psi_j0 |= (1u << a);
            bool moved = false;
            for (int a : set_elements(psi_j0))
              if (sig.act_root_pow(a, psi.n) != a) moved = true;
            if (!moved) { concl = true; break; }
            // count the E6 shape structurally
            int comp = psi.component_of(d, beta);
            int comp_size = 0;
            for (size_t t = 0; t < psi.psi_pos.size(); ++t)
              if (psi.comp_id[t] == comp) ++comp_size;
            SimpleSet psi_j1 = 0;
            for (int a : set_elements(j01.j1))
              if (psi.component_of(d, a) == comp) psi_j1 |= (1u << a);
            bool c4 = int(psi.psi_pos.size()) == d.n_pos && comp_size == 36 &&
                      __builtin_popcount(psi_j0) == 2 &&
                      __builtin_popcount(psi_j1) == 2 &&
                      d.pairing<Int>(beta, x.mu) == -1;
            for (int t = 0; t < d.n_pos && c4; ++t)
              if (psi.component_of(d, t) != comp &&
                  d.pairing<Int>(t, x.mu) != 0)
                c4 = false;
            if (c4) { concl = true; break; }
          }
          if (concl) break;
        }
      }
      sink.result(key, hyp, concl, detail_json);
      if (sink.stopped()) return;
    }
  });
}

// --- section 7: orbit types ------------------------------------------------------------

void check_type1(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    for (const Pi1MJElem& x : inst.splus) {
      std::set<int> orbit_seen;
      for (int xi : c_set(d, sig, lambda, j, x)) {
        std::vector<int> orbit = sig.root_orbit(xi);
        int rep = *std::min_element(orbit.begin(), orbit.end());
        if (!orbit_seen.insert(rep).second) continue;
        std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu)) +
                          detail::root_key(d, rep);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool hyp = true, concl = true;
        Json detail_json;
        try {
          OrbitInfo info = orbit_info(d, sig, j, rep);
          hyp = info.type == 1;
          if (hyp) {
            concl = false;
            for (int gamma : info.orbit) {
              for (int r = 1; r <= info.n && !concl; ++r) {
                IVec target = levi_class_rep(
                    d, j,
                    IVec(x.mu - d.coroot_y[gamma] +
                         sig.act_pow(d.coroot_y[gamma], r)));
                for (const Pi1MJElem& x2 : inst.splus) {
                  if (x2.mu == target &&
                      arrow_holds(d, sig, lambda, j, x.mu, x2.mu, gamma, r)) {
                    concl = true;
                    break;
                  }
                }
              }
              if (concl) break;
            }
          }
        } catch (const Error& e) {
          concl = false;
          detail_json["error"] = e.what();
        }
        sink.result(key, hyp, concl, detail_json);
        if (sink.stopped()) return;
      }
    }
  });
}

// Lemma 7.3 clauses (1)-(3) for arrows with n+1 <= r <= 2n-1.
void check_type2_arrow(LabContext& ctx, Sink& sink, int clause) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    for (const std::vector<int>& orbit : antidom_orbits(ctx, j, true)) {
      bool minuscule = true;
      for (int t : orbit)
        if (!detail::coroot_k_minuscule(d, j, t)) minuscule = false;
      if (!minuscule) continue;
      OrbitInfo info;
      try {
        info = orbit_info(d, sig, j, orbit[0]);
      } catch (const Error&) {
        continue;
      }
      if (info.type != 2) continue;
      // theta-condition: mu_{x''} + vartheta^vee never ⪯ lambda
      bool theta_cond = true;
      for (const Pi1MJElem& x2 : inst.splus) {
        for (auto& [a, th] : info.vartheta)
          if (preceq(d, IVec(x2.mu + d.coroot_y[th]), lambda)) theta_cond = false;
      }
      if (!theta_cond) continue;
      for (size_t xi = 0; xi < inst.splus.size(); ++xi) {
        const Pi1MJElem& x = inst.splus[xi];
        for (int gamma : info.orbit) {
          for (int r = info.n + 1; r <= 2 * info.n - 1; ++r) {
            IVec target = levi_class_rep(
                d, j,
                IVec(x.mu - d.coroot_y[gamma] + sig.act_pow(d.coroot_y[gamma], r)));
            const Pi1MJElem* x2 = nullptr;
            for (const Pi1MJElem& cand : inst.splus)
              if (cand.mu == target) x2 = &cand;
            if (!x2) continue;
            std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu)) +
                              detail::root_key(d, gamma) + "|r" + std::to_string(r);
            if (!sink.pre(key)) {
              if (sink.stopped()) return;
              continue;
            }
            bool hyp = arrow_tail_holds(d, sig, lambda, j, x.mu, x2->mu, gamma, r);
            bool concl = true;
            if (hyp) {
              int theta = -1;
              for (auto& [a, th] : info.vartheta)
                if (a == gamma) theta = th;
              if (clause == 1) {
                for (int i = 1; i <= r - 1; ++i) {
                  if (i == r - info.n) continue;
                  int gi = sig.act_root_pow(gamma, i);
                  if (d.pairing<Int>(gi, x.mu) != 0 ||
                      d.weyl().act_root(x.w, gi) != gi)
                    concl = false;
                }
              } else if (clause == 2) {
                int gi = sig.act_root_pow(gamma, r - info.n);
                IVec diff = d.root_x[theta] - d.root_x[sig.act_root_pow(gamma, info.n)];
                int diff_root = d.index_of_root(diff);
                concl = diff_root >= 0 &&
                        d.weyl().act_root(x.w, gi) ==
                            sig.act_root_pow(diff_root, r - info.n) &&
                        d.pairing<Int>(d.weyl().act_root(x.w, gi), x.mu) == 1;
              } else {
                IVec diff = d.root_x[theta] - d.root_x[sig.act_root_pow(gamma, info.n)];
                int diff_root = d.index_of_root(diff);
                concl = diff_root >= 0 &&
                        d.pairing<Int>(d.weyl().act_root(x.w, diff_root), x.mu) >= 1;
              }
            }
            sink.result(key, hyp, concl);
            if (sink.stopped()) return;
          }
        }
      }
    }
  });
}

// Lemma 7.4: no tail arrow in range => some alpha in O satisfies (1)-(4).
void check_type2_stuck(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    for (const Pi1MJElem& x : inst.splus) {
      std::set<int> orbit_seen;
      for (int xi : c_set(d, sig, lambda, j, x)) {
        std::vector<int> orbit = sig.root_orbit(xi);
        int rep = *std::min_element(orbit.begin(), orbit.end());
        if (!orbit_seen.insert(rep).second) continue;
        OrbitInfo info;
        try {
          info = orbit_info(d, sig, j, rep);
        } catch (const Error&) {
          continue;
        }
        if (info.type != 2) continue;
        std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu)) +
                          detail::root_key(d, rep);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool theta_cond = true;
        for (const Pi1MJElem& x2 : inst.splus)
          for (auto& [a, th] : info.vartheta)
            if (preceq(d, IVec(x2.mu + d.coroot_y[th]), lambda)) theta_cond = false;
        bool has_arrow = false;
        for (int gamma : info.orbit) {
          for (int r = 1; r <= 2 * info.n - 1 && !has_arrow; ++r) {
            IVec target = levi_class_rep(
                d, j,
                IVec(x.mu - d.coroot_y[gamma] + sig.act_pow(d.coroot_y[gamma], r)));
            for (const Pi1MJElem& x2 : inst.splus)
              if (x2.mu == target &&
                  arrow_tail_holds(d, sig, lambda, j, x.mu, x2.mu, gamma, r))
                has_arrow = true;
          }
        }
        bool hyp = theta_cond && !has_arrow;
        bool concl = true;
        if (hyp) {
          concl = false;
          for (int alpha : info.orbit) {
            int theta = -1;
            for (auto& [a, th] : info.vartheta)
              if (a == alpha) theta = th;
            bool c1 = true;
            for (int i = 1; i <= 2 * info.n - 1; ++i) {
              if (i == info.n) continue;
              int ai = sig.act_root_pow(alpha, i);
              if (d.pairing<Int>(ai, x.mu) != 0 ||
                  d.weyl().act_root(x.w, ai) != ai)
                c1 = false;
            }
            if (!c1) continue;
            int an = sig.act_root_pow(alpha, info.n);
            IVec diff = d.root_x[theta] - d.root_x[alpha];
            int diff_root = d.index_of_root(diff);
            WeylElem wj = detail::longest_in_parabolic(d, set_elements(j));
            if (diff_root < 0 || d.weyl().act_root(x.w, an) != diff_root) continue;
            if (d.pairing<Int>(wj.act_root(an), x.mu) != 1) continue;
            Int p3 = d.pairing<Int>(d.weyl().act_root(x.w, theta),
                                    IVec(x.mu + d.coroot_y[alpha]));
            Int p4 = d.pairing<Int>(d.weyl().act_root(x.w, theta), x.mu);
            if (p3 >= 1 && p4 >= 1) { concl = true; break; }
          }
        }
        sink.result(key, hyp, concl);
        if (sink.stopped()) return;
      }
    }
  });
}

void check_cset(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    for (const Pi1MJElem& x : inst.splus) {
      std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu));
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      std::vector<int> cs = c_set(d, sig, lambda, j, x);
      std::set<int> cset(cs.begin(), cs.end());
      bool concl = true;
      std::vector<bool> in_levi(d.n_pos, false);
      for (int t : positive_roots_of_levi(d, j)) in_levi[t] = true;
      for (int r = 0; r < d.n_pos; ++r) {
        bool expected = !in_levi[r] &&
                        preceq(d, IVec(x.mu + d.coroot_y[r]), lambda) &&
                        classify_coweight(d, j, to_rational(d.coroot_y[r]))
                            .k_antidominant &&
                        strongly_k_minuscule(d, j, r);
        if (expected != (cset.count(r) > 0)) concl = false;
      }
      sink.result(key, true, concl, Json{{"size", cs.size()}});
      if (sink.stopped()) return;
    }
  });
}

void check_omega_orbit(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    const int dd = num_datum_components(d);
    for (const std::vector<int>& orbit : antidom_orbits(ctx, j, true)) {
      bool minuscule = true;
      for (int t : orbit)
        if (!detail::coroot_k_minuscule(d, j, t)) minuscule = false;
      if (!minuscule) continue;
      std::string key = inst_key(ctx, inst) + detail::root_key(d, orbit[0]);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      bool concl = true;
      Json detail_json;
      try {
        OrbitInfo info = orbit_info(ctx.datum(), ctx.sigma(), j, orbit[0]);
        concl = info.sigma_fixed && int(info.orbit.size()) == info.n * info.type &&
                (info.n == dd || info.n == 2 * dd || info.n == 3 * dd);
        detail_json["type"] = info.type;
        detail_json["n"] = info.n;
        if (info.simple_system_divergence)
          detail_json["simple_system_divergence"] = true;
      } catch (const Error& e) {
        concl = false;
        detail_json["error"] = e.what();
      }
      sink.result(key, true, concl, detail_json);
      if (sink.stopped()) return;
    }
  });
}

// --- section 8: order 3d ------------------------------------------------------------

struct Sec8Setup {
  bool valid = false;
  int beta = -1;           // the sigma^d-fixed simple root with J = O_beta
  std::vector<int> alpha;  // outer simple roots adjacent to beta
};

Sec8Setup sec8_setup(LabContext& ctx, SimpleSet j) {
  Sec8Setup s;
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  const int dd = num_datum_components(d);
  if (sig.order != 3 * dd) return s;
  std::vector<int> js = set_elements(j);
  if (js.empty()) return s;
  int beta = js[0];
  std::vector<int> orbit;
  for (int t = beta, first = 1; first || t != beta; first = 0) {
    orbit.push_back(t);
    t = sig.simple_perm[t];
  }
  std::sort(orbit.begin(), orbit.end());
  if (orbit != js) return s;
  if (sig.act_root_pow(beta, dd) != beta) return s;
  for (int a = 0; a < d.rank; ++a)
    if (d.adjacent(a, beta) && d.pairing<Int>(a, d.coroot_y[beta]) == -1)
      s.alpha.push_back(a);
  if (s.alpha.empty()) return s;
  s.beta = beta;
  s.valid = true;
  return s;
}

// Exceptional clause (*) of Lemma line for theta = w_J(gamma) at step r.
bool line_star(const RootDatum& d, const Frobenius& sig, const Pi1MJElem& x,
               int theta, int r) {
  int tr = sig.act_root_pow(theta, r);
  int wtr = d.weyl().act_root(x.w, tr);
  return d.pairing<Int>(theta, x.mu) == 1 &&
         d.pairing<Int>(wtr, x.mu) == -1 &&
         d.pairing<Int>(theta, d.coroot_y[wtr]) == -1;
}

template <typename Fn>
void sweep_sec8_arrows(LabContext& ctx, Sink& sink, int r_lo_mult, int r_hi_mult,
                       int r_lo_add, int r_hi_add, Fn&& fn) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  const int dd = num_datum_components(d);
  if (sig.order != 3 * dd) return;
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    Sec8Setup setup = sec8_setup(ctx, j);
    if (!setup.valid) return;
    const int r_lo = r_lo_mult * dd + r_lo_add, r_hi = r_hi_mult * dd + r_hi_add;
    // gamma runs over the sigma-orbit of the outer simple roots of the
    // sec-case component ("gamma = alpha as in 8.1").
    std::set<int> outer;
    for (int a : setup.alpha)
      for (int t : ctx.sigma().root_orbit(a)) outer.insert(t);
    for (const Pi1MJElem& x : inst.splus) {
      for (int gamma : outer) {
        if (!detail::root_k_antidominant(d, j, gamma)) continue;
        for (int r = std::max(1, r_lo); r <= r_hi; ++r) {
          IVec target = levi_class_rep(
              d, j,
              IVec(x.mu - d.coroot_y[gamma] + sig.act_pow(d.coroot_y[gamma], r)));
          const Pi1MJElem* x2 = nullptr;
          for (const Pi1MJElem& cand : inst.splus)
            if (cand.mu == target) x2 = &cand;
          if (!x2) continue;
          if (!arrow_holds(d, sig, lambda, j, x.mu, x2->mu, gamma, r)) continue;
          std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu)) +
                            detail::root_key(d, gamma) + "|r" + std::to_string(r);
          if (!sink.pre(key)) {
            if (sink.stopped()) return;
            continue;
          }
          fn(lambda, inst, setup, x, *x2, gamma, r, key);
          if (sink.stopped()) return;
        }
      }
    }
  });
}

void check_sec8_small(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  sweep_sec8_arrows(
      ctx, sink, 0, 1, 1, 0,  // 1 <= r <= d
      [&](const IVec& lambda, CompInstance& inst, const Sec8Setup& setup,
          const Pi1MJElem& x, const Pi1MJElem& x2, int gamma, int r,
          const std::string& key) {
        (void)x2;
        (void)setup;
        const AdmissibleSet& adm = ctx.adm(lambda);
        WeylElem wj = detail::longest_in_parabolic(d, set_elements(inst.nb.j));
        int theta = wj.act_root(gamma);
        // hypothesis: the arrow itself; the content fires in the (*) case
        bool star = line_star(d, sig, x, theta, r);
        bool concl = true;
        if (star) {
          const int dd = num_datum_components(d);
          concl = (r % dd == 0);
          int wtr = d.weyl().act_root(x.w, sig.act_root_pow(theta, r));
          int delta = d.index_of_root(IVec(d.root_x[theta] + d.root_x[wtr]));
          if (delta < 0) {
            concl = false;
          } else {
            for (int t : positive_roots_of_levi(d, inst.nb.j))
              if (d.pairing<Int>(t, d.coroot_y[delta]) != 0) concl = false;
            concl = concl &&
                    preceq(d, IVec(x.mu + d.coroot_y[delta]), lambda) &&
                    preceq(d, IVec(x.mu - d.coroot_y[delta]), lambda) &&
                    adm.contains(x.rep) &&
                    adm.contains(
                        compose(affine_reflection(d, AffRoot{delta, 1}), x.rep));
          }
        }
        sink.result(key, true, concl, Json{{"star", star}});
      });
}

void check_sec8_large(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  sweep_sec8_arrows(
      ctx, sink, 2, 3, 0, -1,  // 2d <= r <= 3d-1
      [&](const IVec& lambda, CompInstance& inst, const Sec8Setup& setup,
          const Pi1MJElem& x, const Pi1MJElem& x2, int gamma, int r,
          const std::string& key) {
        (void)x2;
        const AdmissibleSet& adm = ctx.adm(lambda);
        const int dd = num_datum_components(d);
        int beta = setup.beta;
        Int pg = d.pairing<Int>(gamma, x.mu);
        Int pb = d.pairing<Int>(beta, x.mu);
        bool hyp = pg >= 1;  // (1)
        if (r == 2 * dd) {   // (2)
          hyp = hyp && d.pairing<Int>(sig.act_root_pow(gamma, dd), x.mu) == 0;
        } else {  // (3)
          hyp = hyp && d.pairing<Int>(sig.act_root_pow(beta, r), x.mu) == 1 &&
                pb == 0;
          for (int i : {r - dd, r - 2 * dd, dd, 2 * dd})
            if (d.pairing<Int>(sig.act_root_pow(gamma, i), x.mu) != 0) hyp = false;
        }
        if (hyp) {  // (4)
          for (int i = 1; i <= r - 1; ++i) {
            if (i == r - dd || i == r - 2 * dd || i == dd || i == 2 * dd) continue;
            int gi = sig.act_root_pow(gamma, i);
            AffRoot a{gi, 0};
            if (act_on_affroot(x.rep, a) != a) hyp = false;
          }
        }
        bool concl = true;
        if (hyp) {
          IVec theta_x = d.root_x[gamma] + d.root_x[beta];
          int theta = d.index_of_root(theta_x);
          concl = theta >= 0 && adm.contains(x.rep);
          if (concl) {
            int tr = sig.act_root_pow(theta, r);
            concl = adm.contains(
                compose(x.rep, affine_reflection(d, AffRoot{tr, 1})));
          }
          if (concl && r == 2 * dd) {
            IVec theta3 =
                theta_x + d.root_x[sig.act_root_pow(gamma, dd)];
            Int lhs = 0, lhs3 = 0;
            for (int t = 0; t < d.rank; ++t) {
              lhs += theta_x[t] * x.mu[t];
              lhs3 += theta3[t] * x.mu[t];
            }
            concl = lhs == lhs3 && lhs >= pb + 1;
          }
          if (concl && r != 2 * dd) {
            IVec vt = d.root_x[gamma] + d.root_x[sig.act_root_pow(gamma, dd)] +
                      d.root_x[sig.act_root_pow(gamma, 2 * dd)] +
                      2 * d.root_x[beta];
            Int pv = 0;
            for (int t = 0; t < d.rank; ++t) pv += vt[t] * x.mu[t];
            concl = pv >= 1;
          }
        }
        sink.result(key, hyp, concl);
      });
}

void check_sec8_good(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  // The d+1 <= r <= 2d-1 window is empty for a single D4 component; the
  // shipped twin therefore drops the window and pairing hypotheses instead
  // of negating the conclusion (see the self-test).
  const bool dropped = sink.mutating();
  const int dd = num_datum_components(d);
  int lo_mult = dropped ? 0 : 1, hi_mult = dropped ? 3 : 2;
  int lo_add = dropped ? 1 : 1, hi_add = dropped ? -1 : -1;
  (void)dd;
  sweep_sec8_arrows(
      ctx, sink, lo_mult, hi_mult, lo_add, hi_add,
      [&](const IVec& lambda, CompInstance& inst, const Sec8Setup& setup,
          const Pi1MJElem& x, const Pi1MJElem& x2, int gamma, int r,
          const std::string& key) {
        (void)x2;
        const AdmissibleSet& adm = ctx.adm(lambda);
        const int ddc = num_datum_components(d);
        int beta = setup.beta;
        bool hyp = true;
        if (!dropped) {
          Int srb = d.pairing<Int>(sig.act_root_pow(beta, r), x.mu);
          hyp = d.pairing<Int>(beta, x.mu) == 0 && (srb == 0 || srb == 1) &&
                d.pairing<Int>(sig.act_root_pow(gamma, ddc), x.mu) == 0 &&
                d.pairing<Int>(sig.act_root_pow(gamma, r - ddc), x.mu) == 0 &&
                d.pairing<Int>(gamma, x.mu) >= 1;
          if (hyp) {
            for (int i = 1; i <= r - 1; ++i) {
              if (i == r - ddc || i == ddc) continue;
              int gi = sig.act_root_pow(gamma, i);
              AffRoot a{gi, 0};
              if (act_on_affroot(x.rep, a) != a) hyp = false;
            }
          }
        }
        bool concl = true;
        if (hyp) {
          int theta = d.index_of_root(IVec(d.root_x[gamma] + d.root_x[beta]));
          concl = theta >= 0;
          if (concl) {
            Int pt = d.pairing<Int>(theta, x.mu);
            int tr = sig.act_root_pow(theta, r);
            concl = pt >= 1 &&
                    adm.contains(
                        compose(x.rep, affine_reflection(d, AffRoot{tr, 1})));
          }
        }
        sink.result_raw(key, hyp, concl);
      });
}

void check_sec8_central(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  const int dd = num_datum_components(d);
  if (sig.order != 3 * dd) return;
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    Sec8Setup setup = sec8_setup(ctx, j);
    if (!setup.valid) return;
    for (int a : setup.alpha) {
      IVec delta_x = d.root_x[a] + d.root_x[setup.beta] +
                     d.root_x[sig.act_root_pow(a, 2 * dd)];
      int delta = d.index_of_root(delta_x);
      if (delta < 0) continue;
      for (const Pi1MJElem& x : inst.splus) {
        for (int k = 1; k <= 3 * dd - 1; ++k) {
          IVec target = levi_class_rep(
              d, j,
              IVec(x.mu - d.coroot_y[delta] + sig.act_pow(d.coroot_y[delta], k)));
          const Pi1MJElem* x2 = nullptr;
          for (const Pi1MJElem& cand : inst.splus)
            if (cand.mu == target) x2 = &cand;
          if (!x2 || !arrow_holds(d, sig, lambda, j, x.mu, x2->mu, delta, k))
            continue;
          std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu)) +
                            detail::root_key(d, delta) + "|k" + std::to_string(k);
          if (!sink.pre(key)) {
            if (sink.stopped()) return;
            continue;
          }
          bool concl = true;
          Json detail_json;
          try {
            OrbitInfo info = orbit_info(d, sig, j, delta);
            concl = info.type == 1;
            detail_json["type"] = info.type;
          } catch (const Error& e) {
            concl = false;
            detail_json["error"] = e.what();
          }
          sink.result(key, true, concl, detail_json);
          if (sink.stopped()) return;
        }
      }
    }
  });
}

void check_sec8_full(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  const int dd = num_datum_components(d);
  if (sig.order != 3 * dd) return;
  for_instances(ctx, sink, true, [&](const IVec& lambda, CompInstance& inst) {
    SimpleSet j = inst.nb.j;
    Sec8Setup setup = sec8_setup(ctx, j);
    if (!setup.valid) return;
    int beta = setup.beta;
    for (const Pi1MJElem& x : inst.splus) {
      for (int gamma : setup.alpha) {
        std::string key = inst_key(ctx, inst) + kv("x", print_ivec(x.mu)) +
                          detail::root_key(d, gamma);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool hyp = d.pairing<Int>(beta, x.mu) == 1 &&
                   d.pairing<Int>(sig.act_root_pow(gamma, dd), x.mu) == 0 &&
                   d.pairing<Int>(sig.act_root_pow(gamma, 2 * dd), x.mu) == 0 &&
                   d.pairing<Int>(gamma, x.mu) >= -1;
        if (hyp) {
          for (int i = 1; i <= 3 * dd && hyp; ++i) {
            if (i % dd == 0) continue;
            int gi = sig.act_root_pow(gamma, i);
            AffRoot a{gi, 0};
            if (act_on_affroot(x.rep, a) != a) hyp = false;
          }
        }
        bool concl = true;
        if (hyp) {
          IVec vt = d.root_x[gamma] + d.root_x[sig.act_root_pow(gamma, dd)] +
                    d.root_x[sig.act_root_pow(gamma, 2 * dd)] + 2 * d.root_x[beta];
          Int pv = 0;
          for (int t = 0; t < d.rank; ++t) pv += vt[t] * x.mu[t];
          concl = pv >= 1;
        }
        sink.result(key, hyp, concl);
        if (sink.stopped()) return;
      }
    }
  });
}

}  // namespace

void register_component_checkers(std::vector<CheckerDef>& out) {
  out.push_back({"decomp", "S_{lambda,b} = sqcup_x S_{lambda,b,x}", check_decomp,
                 true});
  out.push_back({"pi0", "Omega_J^sigma / (Omega_J^sigma ∩ ker(eta_G)) = pi1(G)^sigma",
                 check_pi0, true});
  out.push_back({"unique", "a unique semi-standard element", check_unique, true});
  out.push_back({"non-empty", "either w~ in ^{S_0} W~ or P_w~ != empty",
                 check_nonempty, true});
  out.push_back({"saturate", "w~_x sigma^i(delta) = sigma^i(delta)", check_saturate,
                 true});
  out.push_back({"conneted", "distinct elements x = x_0, x_1, ..., x_m",
                 check_conneted, true});
  out.push_back({"pr", "sum over O of <alpha, pr_J(mu_x)> > 0", check_pr, true});
  out.push_back({"J1-decomp", "J_{x,1} commutes with J_{x,0}, w~_x in W~_{J_{x,1}}",
                 check_j1_decomp, true});
  out.push_back({"weak.1", "mu_x + beta^vee ⪯ lambda, non-central on K",
                 [](LabContext& c, Sink& s) { check_weak(c, s, 1); }, true});
  out.push_back({"weak.2", "w~_x sigma^i(beta) = sigma^i(beta)",
                 [](LabContext& c, Sink& s) { check_weak(c, s, 2); }, true});
  out.push_back({"weak.3", "<w_x sigma^n(beta), mu_x> >= 1",
                 [](LabContext& c, Sink& s) { check_weak(c, s, 3); }, true});
  out.push_back({"weak.4", "Psi_beta is of type E_6",
                 [](LabContext& c, Sink& s) { check_weak(c, s, 4); }, true});
  out.push_back({"type-I", "there exist gamma, r, x' with an arrow", check_type1,
                 true});
  out.push_back({"type-II.1", "<sigma^i(gamma), mu_x> = 0 and w_x fixes them",
                 [](LabContext& c, Sink& s) { check_type2_arrow(c, s, 1); }, true});
  out.push_back({"type-II.2", "w_x sigma^{r-n}(gamma) = sigma^{r-n}(theta - sigma^n gamma)",
                 [](LabContext& c, Sink& s) { check_type2_arrow(c, s, 2); }, true});
  out.push_back({"type-II.3", "<w_x(theta - sigma^n(gamma)), mu_x> >= 1",
                 [](LabContext& c, Sink& s) { check_type2_arrow(c, s, 3); }, true});
  out.push_back({"type-II.4", "there exists alpha in O such that (1)-(4)",
                 check_type2_stuck, true});
  out.push_back({"c-set", "J-anti-dominant and strongly J-minuscule", check_cset,
                 true});
  out.push_back({"omega-orbit", "omega_O = sum of coroots over O, sigma-fixed",
                 check_omega_orbit, true});
  out.push_back({"order3d.small", "then r = d and mu_x ± delta^vee ⪯ lambda",
                 check_sec8_small, false});
  out.push_back({"order3d.large", "conditions (1)-(4) force the containments",
                 check_sec8_large, false});
  out.push_back({"order3d.good", "conditions (1)-(3) force the containments",
                 check_sec8_good, false});
  out.push_back({"order3d.central", "O_delta is of type I", check_sec8_central,
                 false});
  out.push_back({"order3d.full", "<vartheta, mu_x> >= 1", check_sec8_full, false});
}

}  // namespace adlv
