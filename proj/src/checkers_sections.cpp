#include <set>

#include "checker_util.hpp"

namespace adlv {

namespace {

using detail::kv;

// All pi1(M_K) classes whose canonical representative lies under lambda,
// i.e. all length-0 elements t^mu w of W~_K with mu ⪯ lambda.
std::vector<Pi1MJElem> levi_omega_universe(LabContext& ctx, const IVec& lambda,
                                           SimpleSet k, bool filter_preceq = true) {
  const RootDatum& d = ctx.datum();
  std::map<std::vector<Int>, Pi1MJElem> dedup;
  for (const IVec& mu : saturation_orbit(d, lambda)) {
    Pi1MJElem x = omega_rep(d, k, mu);
    if (filter_preceq && !preceq(d, x.mu, lambda)) continue;
    std::vector<Int> key(x.mu.data(), x.mu.data() + x.mu.size());
    dedup.emplace(key, x);
  }
  std::vector<Pi1MJElem> out;
  for (auto& [k2, v] : dedup) out.push_back(v);
  return out;
}

int exact_rank(const std::vector<QVec>& rows) {
  if (rows.empty()) return 0;
  QMat m(int(rows.size()), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) m.row(int(i)) = rows[i];
  int rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(rank));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(rank, col);
      m.row(r) -= f * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

// --- section 1 -------------------------------------------------------------------

void check_kmin1(LabContext& ctx, Sink& sink) {
  const AffineData& ad = affine_data(ctx.datum());
  for (const std::vector<int>& k : detail::spherical_affine_subsets(ctx.datum(), 3)) {
    if (k.empty()) continue;
    for (const ExtAffElem& w : ctx.ball(ctx.entry().length_bound)) {
      if (!is_min_coset_rep(w, k)) continue;
      for (size_t s = 0; s < ad.simple_aff.size(); ++s) {
        std::string key = ctx.entry_name() + "|" + kv("K", detail::set_key(k)) +
                          elem_key(w) + "|s" + std::to_string(s);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool hyp = !right_descent(w, int(s));
        bool concl = true;
        if (hyp) {
          ExtAffElem ws = right_mult_simple(w, int(s));
          concl = is_min_coset_rep(ws, k);
          if (!concl) {
            for (int t : k)
              if (ws == left_mult_simple(w, t)) { concl = true; break; }
          }
        }
        sink.result(key, hyp, concl);
        if (sink.stopped()) return;
      }
    }
  }
}

void check_kmin2(LabContext& ctx, Sink& sink) {
  for (const std::vector<int>& k : detail::spherical_affine_subsets(ctx.datum(), 2)) {
    if (k.empty()) continue;
    for (const ExtAffElem& w : ctx.ball(ctx.entry().length_bound)) {
      if (!is_min_coset_rep(w, k)) continue;
      std::string key =
          ctx.entry_name() + "|" + kv("K", detail::set_key(k)) + elem_key(w);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      int count = 0;
      for (const ExtAffElem& y : sigma_class_by_parabolic(w, k, ctx.sigma()))
        if (is_min_coset_rep(y, k)) ++count;
      sink.result(key, true, count == 1, Json{{"reps_in_KW", count}});
      if (sink.stopped()) return;
    }
  }
}

void check_partial_conj(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  std::vector<std::vector<int>> ks = detail::spherical_affine_subsets(d, 2);
  ks.push_back(finite_simple_indices(d));  // K = S_0
  for (const std::vector<int>& k : ks) {
    if (k.empty()) continue;
    std::vector<ExtAffElem> wk = detail::finite_parabolic(d, k);
    for (const ExtAffElem& w : ctx.ball(ctx.entry().length_bound)) {
      std::string key =
          ctx.entry_name() + "|" + kv("K", detail::set_key(k)) + elem_key(w);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      bool concl = true;
      Json detail_json;
      try {
        PartialConjResult res = partial_conjugation(w, k, sig);
        concl = is_min_coset_rep(res.x, k) && in_parabolic(res.u, res.i_set);
        // replay the trace
        ExtAffElem cur = w;
        for (auto& [s, e] : res.trace) {
          ExtAffElem moved = *conj_move(cur, s, sig, MoveKind::Arrow);
          if (moved != e || length(moved) > length(cur)) concl = false;
          cur = e;
        }
        if (cur != compose(res.u, res.x)) concl = false;
        if (length(compose(res.u, res.x)) != length(res.u) + length(res.x))
          concl = false;
        // uniqueness by exhausting the W_K-sigma-conjugacy class
        if (concl && wk.size() <= 64) {
          for (const ExtAffElem& v : wk) {
            ExtAffElem y = sigma_conj(v, w, sig);
            PartialConjResult r2 = partial_conjugation(y, k, sig);
            if (r2.x != res.x) {
              concl = false;
              detail_json["second_x"] = print_elem(r2.x);
              break;
            }
          }
        }
      } catch (const Error& e) {
        concl = false;
        detail_json["error"] = e.what();
      }
      sink.result(key, true, concl, detail_json);
      if (sink.stopped()) return;
    }
  }
}

void check_semi1(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  int zb = ctx.entry().aux_bound >= 0 ? ctx.entry().aux_bound : 3;
  for (const ExtAffElem& w : ctx.semistd_ball(ctx.entry().length_bound)) {
    QVec nu = newton_raw(w, sig);
    std::vector<int> lines;
    for (int r = 0; r < d.num_roots(); ++r)
      if (d.pairing<Rational>(r, nu).is_zero()) lines.push_back(r);
    for (const ExtAffElem& z : ctx.ball(zb)) {
      std::string key =
          ctx.entry_name() + "|" + elem_key(w) + "|z=" + elem_key(z);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      bool hyp = true;
      for (int r : lines) {
        AffRoot img = act_on_affroot(z, AffRoot{r, aff_floor(d, r)});
        if (!is_positive_affroot(d, img)) { hyp = false; break; }
      }
      bool concl = true;
      if (hyp) concl = is_semi_standard(sigma_conj(z, w, sig), sig).semi_standard;
      sink.result(key, hyp, concl);
      if (sink.stopped()) return;
    }
  }
}

void check_semi2(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for (const ExtAffElem& w : ctx.semistd_ball(ctx.entry().length_bound)) {
    std::string key = ctx.entry_name() + "|" + elem_key(w);
    if (!sink.pre(key)) {
      if (sink.stopped()) return;
      continue;
    }
    QVec nu = newton_raw(w, sig);
    QVec nu_bar = dominant_conjugate_word<Rational>(d, nu).first;
    SimpleSet j = levi_of_dominant(d, nu_bar);
    int count = 0;
    bool found_valid = false;
    for (WeylGroup::Id z : min_coset_reps(d, j)) {
      WeylElem ze{&d, z};
      if (ze.act(nu_bar) != nu) continue;
      ExtAffElem w2 = sigma_conj(from_weyl(ze.inverse()), w, sig);
      SemiStandardResult ss = is_semi_standard(w2, sig);
      if (ss.semi_standard && ss.standard) {
        ++count;
        found_valid = true;
      }
    }
    sink.result(key, true, found_valid && count == 1, Json{{"pairs", count}});
    if (sink.stopped()) return;
  }
}

void check_semi3(LabContext& ctx, Sink& sink) {
  const AffineData& ad = affine_data(ctx.datum());
  const Frobenius& sig = ctx.sigma();
  for (const ExtAffElem& w : ctx.semistd_ball(ctx.entry().length_bound)) {
    for (size_t s = 0; s < ad.simple_aff.size(); ++s) {
      std::string key =
          ctx.entry_name() + "|" + elem_key(w) + "|s" + std::to_string(s);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      bool hyp = left_descent(w, int(s)) || right_descent(w, sig.aff_perm[s]);
      bool concl = true;
      if (hyp) {
        ExtAffElem moved = compose(
            ad.simple_aff_elem[s], compose(w, ad.simple_aff_elem[sig.aff_perm[s]]));
        concl = is_semi_standard(moved, sig).semi_standard;
      }
      sink.result(key, hyp, concl);
      if (sink.stopped()) return;
    }
  }
}

// Weyl-group shadow of semi (4): the sigma-centralizer of w~ sits inside the
// Levi of nu_w~ (its finite parts stabilize nu).
void check_semi4(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  int yb = ctx.entry().aux_bound >= 0 ? ctx.entry().aux_bound : 4;
  for (const ExtAffElem& w : ctx.semistd_ball(ctx.entry().length_bound)) {
    QVec nu = newton_raw(w, sig);
    for (const ExtAffElem& y : ctx.ball(yb)) {
      std::string key =
          ctx.entry_name() + "|" + elem_key(w) + "|y=" + elem_key(y);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      bool hyp = sigma_conj(y, w, sig) == w;
      bool concl = true;
      if (hyp) concl = QVec(d.weyl().matrix(y.w).cast<Rational>() * nu) == nu;
      sink.result(key, hyp, concl);
      if (sink.stopped()) return;
    }
  }
}

// --- section 3.2: flat invariant ---------------------------------------------------

void check_flat(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for (const ExtAffElem& w : ctx.ball(ctx.entry().length_bound)) {
    IVec eta = dominant_conjugate_word<Int>(d, w.mu).first;
    FlatInvariant f = flat_invariant(w, sig, eta);
    IMat l = ws_linear(w, sig);
    std::vector<IVec> powers{w.mu};
    for (int i = 1; i < f.n_order; ++i) powers.push_back(IVec(l * powers.back()));
    for (int r = 0; r < d.num_roots(); ++r) {
      std::string key = ctx.entry_name() + "|" + elem_key(w) + "|" +
                        detail::root_key(d, r);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      int n = -1;
      for (int i = 0; i < f.n_order; ++i) {
        if (d.pairing<Int>(r, powers[i]) != 0) { n = i; break; }
      }
      bool hyp = n >= 0;
      bool concl = true;
      if (hyp) {
        Rational prod =
            d.pairing<Rational>(r, f.vec) * Rational(d.pairing<Int>(r, powers[n]));
        concl = prod > Rational(0);
      }
      sink.result(key, hyp, concl);
      if (sink.stopped()) return;
    }
  }
}

void check_dominant(LabContext& ctx, Sink& sink, int clause) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  const bool semis_only = clause == 2 || clause == 4;
  const std::vector<ExtAffElem>& universe =
      semis_only ? ctx.semistd_ball(ctx.entry().length_bound)
                 : ctx.ball(ctx.entry().length_bound);
  for (const ExtAffElem& w : universe) {
    IVec eta = dominant_conjugate_word<Int>(d, w.mu).first;
    FlatInvariant f = flat_invariant(w, sig, eta);
    IMat l = ws_linear(w, sig);
    if (clause == 1) {
      std::vector<IVec> powers{w.mu};
      for (int i = 1; i < f.n_order; ++i) powers.push_back(IVec(l * powers.back()));
      for (int r = 0; r < d.num_roots(); ++r) {
        std::string key = ctx.entry_name() + "|" + elem_key(w) + "|" +
                          detail::root_key(d, r);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool all_zero = true;
        for (const IVec& p : powers)
          if (d.pairing<Int>(r, p) != 0) { all_zero = false; break; }
        bool concl = d.pairing<Rational>(r, f.vec).is_zero() == all_zero;
        sink.result(key, true, concl);
        if (sink.stopped()) return;
      }
    } else if (clause == 2) {
      std::string key = ctx.entry_name() + "|" + elem_key(w);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      QVec nu = newton_raw(w, sig);
      bool concl = true;
      for (int r = 0; r < d.n_pos; ++r) {
        if (!d.pairing<Rational>(r, nu).is_zero()) continue;
        if (d.pairing<Rational>(r, f.vec) < Rational(0)) { concl = false; break; }
      }
      sink.result(key, true, concl);
      if (sink.stopped()) return;
    } else if (clause == 3) {
      const WeylGroup& g = d.weyl();
      for (int z = 0; z < g.size(); ++z) {
        std::string key = ctx.entry_name() + "|" + elem_key(w) + "|z" +
                          std::to_string(z);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        ExtAffElem w2 = sigma_conj(from_weyl(WeylElem{&d, WeylGroup::Id(z)}), w, sig);
        FlatInvariant f2 = flat_invariant(w2, sig, eta);
        bool concl =
            f2.vec == QVec(g.matrix(WeylGroup::Id(z)).cast<Rational>() * f.vec);
        sink.result(key, true, concl);
        if (sink.stopped()) return;
      }
    } else if (clause == 4) {
      std::string key = ctx.entry_name() + "|" + elem_key(w);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      bool concl = true;
      for (int r = 0; r < d.num_roots() && concl; ++r) {
        if (!d.pairing<Rational>(r, f.vec).is_zero()) continue;
        int img = d.weyl().act_root(w.w, sig.act_root(r));
        if (!d.pairing<Rational>(img, f.vec).is_zero()) { concl = false; break; }
        AffRoot fl{r, aff_floor(d, r)};
        AffRoot im = ws_act(w, sig, fl);
        if (is_positive_affroot(d, im) != is_positive_affroot(d, fl)) concl = false;
      }
      sink.result(key, true, concl);
      if (sink.stopped()) return;
    }
  }
}

void check_dominant5(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    for (const ExtAffElem& w : adm.elements) {
      IVec eta = dominant_conjugate_word<Int>(d, w.mu).first;
      FlatInvariant f = flat_invariant(w, sig, eta);
      PermissibleData p = permissible(w, sig, adm);
      for (int alpha : p.p_set) {
        std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                          elem_key(w) + "|" + detail::root_key(d, alpha);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        int m = 0;
        for (auto& [r, mr] : p.m_map)
          if (r == alpha) m = mr;
        bool concl = true;
        std::vector<QVec> roots;
        for (int i = 0; i >= 1 - m; --i) {
          AffRoot ai = ws_act_pow(w, sig, AffRoot{alpha, 0}, i);
          if (ai.k != 0 && i > 1 - m) concl = false;  // must stay finite
          if (d.pairing<Rational>(ai.root, f.vec) >= Rational(0)) concl = false;
          roots.push_back(to_rational(d.root_x[ai.root]));
        }
        if (exact_rank(roots) != m) concl = false;
        sink.result(key, true, concl);
        if (sink.stopped()) return;
      }
    }
  }
}

void check_min(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  const WeylGroup& g = d.weyl();
  for (const ExtAffElem& w : ctx.semistd_ball(ctx.entry().length_bound)) {
    std::string key = ctx.entry_name() + "|" + elem_key(w);
    if (!sink.pre(key)) {
      if (sink.stopped()) return;
      continue;
    }
    IVec eta = dominant_conjugate_word<Int>(d, w.mu).first;
    MinZ0Result res = min_z0(w, sig, eta);
    FlatInvariant f = flat_invariant(w, sig, eta);
    // brute-force minimality oracle over all of W_0
    int best_len = -1, best_count = 0;
    WeylGroup::Id best_id = 0;
    for (int z = 0; z < g.size(); ++z) {
      QVec img = g.matrix(WeylGroup::Id(z)).cast<Rational>() * f.vec;
      if (!is_dominant<Rational>(d, img)) continue;
      int len = g.length(WeylGroup::Id(z));
      if (best_len < 0 || len < best_len) {
        best_len = len;
        best_count = 1;
        best_id = WeylGroup::Id(z);
      } else if (len == best_len) {
        ++best_count;
      }
    }
    bool concl = best_count == 1 && best_id == res.z0.id &&
                 is_min_coset_rep(res.conjugated, finite_simple_indices(d));
    sink.result(key, true, concl,
                Json{{"minimal_count", best_count}, {"z0_len", best_len}});
    if (sink.stopped()) return;
  }
}

void check_finite_seq(LabContext& ctx, Sink& sink) {
  const Frobenius& sig = ctx.sigma();
  for (const std::vector<int>& k : detail::simple_subsets(ctx.datum(), 3)) {
    if (k.empty()) continue;
    for (const ExtAffElem& w : ctx.semistd_ball(ctx.entry().length_bound)) {
      std::string key =
          ctx.entry_name() + "|" + kv("K", detail::set_key(k)) + elem_key(w);
      if (!sink.pre(key)) {
        if (sink.stopped()) return;
        continue;
      }
      // DFS over the halfarrow move graph, cycle detection by color.
      std::unordered_map<ExtAffElem, int, ExtAffHash> color;  // 1 open, 2 done
      std::vector<std::pair<ExtAffElem, int>> stack{{w, 0}};
      bool cycle = false, budget_ok = true;
      color[w] = 1;
      while (!stack.empty() && !cycle && budget_ok) {
        auto& [cur, next_move] = stack.back();
        bool advanced = false;
        for (int mi = next_move; mi < int(k.size()); ++mi) {
          stack.back().second = mi + 1;
          auto moved = conj_move(cur, k[mi], sig, MoveKind::HalfArrow);
          if (!moved) continue;
          auto it = color.find(*moved);
          if (it == color.end()) {
            color[*moved] = 1;
            stack.push_back({*moved, 0});
            advanced = true;
            if (color.size() > 50000) budget_ok = false;
            break;
          }
          if (it->second == 1 && !(*moved == cur)) { cycle = true; break; }
          if (it->second == 1 && *moved == cur) { cycle = true; break; }
        }
        if (!advanced && !cycle) {
          color[stack.back().first] = 2;
          stack.pop_back();
        }
      }
      bool concl = budget_ok && !cycle;
      sink.result(key, true, concl, Json{{"reachable", color.size()}});
      if (sink.stopped()) return;
    }
  }
}

void check_left(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  std::vector<int> s0 = finite_simple_indices(d);
  for (const ExtAffElem& w : ctx.semistd_ball(ctx.entry().length_bound)) {
    std::string key = ctx.entry_name() + "|" + elem_key(w);
    if (!sink.pre(key)) {
      if (sink.stopped()) return;
      continue;
    }
    bool concl = true;
    Json detail_json;
    // the unique ^{S_0} W~ member of the W_0-sigma-conjugacy class
    std::vector<ExtAffElem> in_min;
    for (const ExtAffElem& y : sigma_class_by_parabolic(w, s0, sig))
      if (is_min_coset_rep(y, s0)) in_min.push_back(y);
    if (in_min.size() != 1) {
      concl = false;
      detail_json["class_min_reps"] = in_min.size();
    } else {
      ExtAffElem target = in_min[0];
      ExtAffElem cur = w;
      std::set<std::string> seen;
      int steps = 0;
      while (!is_min_coset_rep(cur, s0)) {
        if (!seen.insert(print_elem(cur)).second || ++steps > 4096) {
          concl = false;
          detail_json["loop"] = print_elem(cur);
          break;
        }
        // first sigma-orbit R with a strict left descent
        const std::vector<int>* r_pick = nullptr;
        for (const std::vector<int>& r : ctx.sigma_orbits()) {
          for (int s : r)
            if (left_descent(cur, s)) { r_pick = &r; break; }
          if (r_pick) break;
        }
        if (!r_pick) { concl = false; break; }
        std::vector<ExtAffElem> reps;
        for (const ExtAffElem& y : sigma_class_by_parabolic(cur, *r_pick, sig))
          if (is_min_coset_rep(y, *r_pick)) reps.push_back(y);
        if (reps.size() != 1 || !is_semi_standard(reps[0], sig).semi_standard) {
          concl = false;
          detail_json["step_reps"] = reps.size();
          break;
        }
        cur = reps[0];
      }
      if (concl && !(cur == target)) concl = false;
    }
    sink.result(key, true, concl, detail_json);
    if (sink.stopped()) return;
  }
}

void check_permissible_lemma(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    for (const std::vector<int>& r : ctx.sigma_orbits()) {
      WeylElem wr = detail::longest_in_parabolic(d, r);
      for (const ExtAffElem& w : adm.elements) {
        std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                          kv("R", detail::set_key(r)) + elem_key(w);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool hyp = distinct_test(w, r, Side::Left, adm);
        bool concl = true;
        Json detail_json;
        if (hyp) {
          ExtAffElem conj = compose(from_weyl(wr), compose(w, from_weyl(wr)));
          concl = adm.contains(conj) && distinct_test(conj, r, Side::Right, adm);
          if (concl && !permissible(w, sig, adm).p_set.empty()) {
            concl = !permissible(conj, sig, adm).p_set.empty();
            detail_json["case"] = "moreover";
          }
        }
        sink.result(key, hyp, concl, detail_json);
        if (sink.stopped()) return;
      }
    }
  }
}

void check_existence(LabContext& ctx, Sink& sink) {
  const Frobenius& sig = ctx.sigma();
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    const AdmScan& scan = ctx.scan(lambda);
    for (size_t i = 0; i < adm.elements.size(); ++i) {
      if (!scan.semistd[i]) continue;
      const ExtAffElem& w = adm.elements[i];
      for (const std::vector<int>& r : ctx.sigma_orbits()) {
        std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                          kv("R", detail::set_key(r)) + elem_key(w);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool hyp = !is_min_coset_rep(w, r) && !distinct_test(w, r, Side::Right, adm);
        bool concl = true;
        if (hyp) concl = !permissible(w, sig, adm).p_set.empty();
        sink.result(key, hyp, concl);
        if (sink.stopped()) return;
      }
    }
  }
}

// --- section 5.1: orth and line ----------------------------------------------------

struct OrthInstance {
  Pi1MJElem x;
  int gamma;
  int r;
  IVec mu_m_gv, mu_p_wsg, mu_m_gv_p_wsg;  // the three shifted vectors
};

template <typename Fn>
void sweep_orth(LabContext& ctx, Sink& sink, bool need_strongly, Fn&& fn) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  for (const IVec& lambda : ctx.lambdas()) {
    for (const std::vector<int>& kv_set : detail::simple_subsets(d, d.rank)) {
      SimpleSet k = set_of(kv_set);
      if (!sig.stabilizes(k)) continue;  // K is J or J_1 in context: sigma-stable
      for (const Pi1MJElem& x : levi_omega_universe(ctx, lambda, k)) {
        for (int gamma = 0; gamma < d.n_pos; ++gamma) {
          bool in_levi = detail::coroot_k_dominant(d, k, gamma) &&
                         detail::coroot_k_minuscule(d, k, gamma);
          if (!in_levi) continue;
          bool outside = false;
          for (int t = 0; t < d.rank; ++t)
            if (d.root_x[gamma][t] != 0 && !set_contains(k, t)) outside = true;
          if (!outside) continue;
          if (need_strongly && !strongly_k_minuscule(d, k, gamma)) continue;
          for (int r = 0; r < sig.order; ++r) {
            OrthInstance inst;
            inst.x = x;
            inst.gamma = gamma;
            inst.r = r;
            IVec gv = d.coroot_y[gamma];
            IVec wsg = d.weyl().matrix(x.w) * sig.act_pow(gv, r);
            inst.mu_m_gv = x.mu - gv;
            inst.mu_p_wsg = x.mu + wsg;
            inst.mu_m_gv_p_wsg = x.mu - gv + wsg;
            if (!preceq(d, inst.mu_m_gv, lambda) ||
                !preceq(d, inst.mu_p_wsg, lambda) ||
                !preceq(d, inst.mu_m_gv_p_wsg, lambda))
              continue;
            std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                              kv("K", detail::set_key(kv_set)) + elem_key(x.rep) +
                              "|" + detail::root_key(d, gamma) + "|r" +
                              std::to_string(r);
            if (!sink.pre(key)) {
              if (sink.stopped()) return;
              continue;
            }
            fn(lambda, k, inst, key);
            if (sink.stopped()) return;
          }
        }
      }
    }
  }
}

void check_orth(LabContext& ctx, Sink& sink, int clause) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  sweep_orth(ctx, sink, false,
             [&](const IVec& lambda, SimpleSet k, const OrthInstance& inst,
                 const std::string& key) {
               const AdmissibleSet& adm = ctx.adm(lambda);
               if (clause == 1) {
                 bool concl = true;
                 for (const IVec* v :
                      {&inst.mu_m_gv, &inst.mu_p_wsg, &inst.mu_m_gv_p_wsg}) {
                   if (!classify_coweight(d, k, to_rational(*v)).k_minuscule)
                     concl = false;
                 }
                 sink.result(key, true, concl);
               } else if (clause == 2) {
                 ExtAffElem s_g = affine_reflection(d, AffRoot{inst.gamma, 1});
                 ExtAffElem s_gr = affine_reflection(
                     d, AffRoot{sig.act_root_pow(inst.gamma, inst.r), 1});
                 bool concl = adm.contains(inst.x.rep) &&
                              adm.contains(compose(s_g, inst.x.rep)) &&
                              adm.contains(compose(inst.x.rep, s_gr)) &&
                              adm.contains(compose(s_g, compose(inst.x.rep, s_g)));
                 sink.result(key, true, concl);
               } else {
                 int gr = sig.act_root_pow(inst.gamma, inst.r);
                 IVec wsg = IVec(d.weyl().matrix(inst.x.w) *
                                 IVec(d.coroot_y[gr]));
                 // -<w s^r(gamma), mu> <= 1 and <gamma, mu> <= 1
                 int wsg_root = d.weyl().act_root(inst.x.w, gr);
                 bool hyp = gr != inst.gamma &&
                            -d.pairing<Int>(wsg_root, inst.x.mu) <= 1 &&
                            d.pairing<Int>(inst.gamma, inst.x.mu) <= 1;
                 (void)wsg;
                 bool concl = true;
                 if (hyp) {
                   ExtAffElem s_g = affine_reflection(d, AffRoot{inst.gamma, 1});
                   ExtAffElem s_gr = affine_reflection(d, AffRoot{gr, 1});
                   concl = adm.contains(compose(s_g, compose(inst.x.rep, s_gr)));
                 }
                 sink.result(key, hyp, concl);
               }
             });
}

void check_line(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  const Frobenius& sig = ctx.sigma();
  sweep_orth(
      ctx, sink, true,
      [&](const IVec& lambda, SimpleSet k, const OrthInstance& inst,
          const std::string& key) {
        int gr = sig.act_root_pow(inst.gamma, inst.r);
        int wsg_root = d.weyl().act_root(inst.x.w, gr);
        // (a) the rank-2 subsystem spanned by gamma, w sigma^r(gamma)
        IMat span(d.rank, 2);
        span.col(0) = d.root_x[inst.gamma];
        span.col(1) = d.root_x[wsg_root];
        int psi_pos = 0;
        for (int t = 0; t < d.n_pos; ++t)
          if (lattice_contains(span, d.root_x[t])) ++psi_pos;
        bool concl = psi_pos <= 3;
        Json detail_json{{"psi_pos", psi_pos}};
        // (*) exceptional clause
        Int pg = d.pairing<Int>(inst.gamma, inst.x.mu);
        Int pw = d.pairing<Int>(wsg_root, inst.x.mu);
        Int cross = d.pairing<Int>(inst.gamma, d.coroot_y[wsg_root]);
        bool star = pg == 1 && pw == -1 && cross == -1;
        detail_json["star"] = star;
        if (star && concl) {
          Pi1MJElem w2 = omega_rep(d, k, inst.mu_m_gv_p_wsg);
          concl = concl && gr != inst.gamma && !(w2.rep == inst.x.rep);
          IVec sum_x = d.root_x[inst.gamma] + d.root_x[wsg_root];
          int sum_root = d.index_of_root(sum_x);
          if (sum_root < 0) {
            concl = false;
          } else {
            concl = concl &&
                    preceq(d, IVec(inst.x.mu + d.coroot_y[sum_root]), lambda) &&
                    preceq(d, IVec(inst.x.mu - d.coroot_y[sum_root]), lambda);
            // <w'(gamma), mu'> <= -2
            int wg2 = d.weyl().act_root(w2.w, inst.gamma);
            concl = concl && d.pairing<Int>(wg2, w2.mu) <= -2;
          }
        }
        sink.result(key, true, concl, detail_json);
      });
}

// --- section 6: anti and choice -----------------------------------------------------

void check_anti(LabContext& ctx, Sink& sink, int clause) {
  const RootDatum& d = ctx.datum();
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    for (const std::vector<int>& kv_set : detail::simple_subsets(d, d.rank)) {
      SimpleSet k = set_of(kv_set);
      // universe of Omega_K classes: saturation reps together with their
      // alpha-shifts (so the hypotheses of (1)/(2) can fire).
      std::map<std::vector<Int>, Pi1MJElem> xs;
      for (const IVec& mu : saturation_orbit(d, lambda)) {
        for (int a = -1; a < d.n_pos; ++a) {
          IVec v = mu;
          if (a >= 0) v -= d.coroot_y[a];
          Pi1MJElem x = omega_rep(d, k, v);
          std::vector<Int> key(x.mu.data(), x.mu.data() + x.mu.size());
          xs.emplace(key, x);
        }
      }
      for (auto& [unused, x] : xs) {
        (void)unused;
        if (!preceq(d, x.mu, lambda)) continue;  // standing: mu ⪯ lambda
        if (clause == 3) {
          std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                            kv("K", detail::set_key(kv_set)) + elem_key(x.rep);
          if (!sink.pre(key)) {
            if (sink.stopped()) return;
            continue;
          }
          bool hyp = adm.contains(x.rep);
          bool concl = true;
          if (hyp) {
            // finite part of W~^K; the unbounded affine version is false
            const WeylGroup& g = d.weyl();
            for (int z = 0; z < g.size(); ++z) {
              bool in_wk = true;
              for (int s : kv_set)
                if (g.act_root(WeylGroup::Id(z), s) >= d.n_pos) in_wk = false;
              if (!in_wk) continue;
              ExtAffElem ze = from_weyl(WeylElem{&d, WeylGroup::Id(z)});
              if (!adm.contains(compose(ze, compose(x.rep, invert(ze))))) {
                concl = false;
                break;
              }
            }
          }
          sink.result(key, hyp, concl);
          if (sink.stopped()) return;
          continue;
        }
        for (int a = 0; a < d.n_pos; ++a) {
          if (!detail::root_k_antidominant(d, k, a)) continue;
          if (d.weyl().act_root(x.w, a) != a) continue;  // w(alpha) = alpha
          std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                            kv("K", detail::set_key(kv_set)) + elem_key(x.rep) +
                            "|" + detail::root_key(d, a);
          if (!sink.pre(key)) {
            if (sink.stopped()) return;
            continue;
          }
          bool hyp, concl = true;
          if (clause == 1) {
            // mu + alpha^vee ⪯ lambda: the conjugates with that translation part
            hyp = preceq(d, IVec(x.mu + d.coroot_y[a]), lambda);
            if (hyp)
              concl = adm.contains(
                          compose(x.rep, affine_reflection(d, AffRoot{a, 1}))) &&
                      adm.contains(
                          compose(from_weyl(weyl_reflection(d, a)), x.rep));
          } else {
            hyp = preceq(d, IVec(x.mu - d.coroot_y[a]), lambda);
            if (hyp)
              concl = adm.contains(
                          compose(affine_reflection(d, AffRoot{a, 1}), x.rep)) &&
                      adm.contains(
                          compose(x.rep, from_weyl(weyl_reflection(d, a))));
          }
          sink.result(key, hyp, concl);
          if (sink.stopped()) return;
        }
      }
    }
  }
}

void check_choice(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  for (const IVec& lambda : ctx.lambdas()) {
    QVec ql = to_rational(lambda);
    for (const IVec& mu : saturation_orbit(d, lambda)) {
      for (int a = 0; a < d.n_pos; ++a) {
        std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                          kv("m", print_ivec(mu)) + detail::root_key(d, a);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        IVec ma = mu + d.coroot_y[a];
        bool hyp = leq_cone(d, to_rational(ma), ql) && !preceq(d, ma, lambda);
        bool concl = true;
        if (hyp) {
          concl = false;
          for (int b = 0; b < d.n_pos && !concl; ++b) {
            if (d.pairing<Int>(b, ma) > -2) continue;
            if (preceq(d, IVec(mu + d.coroot_y[b]), lambda) ||
                leq_cone(d, to_rational(IVec(ma + d.coroot_y[b])), ql))
              concl = true;
          }
        }
        sink.result(key, hyp, concl);
        if (sink.stopped()) return;
      }
    }
  }
}

}  // namespace

void register_section_checkers(std::vector<CheckerDef>& out) {
  out.push_back({"K-min.1", "either w~ s in ^K W~ or w~ s = s' w~", check_kmin1, true});
  out.push_back({"K-min.2", "the unique element of its W_K-sigma-conjugacy class",
                 check_kmin2, true});
  out.push_back({"partial-conj",
                 "there exist x in ^K W~ and u in I(x, K) such that w~ ->_K u x",
                 check_partial_conj, true});
  out.push_back({"semi.1", "z w~ sigma(z)^-1 in S if z(Phi~+_nu) in Phi~+",
                 check_semi1, true});
  out.push_back({"semi.2", "a unique pair (w~', z')", check_semi2, true});
  out.push_back({"semi.3", "s w~ sigma(s)^-1 in S if s w~ < w~ or w~ sigma(s) < w~",
                 check_semi3, true});
  out.push_back({"semi.4", "J_w~ is contained in M_{nu_w~}", check_semi4, true});
  out.push_back({"flat", "<alpha, nu_flat> <alpha, p(w~ sigma)^n(mu)> > 0",
                 check_flat, true});
  out.push_back({"dominant.1", "= 0 if and only if = 0 for all i",
                 [](LabContext& c, Sink& s) { check_dominant(c, s, 1); }, true});
  out.push_back({"dominant.2", "nu_flat is dominant for Phi+_nu if w~ in S",
                 [](LabContext& c, Sink& s) { check_dominant(c, s, 2); }, true});
  out.push_back({"dominant.3", "nu_flat of z w~ sigma(z)^-1 = z(nu_flat)",
                 [](LabContext& c, Sink& s) { check_dominant(c, s, 3); }, true});
  out.push_back({"dominant.4", "w~ sigma(Phi~±_{nu_flat}) = Phi~±_{nu_flat}",
                 [](LabContext& c, Sink& s) { check_dominant(c, s, 4); }, true});
  out.push_back({"dominant.5", "linearly independent", check_dominant5, true});
  out.push_back({"min", "z0 w~ sigma(z0)^-1 in ^{S_0} W~", check_min, true});
  out.push_back({"finite-seq", "There is no infinite sequence", check_finite_seq,
                 true});
  out.push_back({"Left", "Then w~ => w~'", check_left, true});
  out.push_back({"permissible", "P_{w_R w~ w_R} nonempty if P_w~ nonempty",
                 check_permissible_lemma, true});
  out.push_back({"existence", "Then P_w~ != empty", check_existence, true});
  out.push_back({"orth.1", "are K-minuscule",
                 [](LabContext& c, Sink& s) { check_orth(c, s, 1); }, true});
  out.push_back({"orth.2", "w~, s w~, w~ s, s w~ s in Adm(lambda)",
                 [](LabContext& c, Sink& s) { check_orth(c, s, 2); }, true});
  out.push_back({"orth.3", "s w~ s' in Adm(lambda) if gamma != sigma^r(gamma)",
                 [](LabContext& c, Sink& s) { check_orth(c, s, 3); }, true});
  out.push_back({"line", "unless (*) ... mu ± (gamma + w sigma^r(gamma))^vee ⪯ lambda",
                 check_line, true});
  out.push_back({"anti.1", "w~ s_alpha in Adm(lambda) if mu + alpha^vee ⪯ lambda",
                 [](LabContext& c, Sink& s) { check_anti(c, s, 1); }, true});
  out.push_back({"anti.2", "s_alpha w~ in Adm(lambda) if mu - w(alpha)^vee ⪯ lambda",
                 [](LabContext& c, Sink& s) { check_anti(c, s, 2); }, true});
  out.push_back({"anti.3", "z w~ z^-1 in Adm(lambda) for z in W~^K",
                 [](LabContext& c, Sink& s) { check_anti(c, s, 3); }, true});
  out.push_back({"choice", "<beta, mu + alpha^vee> <= -2", check_choice, true});
}

}  // namespace adlv
