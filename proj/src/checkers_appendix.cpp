#include "checker_util.hpp"

namespace adlv {

namespace {

using detail::kv;

// Lemma A.2: l(s w~) = l(w~ s') and l(s w~ s') = l(w~) force w~ = s w~ s'.
void check_commute(LabContext& ctx, Sink& sink) {
  const AffineData& ad = affine_data(ctx.datum());
  const int n_aff = int(ad.simple_aff.size());
  for (const ExtAffElem& w : ctx.ball(ctx.entry().length_bound)) {
    const int lw = length(w);
    for (int si = 0; si < n_aff; ++si) {
      const int lsw = lw + (left_descent(w, si) ? -1 : 1);
      ExtAffElem sw = left_mult_simple(w, si);
      for (int ti = 0; ti < n_aff; ++ti) {
        std::string key = ctx.entry_name() + "|" + elem_key(w) + "|s" +
                          std::to_string(si) + "|s'" + std::to_string(ti);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        const int lws = lw + (right_descent(w, ti) ? -1 : 1);
        bool hyp = lsw == lws;
        bool concl = true;
        if (hyp) {
          ExtAffElem sws = right_mult_simple(sw, ti);
          hyp = length(sws) == lw;
          if (hyp) concl = sws == w;
        }
        sink.result(key, hyp, concl);
        if (sink.stopped()) return;
      }
    }
  }
}

// Lemma A.3 (R1), three clauses, for w~ in Adm(lambda), s in S^a, w~ < s w~.
void check_r1(LabContext& ctx, Sink& sink, int clause) {
  const AffineData& ad = affine_data(ctx.datum());
  const int n_aff = int(ad.simple_aff.size());
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    for (const ExtAffElem& w : adm.elements) {
      for (int si = 0; si < n_aff; ++si) {
        std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                          elem_key(w) + "|s" + std::to_string(si);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        if (left_descent(w, si)) {  // need w~ < s w~
          sink.result(key, false, true);
          continue;
        }
        ExtAffElem ws = right_mult_simple(w, si);
        ExtAffElem sw = left_mult_simple(w, si);
        bool hyp = false, concl = true;
        if (clause == 1) {
          // w~ s < s w~ s  =>  w~ s in Adm
          ExtAffElem sws = left_mult_simple(ws, si);
          hyp = length(ws) < length(sws);
          if (hyp) concl = adm.contains(ws);
        } else if (clause == 2) {
          // w~ s not in Adm  =>  w~ s = s w~
          hyp = !adm.contains(ws);
          if (hyp) concl = ws == sw;
        } else {
          // l(s w~ s) = l(w~)  =>  s w~ s in Adm
          ExtAffElem sws = right_mult_simple(sw, si);
          hyp = length(sws) == length(w);
          if (hyp) concl = adm.contains(sws);
        }
        sink.result(key, hyp, concl);
        if (sink.stopped()) return;
      }
    }
  }
}

// Lemma A.4: w~ not in Adm, w~ s > w~  =>  s w~ s not in Adm.
void check_r4(LabContext& ctx, Sink& sink) {
  const AffineData& ad = affine_data(ctx.datum());
  const int n_aff = int(ad.simple_aff.size());
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    const int radius = std::min(ctx.entry().length_bound,
                                adm.maximal.empty() ? 0 : length(adm.maximal[0]) + 1);
    for (const ExtAffElem& w : ctx.ball(radius)) {
      if (eta_index(w) != adm.eta_class) continue;
      if (adm.contains(w)) continue;
      for (int si = 0; si < n_aff; ++si) {
        std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                          elem_key(w) + "|s" + std::to_string(si);
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool hyp = !right_descent(w, si);  // w~ s > w~
        bool concl = true;
        if (hyp) {
          ExtAffElem sws = left_mult_simple(right_mult_simple(w, si), si);
          concl = !adm.contains(sws);
        }
        sink.result(key, hyp, concl);
        if (sink.stopped()) return;
      }
    }
  }
}

// Lemma A.5: right R-distinct w~; u' w~ u^-1 in Adm iff u = u' (l(u') <= l(u)).
void check_rdist(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    for (const std::vector<int>& r : detail::appendix_r_sets(ctx)) {
      std::vector<ExtAffElem> wr = detail::finite_parabolic(d, r);
      for (const ExtAffElem& w : adm.elements) {
        if (!distinct_test(w, r, Side::Right, adm)) continue;
        for (const ExtAffElem& u : wr) {
          for (const ExtAffElem& u2 : wr) {
            if (length(u2) > length(u)) continue;
            std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                              kv("R", detail::set_key(r)) + elem_key(w) + "|u=" +
                              elem_key(u) + "|u'=" + elem_key(u2);
            if (!sink.pre(key)) {
              if (sink.stopped()) return;
              continue;
            }
            ExtAffElem moved = compose(u2, compose(w, invert(u)));
            bool concl = adm.contains(moved) == (u == u2);
            sink.result(key, true, concl);
            if (sink.stopped()) return;
          }
        }
        // consequence: w_R w~ w_R in Adm and left R-distinct
        WeylElem wr_long = detail::longest_in_parabolic(d, r);
        ExtAffElem conj =
            compose(from_weyl(wr_long), compose(w, from_weyl(wr_long)));
        std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                          kv("R", detail::set_key(r)) + elem_key(w) + "|wRwwR";
        if (!sink.pre(key)) {
          if (sink.stopped()) return;
          continue;
        }
        bool concl =
            adm.contains(conj) && distinct_test(conj, r, Side::Left, adm);
        sink.result(key, true, concl);
        if (sink.stopped()) return;
      }
    }
  }
}

// Lemma A.6: s w~ s in Adm, s w~ not in Adm, w~ s_alpha in Adm
//            => s w~ s_alpha s in Adm (alpha != alpha_s positive).
void check_lr(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    for (const ExtAffElem& w : adm.elements) {
      for (int s = 0; s < d.rank; ++s) {
        ExtAffElem se = from_weyl(weyl_simple(d, s));
        ExtAffElem sw = compose(se, w);
        if (adm.contains(sw)) continue;
        ExtAffElem sws = compose(sw, se);
        if (!adm.contains(sws)) continue;
        for (int a = 0; a < d.n_pos; ++a) {
          if (a == s) continue;  // simple roots are the first n_pos indices
          std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                            elem_key(w) + "|s" + std::to_string(s) + "|" +
                            detail::root_key(d, a);
          if (!sink.pre(key)) {
            if (sink.stopped()) return;
            continue;
          }
          ExtAffElem wsa = compose(w, from_weyl(weyl_reflection(d, a)));
          bool hyp = adm.contains(wsa);
          bool concl = true;
          if (hyp) concl = adm.contains(compose(compose(se, wsa), se));
          sink.result(key, hyp, concl);
          if (sink.stopped()) return;
        }
      }
    }
  }
}

// Cor A.7: left R-distinct w~, alpha outside Phi_R, w~ s_alpha in Adm
//          => u w~ s_alpha u^-1 in Adm for all u in W_R.
void check_conj(LabContext& ctx, Sink& sink) {
  const RootDatum& d = ctx.datum();
  for (const IVec& lambda : ctx.lambdas()) {
    const AdmissibleSet& adm = ctx.adm(lambda);
    for (const std::vector<int>& r : detail::appendix_r_sets(ctx)) {
      SimpleSet rset = set_of(r);
      std::vector<ExtAffElem> wr = detail::finite_parabolic(d, r);
      std::vector<bool> in_phr(d.n_pos, false);
      for (int t : positive_roots_of_levi(d, rset)) in_phr[t] = true;
      for (const ExtAffElem& w : adm.elements) {
        if (!distinct_test(w, r, Side::Left, adm)) continue;
        for (int a = 0; a < d.n_pos; ++a) {
          if (in_phr[a]) continue;
          ExtAffElem wsa = compose(w, from_weyl(weyl_reflection(d, a)));
          std::string key = ctx.entry_name() + "|" + kv("l", print_ivec(lambda)) +
                            kv("R", detail::set_key(r)) + elem_key(w) + "|" +
                            detail::root_key(d, a);
          if (!sink.pre(key)) {
            if (sink.stopped()) return;
            continue;
          }
          bool hyp = adm.contains(wsa);
          bool concl = true;
          if (hyp) {
            for (const ExtAffElem& u : wr) {
              if (!adm.contains(compose(u, compose(wsa, invert(u))))) {
                concl = false;
                break;
              }
            }
          }
          sink.result(key, hyp, concl);
          if (sink.stopped()) return;
        }
      }
    }
  }
}

}  // namespace

void register_appendix_checkers(std::vector<CheckerDef>& out) {
  out.push_back({"commute", "Then w~ = s w~ s'", check_commute, true});
  out.push_back({"R1.1", "w~ s in Adm(lambda) if w~ s < s w~ s",
                 [](LabContext& c, Sink& s) { check_r1(c, s, 1); }, true});
  out.push_back({"R1.2", "w~ s = s w~ if w~ s not in Adm(lambda)",
                 [](LabContext& c, Sink& s) { check_r1(c, s, 2); }, true});
  out.push_back({"R1.3", "s w~ s in Adm(lambda) if l(s w~ s) = l(w~)",
                 [](LabContext& c, Sink& s) { check_r1(c, s, 3); }, true});
  out.push_back({"R4", "Then s w~ s not in Adm(lambda)", check_r4, true});
  out.push_back({"R-dist", "if and only if u = u'", check_rdist, true});
  out.push_back({"LR", "Then s w~ s_alpha s in Adm(lambda)", check_lr, true});
  out.push_back({"conj", "u w~ s_alpha u^-1 in Adm(lambda)", check_conj, true});
}

}  // namespace adlv
