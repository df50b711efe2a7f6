#include "adlv/sigma.hpp"

#include <algorithm>
#include <deque>

namespace adlv {

ExtAffElem sigma_conj(const ExtAffElem& g, const ExtAffElem& x,
                      const Frobenius& sigma) {
  return compose(g, compose(x, invert(sigma.act(g))));
}

AffRoot ws_act(const ExtAffElem& x, const Frobenius& sigma, const AffRoot& a) {
  return act_on_affroot(x, sigma.act(a));
}

AffRoot ws_act_inv(const ExtAffElem& x, const Frobenius& sigma, const AffRoot& a) {
  AffRoot b = act_on_affroot(invert(x), a);
  return {sigma.act_root_pow(b.root, -1), b.k};
}

AffRoot ws_act_pow(const ExtAffElem& x, const Frobenius& sigma, AffRoot a,
                   int power) {
  for (; power > 0; --power) a = ws_act(x, sigma, a);
  for (; power < 0; ++power) a = ws_act_inv(x, sigma, a);
  return a;
}

IMat ws_linear(const ExtAffElem& x, const Frobenius& sigma) {
  return IMat(x.datum->weyl().matrix(x.w) * sigma.y_mat);
}

int ws_order(const ExtAffElem& x, const Frobenius& sigma) {
  IMat l = ws_linear(x, sigma);
  IMat m = l;
  int n = 1;
  while (!(m == identity_mat(x.datum->rank))) {
    m = IMat(m * l);
    ++n;
    require(n <= 4096, "BudgetExceeded", "order iteration runaway");
  }
  return n;
}

QVec newton_raw(const ExtAffElem& x, const Frobenius& sigma) {
  const int m = ws_order(x, sigma);
  IMat l = ws_linear(x, sigma);
  IVec xi = IVec::Zero(x.datum->rank);
  IVec cur = x.mu;
  for (int i = 0; i < m; ++i) {
    xi += cur;
    cur = l * cur;
  }
  QVec nu = to_rational(xi);
  for (Eigen::Index i = 0; i < nu.size(); ++i) nu[i] /= Rational(m);
  return nu;
}

NewtonKottwitz newton_point(const ExtAffElem& x, const Frobenius& sigma) {
  NewtonKottwitz nk;
  nk.newton = dominant_conjugate_word<Rational>(*x.datum, newton_raw(x, sigma)).first;
  nk.kottwitz = sigma.kottwitz(x);
  return nk;
}

SemiStandardResult is_semi_standard(const ExtAffElem& x, const Frobenius& sigma) {
  const RootDatum& d = *x.datum;
  SemiStandardResult res;
  res.nu = newton_raw(x, sigma);
  // D10: w~sigma shifts k-levels uniformly per root line, so stability of
  // the positive affine roots of M_nu reduces to (a) the line permutation
  // preserving Phi_nu and (b) every floor root mapping to a positive one.
  for (int r = 0; r < d.num_roots(); ++r) {
    if (!d.pairing<Rational>(r, res.nu).is_zero()) continue;
    int img = d.weyl().act_root(x.w, sigma.act_root(r));
    if (!d.pairing<Rational>(img, res.nu).is_zero()) return res;  // (a) fails
    AffRoot floor{r, aff_floor(d, r)};
    if (!is_positive_affroot(d, ws_act(x, sigma, floor))) return res;  // (b) fails
  }
  res.semi_standard = true;
  res.standard = is_dominant<Rational>(d, res.nu);
  return res;
}

std::optional<ExtAffElem> conj_move(const ExtAffElem& x, int s,
                                    const Frobenius& sigma, MoveKind kind) {
  const AffineData& ad = affine_data(*x.datum);
  ExtAffElem moved = compose(ad.simple_aff_elem[s],
                             compose(x, ad.simple_aff_elem[sigma.aff_perm[s]]));
  if (kind == MoveKind::HalfArrow) {
    if (!left_descent(x, s)) return std::nullopt;
    return moved;
  }
  if (length(moved) <= length(x)) return moved;
  return std::nullopt;
}

std::vector<int> finite_simple_indices(const RootDatum& d) {
  std::vector<int> out(d.rank);
  for (int i = 0; i < d.rank; ++i) out[i] = i;
  return out;
}

std::vector<int> i_set(const std::vector<int>& k, const ExtAffElem& x,
                       const Frobenius& sigma) {
  const AffineData& ad = affine_data(*x.datum);
  std::vector<int> cur = k;
  while (true) {
    std::vector<int> next;
    for (int s : cur) {
      ExtAffElem conj =
          compose(x, compose(ad.simple_aff_elem[sigma.aff_perm[s]], invert(x)));
      bool inside = false;
      for (int t : cur) {
        if (conj == ad.simple_aff_elem[t]) { inside = true; break; }
      }
      if (inside) next.push_back(s);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

std::pair<ExtAffElem, ExtAffElem> min_coset_split(const ExtAffElem& w,
                                                  const std::vector<int>& k) {
  ExtAffElem x = w;
  ExtAffElem u = aff_identity(*w.datum);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : k) {
      if (left_descent(x, s)) {
        u = compose(u, affine_data(*w.datum).simple_aff_elem[s]);
        x = left_mult_simple(x, s);
        moved = true;
        break;
      }
    }
  }
  return {u, x};
}

bool in_parabolic(const ExtAffElem& u0, const std::vector<int>& k) {
  ExtAffElem u = u0;
  bool moved = true;
  while (moved && length(u) > 0) {
    moved = false;
    for (int s : k) {
      if (left_descent(u, s)) {
        u = left_mult_simple(u, s);
        moved = true;
        break;
      }
    }
  }
  return u == aff_identity(*u0.datum);
}

std::vector<ExtAffElem> parabolic_subgroup(const RootDatum& d,
                                           const std::vector<int>& k, int budget) {
  std::vector<ExtAffElem> out;
  std::unordered_set<ExtAffElem, ExtAffHash> seen;
  std::deque<ExtAffElem> queue;
  ExtAffElem e = aff_identity(d);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    ExtAffElem x = queue.front();
    queue.pop_front();
    out.push_back(x);
    for (int s : k) {
      ExtAffElem y = left_mult_simple(x, s);
      if (seen.insert(y).second) {
        require(int(seen.size()) <= budget, "BudgetExceeded",
                "parabolic subgroup is not spherical (or budget too small)");
        queue.push_back(y);
      }
    }
  }
  sort_elems(out);
  return out;
}

PartialConjResult partial_conjugation(const ExtAffElem& w, const std::vector<int>& k,
                                      const Frobenius& sigma, int plateau_budget) {
  PartialConjResult res;
  ExtAffElem cur = w;
  std::vector<std::pair<int, ExtAffElem>> trace;

  while (true) {
    // Strictly decreasing moves first.
    bool dropped = true;
    while (dropped) {
      dropped = false;
      for (int s : k) {
        auto m = conj_move(cur, s, sigma, MoveKind::Arrow);
        if (m && length(*m) < length(cur)) {
          cur = *m;
          trace.emplace_back(s, cur);
          dropped = true;
          break;
        }
      }
    }
    // Deterministic BFS across the same-length plateau.
    std::unordered_set<ExtAffElem, ExtAffHash> visited;
    std::deque<std::pair<ExtAffElem, std::vector<std::pair<int, ExtAffElem>>>> queue;
    visited.insert(cur);
    queue.push_back({cur, {}});
    bool descended = false;
    std::vector<ExtAffElem> plateau;
    std::vector<std::vector<std::pair<int, ExtAffElem>>> plateau_paths;
    while (!queue.empty()) {
      auto [y, path] = queue.front();
      queue.pop_front();
      plateau.push_back(y);
      plateau_paths.push_back(path);
      for (int s : k) {
        auto m = conj_move(y, s, sigma, MoveKind::Arrow);
        if (!m) continue;
        if (length(*m) < length(y)) {
          for (auto& mv : path) trace.push_back(mv);
          trace.emplace_back(s, *m);
          cur = *m;
          descended = true;
          break;
        }
        if (visited.insert(*m).second) {
          require(int(visited.size()) <= plateau_budget, "BudgetExceeded",
                  "plateau search exceeded budget");
          auto path2 = path;
          path2.emplace_back(s, *m);
          queue.push_back({*m, path2});
        }
      }
      if (descended) break;
    }
    if (descended) continue;

    // Terminal plateau: find the element of shape u * x, x in ^K W~,
    // u in W_{I(K,x)}.
    for (size_t i = 0; i < plateau.size(); ++i) {
      auto [u, x] = min_coset_split(plateau[i], k);
      std::vector<int> iset = i_set(k, x, sigma);
      if (!in_parabolic(u, iset)) continue;
      res.x = x;
      res.u = u;
      res.i_set = iset;
      for (auto& mv : plateau_paths[i]) trace.push_back(mv);
      res.trace = trace;
      return res;
    }
    fail("BudgetExceeded",
         "no u*x form on the terminal plateau (this would contradict He's theorem)");
  }
}

std::vector<ExtAffElem> sigma_class_by_parabolic(const ExtAffElem& w,
                                                 const std::vector<int>& k,
                                                 const Frobenius& sigma) {
  std::vector<ExtAffElem> out;
  std::unordered_set<ExtAffElem, ExtAffHash> seen;
  for (const ExtAffElem& u : parabolic_subgroup(*w.datum, k)) {
    ExtAffElem c = sigma_conj(u, w, sigma);
    if (seen.insert(c).second) out.push_back(c);
  }
  sort_elems(out);
  return out;
}

FlatInvariant flat_invariant(const ExtAffElem& x, const Frobenius& sigma,
                             const IVec& eta) {
  const RootDatum& d = *x.datum;
  FlatInvariant f;
  f.eta = eta;
  IVec mu_dom = dominant_conjugate_word<Int>(d, x.mu).first;
  IVec eta_dom = dominant_conjugate_word<Int>(d, eta).first;
  require(mu_dom == eta_dom, "NotInOrbit",
          "translation part is not W_0-conjugate to eta");

  Int min_nz = 0;
  for (int r = 0; r < d.n_pos; ++r) {
    Int p = d.pairing<Int>(r, eta);
    Int ap = p < 0 ? -p : p;
    f.a_bound = std::max(f.a_bound, ap);
    if (ap != 0 && (min_nz == 0 || ap < min_nz)) min_nz = ap;
  }
  f.m_base = 2;
  if (min_nz > 0) {
    while (f.m_base * min_nz <= 2 * f.a_bound) ++f.m_base;
  }
  f.n_order = ws_order(x, sigma);

  IMat l = ws_linear(x, sigma);
  QVec acc = QVec::Zero(d.rank);
  IVec cur = x.mu;
  Rational scale(1);
  for (int i = 0; i < f.n_order; ++i) {
    acc += to_rational(cur) * scale;
    cur = l * cur;
    scale /= Rational(f.m_base);
  }
  f.vec = acc;
  return f;
}

MinZ0Result min_z0(const ExtAffElem& x, const Frobenius& sigma, const IVec& eta) {
  const RootDatum& d = *x.datum;
  FlatInvariant f = flat_invariant(x, sigma, eta);
  auto [dom, z0] = dominant_conjugate<Rational>(d, f.vec);
  (void)dom;
  ExtAffElem z = from_weyl(z0);
  ExtAffElem conj = sigma_conj(z, x, sigma);
  return {z0, conj};
}

int backward_exit(const ExtAffElem& x, const Frobenius& sigma, int alpha_idx) {
  const RootDatum& d = *x.datum;
  AffRoot a{alpha_idx, 0};
  for (int i = 1;; ++i) {
    a = ws_act_inv(x, sigma, a);
    if (a.k != 0) return i;
    require(i <= 8192, "BudgetExceeded",
            "backward orbit did not exit the finite roots; is <alpha,nu> = 0?");
  }
}

PermissibleData permissible(const ExtAffElem& x, const Frobenius& sigma,
                            const AdmissibleSet& adm) {
  require(adm.contains(x), "NotAdmissible", "element is not in Adm(lambda)");
  const RootDatum& d = *x.datum;
  QVec nu = newton_raw(x, sigma);
  PermissibleData out;
  for (int r = 0; r < d.n_pos; ++r) {
    if (d.pairing<Rational>(r, nu).is_zero()) continue;
    int m = backward_exit(x, sigma, r);
    out.m_map.emplace_back(r, m);
    ExtAffElem moved =
        compose(x, from_weyl(weyl_reflection(d, sigma.act_root(r))));
    if (!adm.contains(moved)) continue;
    if (is_positive_affroot(d, ws_act_pow(x, sigma, AffRoot{r, 0}, -m)))
      out.p_set.push_back(r);
  }
  return out;
}

}  // namespace adlv
