#include "adlv/bruhat.hpp"

#include <algorithm>
#include <deque>

namespace adlv {

bool elem_order(const ExtAffElem& a, const ExtAffElem& b) {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  if (a.mu != b.mu) return lex_less(a.mu, b.mu);
  return a.w < b.w;
}

void sort_elems(std::vector<ExtAffElem>& v) {
  std::sort(v.begin(), v.end(), elem_order);
}

bool bruhat_leq(const ExtAffElem& x, const ExtAffElem& y) {
  require(x.datum == y.datum, "DatumMismatch", "elements of different data");
  if (eta_index(x) != eta_index(y)) return false;
  const AffineData& ad = affine_data(*x.datum);
  OmegaDecomposition dy = decompose(y);
  ExtAffElem omega_inv = invert(ad.omega[dy.omega_class]);
  ExtAffElem u = compose(x, omega_inv);
  // Subword test via the lifting property, walking down a reduced word of y'.
  for (int s : dy.word) {
    if (left_descent(u, s)) u = left_mult_simple(u, s);
  }
  return u == aff_identity(*x.datum);
}

std::vector<ExtAffElem> covers_down(const ExtAffElem& y) {
  const RootDatum& d = *y.datum;
  const int ly = length(y);
  std::vector<ExtAffElem> out;
  // l(s_a y) < l(y) exactly for positive affine roots a with y^-1(a) < 0.
  for (const AffRoot& inv : inversions(invert(y))) {
    ExtAffElem z = compose(affine_reflection(d, inv), y);
    if (length(z) == ly - 1) out.push_back(z);
  }
  sort_elems(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<ExtAffElem> translation_orbit(const RootDatum& d, const IVec& lambda) {
  const WeylGroup& g = d.weyl();
  std::unordered_set<IVec, IVecHash, IVecEq> seen;
  std::vector<ExtAffElem> out;
  for (int w = 0; w < g.size(); ++w) {
    IVec mu = g.matrix(WeylGroup::Id(w)) * lambda;
    if (seen.insert(mu).second) out.push_back(from_translation(d, mu));
  }
  sort_elems(out);
  return out;
}

}  // namespace

AdmissibleSet adm_set(const RootDatum& d, const IVec& lambda) {
  require(is_dominant<Int>(d, lambda), "NotDominant", "Adm needs a dominant lambda");
  AdmissibleSet adm;
  adm.datum = &d;
  adm.lambda = lambda;
  adm.eta_class = eta_index(from_translation(d, lambda));
  adm.maximal = translation_orbit(d, lambda);

  std::deque<ExtAffElem> queue;
  for (const ExtAffElem& m : adm.maximal) {
    if (adm.index.insert(m).second) queue.push_back(m);
  }
  while (!queue.empty()) {
    ExtAffElem y = queue.front();
    queue.pop_front();
    for (const ExtAffElem& z : covers_down(y)) {
      if (adm.index.insert(z).second) queue.push_back(z);
    }
  }
  adm.elements.assign(adm.index.begin(), adm.index.end());
  sort_elems(adm.elements);
  return adm;
}

std::vector<ExtAffElem> adm_set_by_ball_filter(const RootDatum& d,
                                               const IVec& lambda) {
  require(is_dominant<Int>(d, lambda), "NotDominant", "Adm needs a dominant lambda");
  std::vector<ExtAffElem> maximal = translation_orbit(d, lambda);
  int radius = maximal.empty() ? 0 : length(maximal.front());
  int cls = eta_index(from_translation(d, lambda));
  std::vector<ExtAffElem> out;
  for (const ExtAffElem& x : length_ball(d, radius, cls)) {
    for (const ExtAffElem& m : maximal) {
      if (bruhat_leq(x, m)) {
        out.push_back(x);
        break;
      }
    }
  }
  sort_elems(out);
  return out;
}

std::vector<ExtAffElem> length_ball(const RootDatum& d, int radius, int cls) {
  const AffineData& ad = affine_data(d);
  std::unordered_set<ExtAffElem, ExtAffHash> seen;
  std::deque<ExtAffElem> queue;
  ExtAffElem e = aff_identity(d);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    ExtAffElem x = queue.front();
    queue.pop_front();
    if (length(x) >= radius) continue;
    for (size_t i = 0; i < ad.simple_aff.size(); ++i) {
      ExtAffElem y = left_mult_simple(x, int(i));
      if (length(y) <= radius && seen.insert(y).second) queue.push_back(y);
    }
  }
  const ExtAffElem omega = ad.omega[cls];
  std::vector<ExtAffElem> out;
  out.reserve(seen.size());
  for (const ExtAffElem& u : seen) out.push_back(compose(u, omega));
  sort_elems(out);
  return out;
}

std::vector<ExtAffElem> length_ball_all_classes(const RootDatum& d, int radius) {
  const AffineData& ad = affine_data(d);
  std::vector<ExtAffElem> out;
  for (size_t c = 0; c < ad.omega.size(); ++c) {
    auto part = length_ball(d, radius, int(c));
    out.insert(out.end(), part.begin(), part.end());
  }
  sort_elems(out);
  return out;
}

bool distinct_test(const ExtAffElem& x, const std::vector<int>& r_orbit, Side side,
                   const AdmissibleSet& adm) {
  require(adm.contains(x), "NotAdmissible", "element is not in Adm(lambda)");
  for (int s : r_orbit) {
    ExtAffElem moved = side == Side::Left
                           ? compose(from_weyl(weyl_simple(*x.datum, s)), x)
                           : compose(x, from_weyl(weyl_simple(*x.datum, s)));
    if (adm.contains(moved)) return false;
  }
  return true;
}

}  // namespace adlv
