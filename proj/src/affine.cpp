#include "adlv/affine.hpp"

#include <algorithm>

namespace adlv {

ExtAffElem aff_identity(const RootDatum& d) {
  return {&d, IVec::Zero(d.rank), 0};
}

ExtAffElem from_translation(const RootDatum& d, const IVec& mu) {
  return {&d, mu, 0};
}

ExtAffElem from_weyl(const WeylElem& w) {
  return {w.datum, IVec::Zero(w.datum->rank), w.id};
}

ExtAffElem make_elem(const RootDatum& d, const IVec& mu, WeylGroup::Id w) {
  return {&d, mu, w};
}

ExtAffElem compose(const ExtAffElem& a, const ExtAffElem& b) {
  require(a.datum == b.datum, "DatumMismatch", "elements of different data");
  const WeylGroup& g = a.datum->weyl();
  return {a.datum, IVec(a.mu + g.matrix(a.w) * b.mu), g.mult(a.w, b.w)};
}

ExtAffElem invert(const ExtAffElem& a) {
  const WeylGroup& g = a.datum->weyl();
  WeylGroup::Id wi = g.inverse(a.w);
  return {a.datum, IVec(-(g.matrix(wi) * a.mu)), wi};
}

WeylElem finite_part(const ExtAffElem& a) { return {a.datum, a.w}; }

AffRoot act_on_affroot(const ExtAffElem& x, const AffRoot& a) {
  const RootDatum& d = *x.datum;
  int r2 = d.weyl().act_root(x.w, a.root);
  return {r2, a.k + d.pairing<Int>(r2, x.mu)};
}

bool is_positive_affroot(const RootDatum& d, const AffRoot& a) {
  return d.is_positive(a.root) ? a.k >= 1 : a.k >= 0;
}

Int aff_floor(const RootDatum& d, int root) { return d.is_positive(root) ? 1 : 0; }

QVec aff_apply(const ExtAffElem& x, const QVec& v) {
  const RootDatum& d = *x.datum;
  return to_rational(x.mu) + d.weyl().matrix(x.w).cast<Rational>() * v;
}

Rational affroot_eval(const RootDatum& d, const AffRoot& a, const QVec& v) {
  return Rational(a.k) - d.pairing<Rational>(a.root, v);
}

int length(const ExtAffElem& x) {
  const RootDatum& d = *x.datum;
  const WeylGroup& g = d.weyl();
  WeylGroup::Id wi = g.inverse(x.w);
  Int l = 0;
  for (int r = 0; r < d.n_pos; ++r) {
    Int c = d.pairing<Int>(r, x.mu);
    if (g.act_root(wi, r) < d.n_pos) {
      l += c < 0 ? -c : c;
    } else {
      l += c >= 1 ? c - 1 : 1 - c;
    }
  }
  return int(l);
}

std::vector<AffRoot> inversions(const ExtAffElem& x) {
  const RootDatum& d = *x.datum;
  std::vector<AffRoot> out;
  for (int r = 0; r < d.num_roots(); ++r) {
    int r2 = d.weyl().act_root(x.w, r);
    Int c = d.pairing<Int>(r2, x.mu);
    // (r, k) positive for k >= floor(r); image (r2, k+c) negative iff
    // k + c <= floor(r2) - 1.
    for (Int k = aff_floor(d, r); k <= aff_floor(d, r2) - 1 - c; ++k)
      out.push_back({r, k});
  }
  return out;
}

ExtAffElem affine_reflection(const RootDatum& d, const AffRoot& a) {
  return {&d, IVec(a.k * d.coroot_y[a.root]),
          d.weyl().reflection(a.root)};
}

namespace {

struct AffineDataHolder {
  AffineData data;
};

AffineData build_affine_data(const RootDatum& d) {
  AffineData a;
  // Stored as positive affine roots: Phi^+ sits inside Phi~^-, so the finite
  // simple s_i belongs to (-alpha_i, 0).
  for (int i = 0; i < d.rank; ++i) a.simple_aff.push_back({d.negate(i), 0});
  for (size_t c = 0; c < d.components.size(); ++c)
    a.simple_aff.push_back({d.highest_root_of_component[c], 1});
  for (const AffRoot& r : a.simple_aff) {
    ExtAffElem s = affine_reflection(d, r);
    require(length(s) == 1, "InvariantViolation", "simple affine reflection length");
    a.simple_aff_elem.push_back(s);
  }

  a.pi1 = finite_quotient(d.cartan_t);  // columns = simple coroots
  a.pi1_classes = a.pi1.all_classes();
  for (size_t i = 0; i < a.pi1_classes.size(); ++i)
    a.class_index.emplace(a.pi1_classes[i], int(i));

  // Omega: for each w in W_0 there is at most one mu with l(t^mu w) = 0;
  // mu is pinned by <alpha_i, mu> = 0/1 according to w^-1(alpha_i) > 0 / < 0.
  const WeylGroup& g = d.weyl();
  a.omega.assign(a.pi1_classes.size(), aff_identity(d));
  std::vector<bool> found(a.pi1_classes.size(), false);
  for (int w = 0; w < g.size(); ++w) {
    WeylGroup::Id wi = g.inverse(WeylGroup::Id(w));
    IVec mu(d.rank);
    for (int i = 0; i < d.rank; ++i)
      mu[i] = g.act_root(wi, i) < d.n_pos ? 0 : 1;
    bool ok = true;
    for (int r = 0; r < d.n_pos && ok; ++r) {
      Int want = g.act_root(wi, r) < d.n_pos ? 0 : 1;
      if (d.pairing<Int>(r, mu) != want) ok = false;
    }
    if (!ok) continue;
    ExtAffElem omega = {&d, mu, WeylGroup::Id(w)};
    require(length(omega) == 0, "InvariantViolation", "Omega candidate has length > 0");
    IVec cls = a.pi1.canon(mu);
    int idx = a.class_index.at(cls);
    require(!found[idx], "InvariantViolation", "two length-0 lifts of one class");
    found[idx] = true;
    a.omega[idx] = omega;
  }
  for (bool f : found)
    require(f, "InvariantViolation", "missing Omega representative");
  return a;
}

}  // namespace

const AffineData& affine_data(const RootDatum& d) {
  if (!d.affine_cache) {
    auto holder = std::make_shared<AffineDataHolder>();
    holder->data = build_affine_data(d);
    d.affine_cache = holder;
  }
  return std::static_pointer_cast<AffineDataHolder>(d.affine_cache)->data;
}

IVec eta(const ExtAffElem& x) { return affine_data(*x.datum).pi1.canon(x.mu); }

int eta_index(const ExtAffElem& x) {
  const AffineData& a = affine_data(*x.datum);
  return a.class_index.at(a.pi1.canon(x.mu));
}

bool left_descent(const ExtAffElem& x, int i) {
  const AffineData& a = affine_data(*x.datum);
  // l(s w~) < l(w~) iff w~^{-1}(alpha~_s) < 0
  AffRoot pre = act_on_affroot(invert(x), a.simple_aff[i]);
  return !is_positive_affroot(*x.datum, pre);
}

bool right_descent(const ExtAffElem& x, int i) {
  const AffineData& a = affine_data(*x.datum);
  AffRoot img = act_on_affroot(x, a.simple_aff[i]);
  return !is_positive_affroot(*x.datum, img);
}

ExtAffElem left_mult_simple(const ExtAffElem& x, int i) {
  return compose(affine_data(*x.datum).simple_aff_elem[i], x);
}

ExtAffElem right_mult_simple(const ExtAffElem& x, int i) {
  return compose(x, affine_data(*x.datum).simple_aff_elem[i]);
}

OmegaDecomposition decompose(const ExtAffElem& x) {
  const AffineData& a = affine_data(*x.datum);
  OmegaDecomposition out;
  out.omega_class = eta_index(x);
  ExtAffElem u = compose(x, invert(a.omega[out.omega_class]));
  int l = length(u);
  while (l > 0) {
    bool moved = false;
    for (size_t i = 0; i < a.simple_aff.size(); ++i) {
      if (left_descent(u, int(i))) {
        out.word.push_back(int(i));
        u = left_mult_simple(u, int(i));
        --l;
        moved = true;
        break;
      }
    }
    require(moved, "InvariantViolation", "no descent on a positive-length element");
  }
  require(u == aff_identity(*x.datum), "InvariantViolation",
          "omega decomposition did not terminate at identity");
  return out;
}

bool is_min_coset_rep(const ExtAffElem& x, const std::vector<int>& k) {
  for (int i : k)
    if (left_descent(x, i)) return false;
  return true;
}

}  // namespace adlv
