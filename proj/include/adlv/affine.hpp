#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "adlv/root_datum.hpp"

namespace adlv {

// Element t^mu w of the extended affine Weyl group, acting on V by
// v -> mu + w(v). Equality is structural on (mu, w) (normal form, D5).
struct ExtAffElem {
  const RootDatum* datum = nullptr;
  IVec mu;
  WeylGroup::Id w = 0;

  bool operator==(const ExtAffElem& o) const { return w == o.w && mu == o.mu; }
  bool operator!=(const ExtAffElem& o) const { return !(*this == o); }
};

struct ExtAffHash {
  std::size_t operator()(const ExtAffElem& x) const {
    return IVecHash()(x.mu) * 1000003u + x.w;
  }
};

// Affine root (alpha, k), the affine function v -> -<alpha, v> + k.
struct AffRoot {
  int root = 0;
  Int k = 0;
  bool operator==(const AffRoot& o) const { return root == o.root && k == o.k; }
  bool operator!=(const AffRoot& o) const { return !(*this == o); }
};

struct AffRootHash {
  std::size_t operator()(const AffRoot& a) const {
    return std::hash<Int>()(a.k * 4096 + a.root);
  }
};

ExtAffElem aff_identity(const RootDatum& datum);
ExtAffElem from_translation(const RootDatum& datum, const IVec& mu);
ExtAffElem from_weyl(const WeylElem& w);
ExtAffElem make_elem(const RootDatum& datum, const IVec& mu, WeylGroup::Id w);

ExtAffElem compose(const ExtAffElem& a, const ExtAffElem& b);
ExtAffElem invert(const ExtAffElem& a);
WeylElem finite_part(const ExtAffElem& a);

// Action on affine roots: for t^mu w, (alpha,k) -> (w(alpha), k + <w(alpha),mu>).
AffRoot act_on_affroot(const ExtAffElem& x, const AffRoot& a);
bool is_positive_affroot(const RootDatum& datum, const AffRoot& a);
// Lowest k making the line of `root` positive: 1 on positive, 0 on negative roots.
Int aff_floor(const RootDatum& datum, int root);

// Affine action on rational points (pointwise oracle for tests).
QVec aff_apply(const ExtAffElem& x, const QVec& v);
Rational affroot_eval(const RootDatum& datum, const AffRoot& a, const QVec& v);

int length(const ExtAffElem& x);
// All positive affine roots sent to negatives; size equals length().
std::vector<AffRoot> inversions(const ExtAffElem& x);

// Reflection along an affine root: s_(alpha,k) = t^{k alpha^vee} s_alpha.
ExtAffElem affine_reflection(const RootDatum& datum, const AffRoot& a);

// --- simple affine reflections, Omega, eta ----------------------------------

struct AffineData {
  std::vector<AffRoot> simple_aff;          // S^a: finite simples, then (theta_c, 1)
  std::vector<ExtAffElem> simple_aff_elem;  // as group elements
  FiniteQuotient pi1;                       // Y / Z Phi^vee
  std::vector<IVec> pi1_classes;            // canonical tuples, deterministic order
  std::vector<ExtAffElem> omega;            // omega[i] is the length-0 lift of class i
  std::unordered_map<IVec, int, IVecHash, IVecEq> class_index;

  int pi1_index(const IVec& tuple) const { return class_index.at(tuple); }
};

const AffineData& affine_data(const RootDatum& datum);

// eta(t^mu w) = mu mod Z Phi^vee, as a canonical pi1 tuple.
IVec eta(const ExtAffElem& x);
int eta_index(const ExtAffElem& x);

// w~ = u * omega with u in W^a; returns (reduced word of u over S^a, omega index).
struct OmegaDecomposition {
  std::vector<int> word;  // indices into simple_aff, left to right
  int omega_class = 0;
};
OmegaDecomposition decompose(const ExtAffElem& x);

bool left_descent(const ExtAffElem& x, int simple_aff_idx);
bool right_descent(const ExtAffElem& x, int simple_aff_idx);
ExtAffElem left_mult_simple(const ExtAffElem& x, int simple_aff_idx);
ExtAffElem right_mult_simple(const ExtAffElem& x, int simple_aff_idx);

// ^K W~ for K a set of simple affine reflections (indices into simple_aff).
bool is_min_coset_rep(const ExtAffElem& x, const std::vector<int>& k);

}  // namespace adlv
