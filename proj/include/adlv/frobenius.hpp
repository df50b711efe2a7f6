#pragma once

#include "adlv/affine.hpp"

namespace adlv {

// Length-preserving diagram automorphism, possibly permuting isomorphic
// components. Acts on Y, on roots, on W_0 by conjugation, and on S^a.
struct Frobenius {
  const RootDatum* datum = nullptr;
  std::vector<int> simple_perm;  // image of simple index i
  IMat y_mat;
  std::vector<std::uint16_t> root_perm;
  std::vector<WeylGroup::Id> w_conj;  // sigma w sigma^-1
  std::vector<int> aff_perm;          // induced permutation of S^a indices
  int order = 1;
  FiniteQuotient pi1_coinv;  // Y / (Z Phi^vee + (sigma-1) Y)

  int act_root(int r) const { return root_perm[r]; }
  int act_root_pow(int r, int power) const;
  IVec act(const IVec& v) const { return y_mat * v; }
  QVec act(const QVec& v) const { return y_mat.cast<Rational>() * v; }
  IVec act_pow(const IVec& v, int power) const;
  ExtAffElem act(const ExtAffElem& x) const {
    return {x.datum, IVec(y_mat * x.mu), w_conj[x.w]};
  }
  AffRoot act(const AffRoot& a) const { return {root_perm[a.root], a.k}; }
  bool is_identity() const { return order == 1; }

  std::vector<std::vector<int>> simple_orbits() const;  // sigma-orbits of S_0
  std::vector<int> root_orbit(int r) const;
  // Kottwitz point: class of mu in pi1(G)_sigma, canonical tuple.
  IVec kottwitz(const ExtAffElem& x) const { return pi1_coinv.canon(x.mu); }
  bool stabilizes(SimpleSet k) const;
  SimpleSet act_set(SimpleSet k) const;
};

Frobenius make_frobenius(const RootDatum& datum, const std::vector<int>& perm0);

// Named automorphisms. "flip": the order-2 diagram automorphism applied to
// every component; "triality": the order-3 rotation on D4; "shift": cyclic
// permutation of the d copies (identity diagram map); names compose as
// "shift+flip" etc.
Frobenius named_frobenius(const RootDatum& datum, const std::string& name);

AbelianGroup pi1_sigma_fixed(const Frobenius& sigma);
AbelianGroup pi1_sigma_coinvariants(const Frobenius& sigma);
// Lattice {y : (sigma - 1) y in Z Phi^vee}, the preimage of pi1^sigma.
IMat pi1_fixed_preimage(const Frobenius& sigma);

}  // namespace adlv
