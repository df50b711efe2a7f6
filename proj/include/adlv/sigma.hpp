#pragma once

#include "adlv/bruhat.hpp"

namespace adlv {

// g w~ sigma(g)^-1, the twisted conjugation everything here revolves around.
ExtAffElem sigma_conj(const ExtAffElem& g, const ExtAffElem& x, const Frobenius& sigma);

// (w~ sigma) and its inverse acting on affine roots.
AffRoot ws_act(const ExtAffElem& x, const Frobenius& sigma, const AffRoot& a);
AffRoot ws_act_inv(const ExtAffElem& x, const Frobenius& sigma, const AffRoot& a);
AffRoot ws_act_pow(const ExtAffElem& x, const Frobenius& sigma, AffRoot a, int power);

// Order of p(w~ sigma) in W_0 x <sigma> (faithful on Y).
int ws_order(const ExtAffElem& x, const Frobenius& sigma);
// Linear part of w~ sigma on Y.
IMat ws_linear(const ExtAffElem& x, const Frobenius& sigma);

struct NewtonKottwitz {
  QVec newton;    // dominant representative
  IVec kottwitz;  // canonical tuple in pi1(G)_sigma
  bool operator==(const NewtonKottwitz& o) const {
    return newton == o.newton && kottwitz == o.kottwitz;
  }
};

QVec newton_raw(const ExtAffElem& x, const Frobenius& sigma);  // not dominantized
NewtonKottwitz newton_point(const ExtAffElem& x, const Frobenius& sigma);

struct SemiStandardResult {
  bool semi_standard = false;
  bool standard = false;
  QVec nu;  // nu_w~, not dominantized
};
SemiStandardResult is_semi_standard(const ExtAffElem& x, const Frobenius& sigma);

enum class MoveKind { Arrow, HalfArrow };  // ->_s needs l <=, ⇀_s needs sw~ < w~

std::optional<ExtAffElem> conj_move(const ExtAffElem& x, int simple_aff_idx,
                                    const Frobenius& sigma, MoveKind kind);

// --- partial conjugation (He), D12 -------------------------------------------

struct PartialConjResult {
  ExtAffElem x;                                 // in ^K W~
  ExtAffElem u;                                 // in W_{I(K,x)}
  std::vector<int> i_set;                       // I(K, x) as simple-aff indices
  std::vector<std::pair<int, ExtAffElem>> trace;  // moves (s, result)
};

std::vector<int> i_set(const std::vector<int>& k, const ExtAffElem& x,
                       const Frobenius& sigma);

PartialConjResult partial_conjugation(const ExtAffElem& w, const std::vector<int>& k,
                                      const Frobenius& sigma, int plateau_budget = 200000);

// W_K for spherical K (affine simple indices); throws BudgetExceeded otherwise.
std::vector<ExtAffElem> parabolic_subgroup(const RootDatum& datum,
                                           const std::vector<int>& k,
                                           int budget = 100000);

bool in_parabolic(const ExtAffElem& u, const std::vector<int>& k);

// Strip left K-descents: w = u * x with x in ^K W~, u in W_K.
std::pair<ExtAffElem, ExtAffElem> min_coset_split(const ExtAffElem& w,
                                                  const std::vector<int>& k);

// --- flat invariant (3.2) -----------------------------------------------------

struct FlatInvariant {
  IVec eta;
  Int a_bound = 0;  // A = max |<alpha, eta>|
  Int m_base = 2;   // minimal M >= 2 with M |<alpha,eta>| > 2A (D11)
  int n_order = 1;  // N = order of p(w~ sigma)
  QVec vec;         // nu^flat
};

FlatInvariant flat_invariant(const ExtAffElem& x, const Frobenius& sigma,
                             const IVec& eta);

struct MinZ0Result {
  WeylElem z0;
  ExtAffElem conjugated;  // z0 w~ sigma(z0)^-1
};
MinZ0Result min_z0(const ExtAffElem& x, const Frobenius& sigma, const IVec& eta);

// --- permissible roots (3.1) ---------------------------------------------------

// m_{alpha,w~} = min{ i >= 1 : (w~ sigma)^{-i}(alpha) leaves the finite roots }.
int backward_exit(const ExtAffElem& x, const Frobenius& sigma, int alpha_idx);

struct PermissibleData {
  std::vector<std::pair<int, int>> m_map;  // (positive root index, m_alpha)
  std::vector<int> p_set;                  // the permissible ones
};
PermissibleData permissible(const ExtAffElem& x, const Frobenius& sigma,
                            const AdmissibleSet& adm);

// sigma-conjugates { u w~ sigma(u)^-1 : u in W_K }, K spherical; deduplicated.
std::vector<ExtAffElem> sigma_class_by_parabolic(const ExtAffElem& w,
                                                 const std::vector<int>& k,
                                                 const Frobenius& sigma);

std::vector<int> finite_simple_indices(const RootDatum& datum);  // S_0 inside S^a

}  // namespace adlv
