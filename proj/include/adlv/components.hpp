#pragma once

#include "adlv/sigma.hpp"

namespace adlv {

// --- Levi-relative basics -----------------------------------------------------

// Length of t^mu w measured against Phi_J only (w need not lie in W_J).
int length_in_levi(const RootDatum& datum, SimpleSet j, const ExtAffElem& x);

bool weyl_in_levi(const RootDatum& datum, SimpleSet j, WeylGroup::Id w);

// Newton point computed inside M_J: raw vector dominantized by W_J only.
QVec newton_in_levi(const RootDatum& datum, SimpleSet j, const ExtAffElem& x,
                    const Frobenius& sigma);

// kappa_{M_J} equality: difference in Z Phi_J^vee + (sigma - 1) Y.
bool kappa_levi_equal(const RootDatum& datum, SimpleSet j, const Frobenius& sigma,
                      const IVec& a, const IVec& b);

// eta_{M_J}: canonical J-dominant J-minuscule representative of mu + Z Phi_J^vee.
IVec levi_class_rep(const RootDatum& datum, SimpleSet j, const IVec& mu);

// Minimal-length coset representatives W_0^J = {w : w(Phi_J^+) > 0}.
std::vector<WeylGroup::Id> min_coset_reps(const RootDatum& datum, SimpleSet j);

// --- the engine types -----------------------------------------------------------

// Class x in pi1(M_J) together with its length-0 lift w~_x = t^{mu_x} w_x (D14).
struct Pi1MJElem {
  SimpleSet j = 0;
  IVec mu;          // canonical J-dominant J-minuscule representative
  WeylGroup::Id w = 0;
  ExtAffElem rep;
  bool operator==(const Pi1MJElem& o) const { return mu == o.mu; }
};

Pi1MJElem omega_rep(const RootDatum& datum, SimpleSet j, const IVec& any_rep);

struct HNStatus {
  bool nonempty = false;
  bool irreducible = false;
  bool lambda_central = false;
  QVec lambda_diamond;
  QVec defect;  // coroot coordinates of lambda_diamond - nu_G(b)
};

HNStatus hn_status(const RootDatum& datum, const Frobenius& sigma, const IVec& lambda,
                   const ExtAffElem& b);

struct NormalizedB {
  SimpleSet j = 0;
  ExtAffElem rep;  // sigma-conjugate of b inside W~_{M_J} with matching Newton
};

// J = J_{nu_G(b)} plus a representative b' in M_J with nu_{M_J}(b') = nu_G(b),
// found by bounded BFS over sigma-conjugates (D16).
NormalizedB levi_j_and_normalize(const RootDatum& datum, const Frobenius& sigma,
                                 const ExtAffElem& b, int radius = -1);

// Saturation set of lambda (D15): dominant mu with mu <= lambda in the coroot
// cone and lambda - mu in Z Phi^vee; full W_0-orbit closure optional.
std::vector<IVec> saturation_dominant(const RootDatum& datum, const IVec& lambda);
std::vector<IVec> saturation_orbit(const RootDatum& datum, const IVec& lambda);

std::vector<Pi1MJElem> s_plus(const RootDatum& datum, const Frobenius& sigma,
                              const IVec& lambda, const NormalizedB& b);

struct LeafResult {
  std::vector<ExtAffElem> leaf;           // {z w~_x sigma(z)^-1} ∩ Adm(lambda)
  std::vector<ExtAffElem> distinguished;  // leaf elements in ^{S_0} W~
};

LeafResult s_leaf(const RootDatum& datum, const Frobenius& sigma,
                  const AdmissibleSet& adm, const Pi1MJElem& x);

// Independent route: all semi-standard elements of Adm(lambda) with the given
// invariants (full scan; the decomposition oracle).
struct AdmScan {
  std::vector<NewtonKottwitz> invariants;  // parallel to adm.elements
  std::vector<char> semistd;
  struct ClassInfo {
    NewtonKottwitz inv;
    ExtAffElem rep;  // canonical representative (elem_order-minimal)
  };
  std::vector<ClassInfo> classes;  // deterministic order
};

AdmScan scan_adm(const AdmissibleSet& adm, const Frobenius& sigma);
std::vector<ExtAffElem> s_set_by_scan(const AdmissibleSet& adm, const AdmScan& scan,
                                      const NewtonKottwitz& binv);

// --- arrows (5.2) ---------------------------------------------------------------

struct ArrowEdge {
  int from = 0, to = 0;  // indices into the s_plus list
  int gamma = 0;         // root index (either sign), outside Phi_J
  int r = 1;
  bool tail = false;     // passes the two-factorization filter
  bool connectivity_qualified = false;  // gamma^vee J-dom + J-min, r in bounds
};

struct ArrowGraph {
  std::vector<ArrowEdge> edges;
  bool connected = false;  // via tail + qualified edges
};

bool arrow_holds(const RootDatum& datum, const Frobenius& sigma, const IVec& lambda,
                 SimpleSet j, const IVec& mu_x, const IVec& mu_x2, int gamma, int r);

ArrowGraph arrows(const RootDatum& datum, const Frobenius& sigma, const IVec& lambda,
                  SimpleSet j, const std::vector<Pi1MJElem>& splus);

bool arrow_tail_holds(const RootDatum& datum, const Frobenius& sigma,
                      const IVec& lambda, SimpleSet j, const IVec& mu_x,
                      const IVec& mu_x2, int gamma, int r);

// --- orbit types (7) --------------------------------------------------------------

struct OrbitInfo {
  std::vector<int> orbit;  // sigma-orbit of a root, positive representative first
  int n = 1;               // minimal i with alpha, sigma^i(alpha) in one Psi-component
  int type = 1;            // 1, 2, 3
  std::vector<int> psi;    // positive roots of Psi = Phi ∩ Z(orbit ∪ J)
  std::vector<std::pair<int, int>> vartheta;  // (alpha in orbit, theta root index)
  Pi1MJElem omega_class;   // omega_O = sum of coroots over the orbit
  bool sigma_fixed = false;
  bool simple_system_divergence = false;  // "O ∪ J" vs "O ∩ J" readings differ
};

OrbitInfo orbit_info(const RootDatum& datum, const Frobenius& sigma, SimpleSet j,
                     int root_idx);

// Psi = Phi ∩ Z(orbit ∪ J) together with its component structure and the
// minimal period n of sigma on the component containing the base root.
struct PsiData {
  std::vector<int> psi_pos;      // positive roots of Psi
  std::vector<int> comp_id;      // component index per psi_pos entry
  int n = 1;                     // minimal i with root, sigma^i(root) together
  int component_of(const RootDatum& datum, int root) const;  // -1 if outside
};
PsiData psi_data(const RootDatum& datum, const Frobenius& sigma, SimpleSet j,
                 int root_idx);

std::vector<int> c_set(const RootDatum& datum, const Frobenius& sigma,
                       const IVec& lambda, SimpleSet j, const Pi1MJElem& x);

// --- pi0 / J0-J1 -------------------------------------------------------------------

struct Pi0Prediction {
  AbelianGroup group;  // pi1(G)^sigma
  Int order = 1;
  bool consistency = false;  // Omega_J^sigma / ker eta_G matches, lattice-exactly
  bool discrete_fiber = false;  // central lambda branch (D18)
};

Pi0Prediction pi0_prediction(const RootDatum& datum, const Frobenius& sigma,
                             const IVec& lambda, const NormalizedB& b,
                             const HNStatus& hn);

struct J01Result {
  std::vector<std::pair<SimpleSet, SimpleSet>> per_x;  // (J_{x,0}, J_{x,1})
  SimpleSet j0 = 0, j1 = 0;
};

J01Result j0_j1(const RootDatum& datum, const Frobenius& sigma, SimpleSet j,
                const std::vector<Pi1MJElem>& splus);

// Connected components of the sub-Dynkin-graph on J.
std::vector<SimpleSet> levi_components(const RootDatum& datum, SimpleSet j);

// d = number of components of the datum (sigma is assumed transitive on them
// wherever the n ∈ {d,2d,3d} trichotomy applies).
int num_datum_components(const RootDatum& datum);

}  // namespace adlv
