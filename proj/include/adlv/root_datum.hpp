#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlv/intlin.hpp"
#include "adlv/types.hpp"

namespace adlv {

// Adjoint root datum for a product of simple types, possibly with several
// isomorphic copies. Coordinates are fixed once and for all:
//   X  = root lattice, basis = simple roots;  a root is its X-coordinates.
//   Y  = coweight lattice, basis = fundamental coweights; <f_i, alpha_j> = d_ij.
//   <alpha, mu> = dot(alpha.x_coords, mu.y_coords).
//   alpha_i^vee = row i of the Cartan matrix, as a Y-vector.

struct ComponentSpec {
  char type = 'A';
  int rank = 1;
  int copies = 1;
};

using DatumSpec = std::vector<ComponentSpec>;

struct RootDatum;

class WeylGroup {
public:
  using Id = std::uint16_t;

  int size() const { return int(y_mat_.size()); }
  Id identity() const { return 0; }
  Id simple(int i) const { return simple_[i]; }
  Id mult(Id a, Id b) const;
  Id inverse(Id a) const { return inv_[a]; }
  int length(Id a) const { return len_[a]; }
  const IMat& matrix(Id a) const { return y_mat_[a]; }
  const std::vector<std::uint8_t>& word(Id a) const { return word_[a]; }
  int act_root(Id a, int root_idx) const { return root_perm_[a][root_idx]; }
  Id longest() const { return longest_; }
  Id from_matrix(const IMat& m) const;
  // Reflection in the given root, as a group element.
  Id reflection(int root_idx) const { return reflection_[root_idx]; }

private:
  friend struct RootDatum;
  void build(const RootDatum& datum, int budget);

  std::vector<IMat> y_mat_;
  std::vector<std::vector<std::uint16_t>> root_perm_;
  std::vector<Id> inv_;
  std::vector<std::uint8_t> len_;
  std::vector<std::vector<std::uint8_t>> word_;
  std::vector<Id> simple_;
  std::vector<Id> reflection_;
  std::unordered_map<IMat, Id, IMatHash, IMatEq> index_;
  std::vector<Id> mult_table_;  // empty when the group is too big to tabulate
  Id longest_ = 0;
};

struct RootDatum {
  DatumSpec spec;                 // as requested (copies not expanded)
  std::vector<ComponentSpec> components;  // expanded, one entry per copy
  int rank = 0;                   // number of simple roots
  IMat cartan;                    // cartan(i,j) = <alpha_j, alpha_i^vee>
  IMat cartan_t;                  // transpose, columns = simple coroots
  QMat cartan_t_inv;              // exact inverse of cartan_t
  int n_pos = 0;
  std::vector<IVec> root_x;       // index < n_pos positive, n_pos+i = -(i)
  std::vector<IVec> coroot_y;
  std::vector<int> root_height;   // signed height
  std::vector<int> component_of_simple;
  std::vector<int> component_of_root;
  std::vector<std::vector<int>> simples_of_component;
  std::vector<int> highest_root_of_component;  // root index
  QMat gram;                      // invariant form on Y (coweight basis), D2
  std::vector<IMat> simple_refl_y;
  std::unordered_map<IVec, int, IVecHash, IVecEq> root_index;
  int weyl_budget = 60000;

  int num_roots() const { return 2 * n_pos; }
  bool is_positive(int idx) const { return idx < n_pos; }
  int negate(int idx) const { return idx < n_pos ? idx + n_pos : idx - n_pos; }
  int index_of_root(const IVec& x) const;  // -1 if not a root
  bool simply_laced() const;

  template <typename S>
  S pairing(int root_idx, const Vec<S>& y) const {
    S acc(0);
    const IVec& a = root_x[root_idx];
    for (int i = 0; i < rank; ++i)
      if (a[i] != 0) acc += S(a[i]) * y[i];
    return acc;
  }

  const WeylGroup& weyl() const;  // lazily enumerated, budgeted

  // Dynkin-diagram adjacency between simple roots.
  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }

  mutable std::shared_ptr<void> affine_cache;  // owned by affine_data()

private:
  mutable std::shared_ptr<WeylGroup> weyl_;
};

RootDatum build_root_datum(const DatumSpec& spec);

// --- Weyl elements as thin handles -----------------------------------------

struct WeylElem {
  const RootDatum* datum = nullptr;
  WeylGroup::Id id = 0;

  bool operator==(const WeylElem& o) const { return id == o.id; }
  bool operator!=(const WeylElem& o) const { return id != o.id; }
  int length() const { return datum->weyl().length(id); }
  const IMat& matrix() const { return datum->weyl().matrix(id); }
  std::vector<std::uint8_t> word() const { return datum->weyl().word(id); }
  WeylElem operator*(const WeylElem& o) const {
    return {datum, datum->weyl().mult(id, o.id)};
  }
  WeylElem inverse() const { return {datum, datum->weyl().inverse(id)}; }
  int act_root(int root_idx) const { return datum->weyl().act_root(id, root_idx); }
  template <typename S>
  Vec<S> act(const Vec<S>& v) const {
    return matrix().cast<S>() * v;
  }
};

inline WeylElem weyl_identity(const RootDatum& datum) { return {&datum, 0}; }
inline WeylElem weyl_simple(const RootDatum& datum, int i) {
  return {&datum, datum.weyl().simple(i)};
}
inline WeylElem weyl_reflection(const RootDatum& datum, int root_idx) {
  return {&datum, datum.weyl().reflection(root_idx)};
}

// --- vector-level operations ------------------------------------------------

// s_alpha(v) = v - <alpha, v> alpha^vee ; exact for both Int and Rational.
template <typename S>
Vec<S> reflect(const RootDatum& datum, int root_idx, const Vec<S>& v) {
  require(root_idx >= 0 && root_idx < datum.num_roots(), "NotARoot",
          "root index out of range");
  S c = datum.pairing<S>(root_idx, v);
  return v - datum.coroot_y[root_idx].cast<S>() * c;
}

template <typename S>
bool is_dominant(const RootDatum& datum, const Vec<S>& v) {
  for (int i = 0; i < datum.rank; ++i)
    if (v[i] < S(0)) return false;
  return true;
}

// Unique dominant conjugate together with the minimal Weyl element moving v
// onto it (word form; no group enumeration needed).
template <typename S>
std::pair<Vec<S>, std::vector<std::uint8_t>> dominant_conjugate_word(
    const RootDatum& datum, Vec<S> v) {
  std::vector<std::uint8_t> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < datum.rank; ++i) {
      if (v[i] < S(0)) {
        v = reflect<S>(datum, i, v);
        word.push_back(std::uint8_t(i));
        moved = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());  // z = s_{last} ... s_{first}, z(v_in) = v
  return {v, word};
}

template <typename S>
std::pair<Vec<S>, WeylElem> dominant_conjugate(const RootDatum& datum,
                                               const Vec<S>& v) {
  auto [dom, word] = dominant_conjugate_word<S>(datum, v);
  WeylElem z = weyl_identity(datum);
  for (std::uint8_t s : word) z = z * weyl_simple(datum, s);
  return {dom, z};
}

// Coordinates of v in the simple-coroot basis (exact rationals).
QVec coroot_coordinates(const RootDatum& datum, const QVec& v);

// v' <= v : v - v' is a nonnegative rational combination of simple coroots.
bool leq_cone(const RootDatum& datum, const QVec& lo, const QVec& hi);

// mu ⪯ lambda (D1): lambda - dominant(mu) in the >=0 coroot cone AND
// lambda - mu in ZPhi^vee. The congruence clause can be dropped process-wide
// (CLI --no-preceq-congruence) to probe the alternative reading of ⪯.
bool preceq(const RootDatum& datum, const IVec& mu, const IVec& lambda);
bool preceq_with(const RootDatum& datum, const IVec& mu, const IVec& lambda,
                 bool with_congruence);
void set_preceq_congruence(bool on);
bool preceq_congruence();
bool in_coroot_lattice(const RootDatum& datum, const IVec& v);

Rational coroot_height(const RootDatum& datum, const IVec& dominant_mu);
std::vector<IVec> enumerate_dominant(const RootDatum& datum, const Rational& max_height);

// --- subsets of simple reflections ------------------------------------------

using SimpleSet = std::uint32_t;  // bitmask over simple indices

inline bool set_contains(SimpleSet k, int i) { return (k >> i) & 1u; }
std::vector<int> set_elements(SimpleSet k);
SimpleSet set_of(const std::vector<int>& v);

std::vector<int> positive_roots_of_levi(const RootDatum& datum, SimpleSet k);

struct CoweightFlags {
  bool k_dominant = false;
  bool k_antidominant = false;
  bool k_minuscule = false;
  bool strongly_k_minuscule = false;
};

CoweightFlags classify_coweight(const RootDatum& datum, SimpleSet k, const QVec& mu,
                                bool want_strongly = false);

// gamma^vee strongly K-minuscule (gamma a positive root outside Phi_K).
bool strongly_k_minuscule(const RootDatum& datum, SimpleSet k, int gamma_idx);

std::vector<int> phi_of_vector(const RootDatum& datum, const QVec& v);  // positive idx
SimpleSet levi_of_dominant(const RootDatum& datum, const QVec& v);
QVec project_orthogonal_to_levi(const RootDatum& datum, SimpleSet k, const QVec& v);

// Exact solve helpers over the rationals (square, invertible systems).
QVec solve_rational(QMat a, QVec b);
QMat invert_rational(const QMat& a);

}  // namespace adlv
