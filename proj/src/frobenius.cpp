#include "adlv/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace adlv {

int Frobenius::act_root_pow(int r, int power) const {
  power %= order;
  if (power < 0) power += order;
  for (int i = 0; i < power; ++i) r = root_perm[r];
  return r;
}

IVec Frobenius::act_pow(const IVec& v, int power) const {
  power %= order;
  if (power < 0) power += order;
  IVec out = v;
  for (int i = 0; i < power; ++i) out = y_mat * out;
  return out;
}

std::vector<std::vector<int>> Frobenius::simple_orbits() const {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(datum->rank, false);
  for (int i = 0; i < datum->rank; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int j = i;
    do {
      orb.push_back(j);
      seen[j] = true;
      j = simple_perm[j];
    } while (j != i);
    orbits.push_back(orb);
  }
  return orbits;
}

std::vector<int> Frobenius::root_orbit(int r) const {
  std::vector<int> orb;
  int j = r;
  do {
    orb.push_back(j);
    j = root_perm[j];
  } while (j != r);
  return orb;
}

bool Frobenius::stabilizes(SimpleSet k) const { return act_set(k) == k; }

SimpleSet Frobenius::act_set(SimpleSet k) const {
  SimpleSet out = 0;
  for (int i : set_elements(k)) out |= (1u << simple_perm[i]);
  return out;
}

Frobenius make_frobenius(const RootDatum& d, const std::vector<int>& perm0) {
  require(int(perm0.size()) == d.rank, "NotDiagramAutomorphism",
          "permutation must cover all simple roots");
  std::vector<bool> hit(d.rank, false);
  for (int v : perm0) {
    require(v >= 0 && v < d.rank && !hit[v], "NotDiagramAutomorphism",
            "not a permutation");
    hit[v] = true;
  }
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      require(d.cartan(perm0[i], perm0[j]) == d.cartan(i, j),
              "NotDiagramAutomorphism", "Cartan matrix not preserved");

  Frobenius f;
  f.datum = &d;
  f.simple_perm = perm0;
  // alpha_i -> alpha_{perm(i)} on X; on Y the fundamental coweights follow
  // the same permutation: f_i -> f_{perm(i)}.
  f.y_mat = IMat::Zero(d.rank, d.rank);
  for (int i = 0; i < d.rank; ++i) f.y_mat(perm0[i], i) = 1;

  f.root_perm.resize(d.num_roots());
  for (int r = 0; r < d.num_roots(); ++r) {
    IVec x = IVec::Zero(d.rank);
    for (int j = 0; j < d.rank; ++j) x[perm0[j]] = d.root_x[r][j];
    int idx = d.index_of_root(x);
    require(idx >= 0, "NotDiagramAutomorphism", "roots not preserved");
    f.root_perm[r] = std::uint16_t(idx);
  }

  f.order = 1;
  {
    IMat m = f.y_mat;
    while (!(m == identity_mat(d.rank))) {
      m = IMat(m * f.y_mat);
      ++f.order;
      require(f.order <= 64, "NotDiagramAutomorphism", "order out of range");
    }
  }

  const WeylGroup& g = d.weyl();
  f.w_conj.resize(g.size());
  QMat y_inv = invert_rational(f.y_mat.cast<Rational>());
  IMat y_inv_i(d.rank, d.rank);
  for (int a = 0; a < d.rank; ++a)
    for (int b = 0; b < d.rank; ++b) y_inv_i(a, b) = y_inv(a, b).num();
  for (int w = 0; w < g.size(); ++w)
    f.w_conj[w] = g.from_matrix(IMat(f.y_mat * g.matrix(WeylGroup::Id(w)) * y_inv_i));

  const AffineData& ad = affine_data(d);
  f.aff_perm.resize(ad.simple_aff.size());
  for (size_t i = 0; i < ad.simple_aff.size(); ++i) {
    AffRoot img = f.act(ad.simple_aff[i]);
    auto it = std::find(ad.simple_aff.begin(), ad.simple_aff.end(), img);
    require(it != ad.simple_aff.end(), "NotDiagramAutomorphism",
            "sigma does not permute the simple affine reflections");
    f.aff_perm[i] = int(it - ad.simple_aff.begin());
  }

  IMat shifted = lattice_sum(d.cartan_t, IMat(f.y_mat - identity_mat(d.rank)));
  f.pi1_coinv = finite_quotient(shifted);
  return f;
}

namespace {

std::vector<int> flip_perm_of_component(char type, int rank, int base) {
  std::vector<int> p(rank);
  auto id = [&] { for (int i = 0; i < rank; ++i) p[i] = base + i; };
  switch (type) {
    case 'A':
      require(rank >= 2, "NotDiagramAutomorphism", "A_1 has no flip");
      for (int i = 0; i < rank; ++i) p[i] = base + rank - 1 - i;
      break;
    case 'D':
      id();
      p[rank - 2] = base + rank - 1;
      p[rank - 1] = base + rank - 2;
      break;
    case 'E':
      require(rank == 6, "NotDiagramAutomorphism", "only E6 has a flip");
      id();
      p[0] = base + 5;  // 1 <-> 6
      p[5] = base + 0;
      p[2] = base + 4;  // 3 <-> 5
      p[4] = base + 2;
      break;
    default:
      fail("NotDiagramAutomorphism",
           std::string("component ") + type + " has no nontrivial flip");
  }
  return p;
}

}  // namespace

Frobenius named_frobenius(const RootDatum& d, const std::string& name) {
  std::vector<int> perm(d.rank);
  for (int i = 0; i < d.rank; ++i) perm[i] = i;

  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '+')) {
    std::vector<int> step(d.rank);
    if (part == "id" || part.empty()) {
      for (int i = 0; i < d.rank; ++i) step[i] = i;
    } else if (part == "flip") {
      for (size_t c = 0; c < d.components.size(); ++c) {
        auto p = flip_perm_of_component(d.components[c].type, d.components[c].rank,
                                        d.simples_of_component[c][0]);
        for (int i = 0; i < d.components[c].rank; ++i)
          step[d.simples_of_component[c][0] + i] = p[i];
      }
    } else if (part == "triality") {
      require(d.components.size() >= 1, "NotDiagramAutomorphism", "empty datum");
      for (size_t c = 0; c < d.components.size(); ++c) {
        require(d.components[c].type == 'D' && d.components[c].rank == 4,
                "NotDiagramAutomorphism", "triality needs D4 components");
        int b = d.simples_of_component[c][0];
        // Bourbaki D4: outer nodes 1, 3, 4 around the centre 2.
        step[b + 0] = b + 2;
        step[b + 2] = b + 3;
        step[b + 3] = b + 0;
        step[b + 1] = b + 1;
      }
    } else if (part == "shift") {
      const size_t nc = d.components.size();
      require(nc >= 2, "NotDiagramAutomorphism", "shift needs several copies");
      for (size_t c = 0; c < nc; ++c) {
        const auto& from = d.simples_of_component[c];
        const auto& to = d.simples_of_component[(c + 1) % nc];
        require(from.size() == to.size(), "NotDiagramAutomorphism",
                "shift needs isomorphic copies");
        for (size_t i = 0; i < from.size(); ++i) step[from[i]] = to[i];
      }
    } else if (part == "twist") {
      // cyclic shift with the diagram flip applied on wrap-around; order 2d
      const size_t nc = d.components.size();
      require(nc >= 2, "NotDiagramAutomorphism", "twist needs several copies");
      for (size_t c = 0; c < nc; ++c) {
        const auto& from = d.simples_of_component[c];
        const auto& to = d.simples_of_component[(c + 1) % nc];
        require(from.size() == to.size(), "NotDiagramAutomorphism",
                "twist needs isomorphic copies");
        if (c + 1 < nc) {
          for (size_t i = 0; i < from.size(); ++i) step[from[i]] = to[i];
        } else {
          auto p = flip_perm_of_component(d.components[c].type, d.components[c].rank,
                                          d.simples_of_component[0][0]);
          for (size_t i = 0; i < from.size(); ++i) step[from[i]] = p[i];
        }
      }
    } else {
      fail("NotDiagramAutomorphism", "unknown automorphism name '" + part + "'");
    }
    std::vector<int> next(d.rank);
    for (int i = 0; i < d.rank; ++i) next[i] = step[perm[i]];
    perm = next;
  }
  return make_frobenius(d, perm);
}

IMat pi1_fixed_preimage(const Frobenius& sigma) {
  const RootDatum& d = *sigma.datum;
  return lattice_preimage(IMat(sigma.y_mat - identity_mat(d.rank)), d.cartan_t);
}

AbelianGroup pi1_sigma_fixed(const Frobenius& sigma) {
  const RootDatum& d = *sigma.datum;
  return lattice_quotient(pi1_fixed_preimage(sigma), d.cartan_t);
}

AbelianGroup pi1_sigma_coinvariants(const Frobenius& sigma) {
  const RootDatum& d = *sigma.datum;
  IMat l = lattice_sum(d.cartan_t, IMat(sigma.y_mat - identity_mat(d.rank)));
  return quotient_group(d.rank, l);
}

}  // namespace adlv
