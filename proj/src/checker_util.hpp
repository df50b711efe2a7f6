#pragma once

#include "adlv/lab.hpp"

namespace adlv {
namespace detail {

inline std::string kv(const std::string& a, const std::string& b) {
  return a + "=" + b + "|";
}

inline std::string root_key(const RootDatum& d, int r) {
  return "r[" + print_ivec(d.root_x[r]) + "]";
}

inline std::string set_key(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

// Subsets of the finite simple reflections, smallest first, deterministic.
inline std::vector<std::vector<int>> simple_subsets(const RootDatum& d,
                                                    int max_size) {
  std::vector<std::vector<int>> out;
  for (SimpleSet k = 0; k < (1u << d.rank); ++k) {
    std::vector<int> v = set_elements(k);
    if (int(v.size()) <= max_size || int(v.size()) == d.rank) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Proper-per-component subsets of S^a (spherical parabolics), size-capped.
inline std::vector<std::vector<int>> spherical_affine_subsets(const RootDatum& d,
                                                              int max_size) {
  const AffineData& ad = affine_data(d);
  const int n = int(ad.simple_aff.size());
  auto component_of = [&](int i) {
    return d.component_of_root[ad.simple_aff[i].root];
  };
  std::vector<int> comp_size(d.components.size(), 0);
  for (int i = 0; i < n; ++i) ++comp_size[component_of(i)];
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) v.push_back(i);
    if (int(v.size()) > max_size) continue;
    std::vector<int> per_comp(d.components.size(), 0);
    for (int i : v) ++per_comp[component_of(i)];
    bool spherical = true;
    for (size_t c = 0; c < d.components.size(); ++c)
      if (per_comp[c] == comp_size[c]) spherical = false;  // full affine diagram
    if (spherical) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Braid order m(s, s') of two finite simple reflections.
inline int braid_order(const RootDatum& d, int i, int j) {
  Int c = d.cartan(i, j) * d.cartan(j, i);
  if (c == 0) return 2;
  if (c == 1) return 3;
  if (c == 2) return 4;
  return 6;
}

// R-universe for the Appendix pair lemmas: sigma-orbits of S_0 together with
// all singletons and commuting/braid-3 pairs (the cases the proofs cover).
inline std::vector<std::vector<int>> appendix_r_sets(LabContext& ctx) {
  const RootDatum& d = ctx.datum();
  std::vector<std::vector<int>> out = ctx.sigma_orbits();
  for (int i = 0; i < d.rank; ++i) out.push_back({i});
  for (int i = 0; i < d.rank; ++i)
    for (int j = i + 1; j < d.rank; ++j)
      if (braid_order(d, i, j) <= 3) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline WeylElem longest_in_parabolic(const RootDatum& d, const std::vector<int>& r) {
  WeylElem w = weyl_identity(d);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : r) {
      if (w.act_root(s) < d.n_pos) {  // l(w s) > l(w)
        w = w * weyl_simple(d, s);
        moved = true;
        break;
      }
    }
  }
  return w;
}

inline std::vector<ExtAffElem> finite_parabolic(const RootDatum& d,
                                                const std::vector<int>& r) {
  return parabolic_subgroup(d, r, 100000);
}

// Root alpha (character side) is K-(anti)dominant against the K-coroots.
inline bool root_k_dominant(const RootDatum& d, SimpleSet k, int root) {
  for (int t : positive_roots_of_levi(d, k))
    if (d.pairing<Int>(root, d.coroot_y[t]) < 0) return false;
  return true;
}
inline bool root_k_antidominant(const RootDatum& d, SimpleSet k, int root) {
  for (int t : positive_roots_of_levi(d, k))
    if (d.pairing<Int>(root, d.coroot_y[t]) > 0) return false;
  return true;
}

// Coroot of `root` is K-dominant / K-antidominant / K-minuscule.
inline bool coroot_k_dominant(const RootDatum& d, SimpleSet k, int root) {
  for (int t : positive_roots_of_levi(d, k))
    if (d.pairing<Int>(t, d.coroot_y[root]) < 0) return false;
  return true;
}
inline bool coroot_k_antidominant(const RootDatum& d, SimpleSet k, int root) {
  for (int t : positive_roots_of_levi(d, k))
    if (d.pairing<Int>(t, d.coroot_y[root]) > 0) return false;
  return true;
}
inline bool coroot_k_minuscule(const RootDatum& d, SimpleSet k, int root) {
  for (int t : positive_roots_of_levi(d, k)) {
    Int p = d.pairing<Int>(t, d.coroot_y[root]);
    if (p > 1 || p < -1) return false;
  }
  return true;
}

}  // namespace detail
}  // namespace adlv
