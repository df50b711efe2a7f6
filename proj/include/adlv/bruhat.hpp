#pragma once

#include <unordered_set>

#include "adlv/affine.hpp"
#include "adlv/frobenius.hpp"

namespace adlv {

bool bruhat_leq(const ExtAffElem& x, const ExtAffElem& y);

// Lower covers: all z = r y with r an affine reflection and l(z) = l(y) - 1.
std::vector<ExtAffElem> covers_down(const ExtAffElem& y);

struct AdmissibleSet {
  const RootDatum* datum = nullptr;
  IVec lambda;
  std::vector<ExtAffElem> elements;  // sorted by (length, mu lex, w)
  std::vector<ExtAffElem> maximal;   // the t^{w(lambda)}
  std::unordered_set<ExtAffElem, ExtAffHash> index;
  int eta_class = 0;

  bool contains(const ExtAffElem& x) const { return index.count(x) > 0; }
  std::size_t size() const { return elements.size(); }
};

// Downward Bruhat closure of {t^{w(lambda)} : w in W_0} (cover recursion, D8).
AdmissibleSet adm_set(const RootDatum& datum, const IVec& lambda);

// Independent construction: filter the length ball by bruhat_leq (test oracle).
std::vector<ExtAffElem> adm_set_by_ball_filter(const RootDatum& datum,
                                               const IVec& lambda);

// W^a-ball of the given eta class: {u * omega_class : l(u) <= radius}.
std::vector<ExtAffElem> length_ball(const RootDatum& datum, int radius,
                                    int eta_class);
std::vector<ExtAffElem> length_ball_all_classes(const RootDatum& datum, int radius);

enum class Side { Left, Right };

// w~ in Adm(lambda) is left/right R-distinct when every s in R pushes it out.
bool distinct_test(const ExtAffElem& x, const std::vector<int>& r_orbit, Side side,
                   const AdmissibleSet& adm);

// Deterministic ordering used everywhere a set of elements is listed.
bool elem_order(const ExtAffElem& a, const ExtAffElem& b);
void sort_elems(std::vector<ExtAffElem>& v);

}  // namespace adlv
