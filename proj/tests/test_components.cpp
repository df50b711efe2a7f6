#include <doctest.h>

#include <set>

#include "adlv/components.hpp"
#include "adlv/notation.hpp"

using namespace adlv;

namespace {
RootDatum datum(const char* name) { return build_root_datum(parse_datum_name(name)); }
}  // namespace

TEST_CASE("levi J and normalization") {
  RootDatum a2 = datum("A2");
  Frobenius id = named_frobenius(a2, "id");
  // b = identity: nu = 0, J = S_0
  NormalizedB nb = levi_j_and_normalize(a2, id, aff_identity(a2));
  CHECK(nb.j == set_of({0, 1}));
  CHECK(nb.rep == aff_identity(a2));
  // b = t^{rho^vee}: regular Newton, J empty
  IVec rho = IVec(a2.coroot_y[0] + a2.coroot_y[1]);
  NormalizedB nr = levi_j_and_normalize(a2, id, from_translation(a2, rho));
  CHECK(nr.j == 0u);
  CHECK(nr.rep == from_translation(a2, rho));
  // A1: tau is basic, J = S_0
  RootDatum a1 = datum("A1");
  Frobenius id1 = named_frobenius(a1, "id");
  ExtAffElem tau = make_elem(a1, IVec::Ones(1), a1.weyl().simple(0));
  NormalizedB nt = levi_j_and_normalize(a1, id1, tau);
  CHECK(nt.j == set_of({0}));
  CHECK(nt.rep == tau);
  // normalized representative always has matching Levi Newton point
  Frobenius flip = named_frobenius(a2, "flip");
  for (const ExtAffElem& b : length_ball_all_classes(a2, 4)) {
    NormalizedB n = levi_j_and_normalize(a2, flip, b);
    CHECK(weyl_in_levi(a2, n.j, n.rep.w));
    CHECK(newton_in_levi(a2, n.j, n.rep, flip) ==
          newton_point(b, flip).newton);
  }
}

TEST_CASE("omega representatives in the Levi") {
  RootDatum a1 = datum("A1");
  // x = 0 -> identity
  Pi1MJElem x0 = omega_rep(a1, set_of({0}), IVec::Zero(1));
  CHECK(x0.rep == aff_identity(a1));
  // J = S_0, generator class -> t^{omega} s
  Pi1MJElem x1 = omega_rep(a1, set_of({0}), IVec::Ones(1));
  CHECK(x1.rep == make_elem(a1, IVec::Ones(1), a1.weyl().simple(0)));
  // J empty: w_x = 1 and mu unchanged
  IVec mu(1);
  mu << 7;
  Pi1MJElem xe = omega_rep(a1, 0, mu);
  CHECK(xe.rep == from_translation(a1, mu));
  // canonical representative is class-independent (A2, J = {s1})
  RootDatum a2 = datum("A2");
  SimpleSet j = set_of({0});
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b) {
      IVec v(2);
      v << a, b;
      Pi1MJElem x = omega_rep(a2, j, v);
      CHECK(length_in_levi(a2, j, x.rep) == 0);
      for (Int c = -1; c <= 1; ++c) {
        Pi1MJElem y = omega_rep(a2, j, IVec(v + c * a2.coroot_y[0]));
        CHECK(y.mu == x.mu);
        CHECK(y.w == x.w);
      }
    }
}

TEST_CASE("hodge-newton status") {
  RootDatum a1 = datum("A1");
  Frobenius id = named_frobenius(a1, "id");
  // lambda = 0, b = 1: nonempty, not irreducible
  HNStatus h0 = hn_status(a1, id, IVec::Zero(1), aff_identity(a1));
  CHECK(h0.nonempty);
  CHECK(!h0.irreducible);
  CHECK(h0.lambda_central);
  // lambda = alpha^vee, b = 1: irreducible with defect (1)
  HNStatus h1 = hn_status(a1, id, a1.coroot_y[0], aff_identity(a1));
  CHECK(h1.nonempty);
  CHECK(h1.irreducible);
  CHECK(h1.defect == QVec::Ones(1));
  // lambda = omega^vee, b = 1: kappa mismatch
  HNStatus h2 = hn_status(a1, id, IVec::Ones(1), aff_identity(a1));
  CHECK(!h2.nonempty);
}

TEST_CASE("s_plus enumeration") {
  RootDatum a1 = datum("A1");
  Frobenius id = named_frobenius(a1, "id");
  NormalizedB nb = levi_j_and_normalize(a1, id, aff_identity(a1));
  auto sp = s_plus(a1, id, a1.coroot_y[0], nb);
  REQUIRE(sp.size() == 1);
  CHECK(sp[0].rep == aff_identity(a1));
  // A2, lambda = 2 rho^vee, b = t^{rho^vee}: J empty, S+ = {rho^vee}
  RootDatum a2 = datum("A2");
  Frobenius id2 = named_frobenius(a2, "id");
  IVec rho = IVec(a2.coroot_y[0] + a2.coroot_y[1]);
  NormalizedB nr = levi_j_and_normalize(a2, id2, from_translation(a2, rho));
  auto sp2 = s_plus(a2, id2, IVec(2 * rho), nr);
  REQUIRE(sp2.size() == 1);
  CHECK(sp2[0].mu == rho);
  // empty X is rejected
  NormalizedB ne = levi_j_and_normalize(a1, id, aff_identity(a1));
  CHECK_THROWS_AS(s_plus(a1, id, IVec::Ones(1), ne), Error);
}

TEST_CASE("leaves and the decomposition identity") {
  RootDatum a1 = datum("A1");
  Frobenius id = named_frobenius(a1, "id");
  AdmissibleSet adm = adm_set(a1, a1.coroot_y[0]);
  NormalizedB nb = levi_j_and_normalize(a1, id, aff_identity(a1));
  auto sp = s_plus(a1, id, a1.coroot_y[0], nb);
  LeafResult leaf = s_leaf(a1, id, adm, sp[0]);
  REQUIRE(leaf.leaf.size() == 1);
  CHECK(leaf.leaf[0] == aff_identity(a1));
  REQUIRE(leaf.distinguished.size() == 1);
  CHECK(leaf.distinguished[0] == aff_identity(a1));
  // full-scan agreement on several instances (A2 with flip)
  RootDatum a2 = datum("A2");
  Frobenius flip = named_frobenius(a2, "flip");
  for (const IVec& lambda : enumerate_dominant(a2, Rational(3))) {
    AdmissibleSet a = adm_set(a2, lambda);
    AdmScan scan = scan_adm(a, flip);
    for (const auto& cls : scan.classes) {
      NormalizedB n = levi_j_and_normalize(a2, flip, cls.rep);
      HNStatus hn = hn_status(a2, flip, lambda, n.rep);
      CHECK(hn.nonempty);  // realized classes are nonempty
      std::vector<ExtAffElem> united;
      for (const Pi1MJElem& x : s_plus(a2, flip, lambda, n)) {
        LeafResult lr = s_leaf(a2, flip, a, x);
        united.insert(united.end(), lr.leaf.begin(), lr.leaf.end());
        CHECK(lr.distinguished.size() == 1);
      }
      sort_elems(united);
      CHECK(united == s_set_by_scan(a, scan, cls.inv));
    }
  }
}

TEST_CASE("pi0 prediction") {
  RootDatum a1 = datum("A1");
  Frobenius id = named_frobenius(a1, "id");
  NormalizedB nb = levi_j_and_normalize(a1, id, aff_identity(a1));
  HNStatus hn = hn_status(a1, id, a1.coroot_y[0], aff_identity(a1));
  Pi0Prediction p = pi0_prediction(a1, id, a1.coroot_y[0], nb, hn);
  CHECK(p.order == 2);
  CHECK(p.consistency);
  // A2 flip: order 1
  RootDatum a2 = datum("A2");
  Frobenius flip = named_frobenius(a2, "flip");
  IVec rho = IVec(a2.coroot_y[0] + a2.coroot_y[1]);
  NormalizedB n2 = levi_j_and_normalize(a2, flip, aff_identity(a2));
  HNStatus h2 = hn_status(a2, flip, rho, aff_identity(a2));
  REQUIRE(h2.irreducible);
  Pi0Prediction p2 = pi0_prediction(a2, flip, rho, n2, h2);
  CHECK(p2.order == 1);
  CHECK(p2.consistency);
  // split case: order = |pi1|
  Frobenius id2 = named_frobenius(a2, "id");
  NormalizedB n3 = levi_j_and_normalize(a2, id2, aff_identity(a2));
  HNStatus h3 = hn_status(a2, id2, rho, aff_identity(a2));
  Pi0Prediction p3 = pi0_prediction(a2, id2, rho, n3, h3);
  CHECK(p3.order == 3);
  CHECK(p3.consistency);
  // central lambda: discrete fiber branch
  HNStatus hc = hn_status(a1, id, IVec::Zero(1), aff_identity(a1));
  Pi0Prediction pc = pi0_prediction(a1, id, IVec::Zero(1), nb, hc);
  CHECK(pc.discrete_fiber);
  // non-irreducible non-central input throws
  RootDatum a3 = datum("A3");
  Frobenius id3 = named_frobenius(a3, "id");
  IVec om1 = IVec::Zero(3);
  om1[0] = 1;  // omega_1^vee: nonempty for the right b but never irreducible vs b=t^{om1}
  NormalizedB n4 = levi_j_and_normalize(a3, id3, from_translation(a3, om1));
  HNStatus h4 = hn_status(a3, id3, om1, from_translation(a3, om1));
  CHECK(h4.nonempty);
  CHECK(!h4.irreducible);
  CHECK_THROWS_AS(pi0_prediction(a3, id3, om1, n4, h4), Error);
}

TEST_CASE("j0/j1 decomposition") {
  RootDatum a2 = datum("A2");
  Frobenius id = named_frobenius(a2, "id");
  // b = 1, lambda = rho: J = S_0, mu_x = 0 -> J1 empty
  NormalizedB nb = levi_j_and_normalize(a2, id, aff_identity(a2));
  IVec rho = IVec(a2.coroot_y[0] + a2.coroot_y[1]);
  auto sp = s_plus(a2, id, rho, nb);
  J01Result j01 = j0_j1(a2, id, nb.j, sp);
  CHECK(j01.j1 == 0u);
  CHECK(j01.j0 == nb.j);
  // J empty: both empty
  NormalizedB nr = levi_j_and_normalize(a2, id, from_translation(a2, rho));
  auto sp2 = s_plus(a2, id, IVec(2 * rho), nr);
  J01Result j2 = j0_j1(a2, id, nr.j, sp2);
  CHECK(j2.j0 == 0u);
  CHECK(j2.j1 == 0u);
}

TEST_CASE("orbit types") {
  // split: every orbit is type I with n = 1
  RootDatum a2 = datum("A2");
  Frobenius id = named_frobenius(a2, "id");
  for (int r = 0; r < a2.n_pos; ++r) {
    OrbitInfo info = orbit_info(a2, id, 0, r);
    CHECK(info.type == 1);
    CHECK(info.n == 1);
  }
  // A2 flip, orbit of a simple root: type II with vartheta = theta
  Frobenius flip = named_frobenius(a2, "flip");
  OrbitInfo i2 = orbit_info(a2, flip, 0, 0);
  CHECK(i2.type == 2);
  CHECK(i2.n == 1);
  REQUIRE(i2.vartheta.size() == 2);
  CHECK(i2.vartheta[0].second == a2.index_of_root(IVec(a2.root_x[0] + a2.root_x[1])));
  CHECK(i2.sigma_fixed);
  // D4 triality: with J = {centre} the outer orbit is type III (Psi = D4);
  // with J empty, Psi = A1^3 and the same orbit is type I with n = 3d.
  RootDatum d4 = datum("D4");
  Frobenius tri = named_frobenius(d4, "triality");
  OrbitInfo i3 = orbit_info(d4, tri, set_of({1}), 0);
  CHECK(i3.type == 3);
  CHECK(i3.n == 1);
  CHECK(i3.orbit.size() == 3);
  OrbitInfo i3e = orbit_info(d4, tri, 0, 0);
  CHECK(i3e.type == 1);
  CHECK(i3e.n == 3);
  // A3 flip, J = middle node, orbit {alpha_1, alpha_3}: brute-force cross-check
  RootDatum a3 = datum("A3");
  Frobenius f3 = named_frobenius(a3, "flip");
  SimpleSet j = set_of({1});
  OrbitInfo i4 = orbit_info(a3, f3, j, 0);
  CHECK(i4.orbit.size() == 2);
  CHECK(i4.n == 1);
  CHECK(i4.type == 2);
  // vartheta by blind minimal-subset growth: nodes {a1,a3} ∪ {a2}
  // minimal sigma-stable connected subset containing a1 is {a1,a2,a3}
  REQUIRE(!i4.vartheta.empty());
  IVec theta_x = IVec::Zero(3);
  theta_x << 1, 1, 1;
  CHECK(i4.vartheta[0].second == a3.index_of_root(theta_x));
  // type II/III on non-simply-laced data is rejected
  RootDatum b2x2 = datum("B2x2");
  Frobenius sh = named_frobenius(b2x2, "shift");
  (void)sh;  // B2 orbits under shift are type I; nothing to reject here
}

TEST_CASE("c sets") {
  RootDatum a2 = datum("A2");
  Frobenius id = named_frobenius(a2, "id");
  IVec rho = IVec(a2.coroot_y[0] + a2.coroot_y[1]);
  NormalizedB nb = levi_j_and_normalize(a2, id, aff_identity(a2));
  auto sp = s_plus(a2, id, rho, nb);
  std::vector<int> cs = c_set(a2, id, rho, nb.j, sp[0]);
  // J = S_0: no roots outside Phi_J at all
  CHECK(cs.empty());
  // J empty: C = {alpha : mu_x + alpha^vee ⪯ lambda}
  NormalizedB nr = levi_j_and_normalize(a2, id, from_translation(a2, rho));
  auto sp2 = s_plus(a2, id, IVec(2 * rho), nr);
  std::vector<int> cs2 = c_set(a2, id, IVec(2 * rho), nr.j, sp2[0]);
  for (int r : cs2)
    CHECK(preceq(a2, IVec(sp2[0].mu + a2.coroot_y[r]), IVec(2 * rho)));
}

TEST_CASE("saturation sets") {
  RootDatum a2 = datum("A2");
  IVec rho = IVec(a2.coroot_y[0] + a2.coroot_y[1]);
  auto doms = saturation_dominant(a2, rho);
  // dominant coweights under rho in the same class: 0 and rho
  REQUIRE(doms.size() == 2);
  CHECK(doms[0] == IVec::Zero(2));
  CHECK(doms[1] == rho);
  auto orbit = saturation_orbit(a2, rho);
  CHECK(orbit.size() == 7);  // W rho (6 elements) + 0
  for (const IVec& mu : orbit) CHECK(preceq(a2, mu, rho));
}

TEST_CASE("arrow relation on a split instance is loop-only") {
  RootDatum a2 = datum("A2");
  Frobenius id = named_frobenius(a2, "id");
  IVec rho = IVec(a2.coroot_y[0] + a2.coroot_y[1]);
  NormalizedB nr = levi_j_and_normalize(a2, id, from_translation(a2, rho));
  auto sp = s_plus(a2, id, IVec(2 * rho), nr);
  ArrowGraph g = arrows(a2, id, IVec(2 * rho), nr.j, sp);
  for (const ArrowEdge& e : g.edges) CHECK(e.from == e.to);
  CHECK(g.connected);  // single class
}
