#include <doctest.h>

#include "adlv/components.hpp"
#include "adlv/notation.hpp"

using namespace adlv;

namespace {
RootDatum datum(const char* name) { return build_root_datum(parse_datum_name(name)); }

// blind reimplementation of the backward exit count: iterate the explicit
// inverse element instead of repeated ws_act_inv
int backward_exit_oracle(const ExtAffElem& x, const Frobenius& sigma, int alpha) {
  ExtAffElem xi = invert(x);
  AffRoot a{alpha, 0};
  for (int i = 1;; ++i) {
    // (w~ sigma)^{-1} = sigma^{-1} ∘ w~^{-1}
    AffRoot b = act_on_affroot(xi, a);
    a = AffRoot{sigma.act_root_pow(b.root, sigma.order - 1), b.k};
    if (a.k != 0) return i;
    REQUIRE(i < 500);
  }
}
}  // namespace

TEST_CASE("frobenius construction and validation") {
  RootDatum a2 = datum("A2");
  Frobenius id = named_frobenius(a2, "id");
  CHECK(id.order == 1);
  Frobenius flip = named_frobenius(a2, "flip");
  CHECK(flip.order == 2);
  CHECK(flip.simple_perm == std::vector<int>{1, 0});
  // y-action swaps the fundamental coweights
  IVec f0 = IVec::Zero(2);
  f0[0] = 1;
  CHECK(flip.act(f0)[1] == 1);
  RootDatum d4 = datum("D4");
  Frobenius tri = named_frobenius(d4, "triality");
  CHECK(tri.order == 3);
  CHECK(tri.simple_perm[1] == 1);  // branch node fixed
  CHECK_THROWS_AS(make_frobenius(a2, std::vector<int>{0, 0}), Error);
  RootDatum b2 = datum("B2");
  CHECK_THROWS_AS(make_frobenius(b2, std::vector<int>{1, 0}), Error);
  RootDatum a1x2 = datum("A1x2");
  CHECK(named_frobenius(a1x2, "shift").order == 2);
  RootDatum a2x2 = datum("A2x2");
  CHECK(named_frobenius(a2x2, "twist").order == 4);
  CHECK(named_frobenius(a2x2, "shift+flip").order == 2);
}

TEST_CASE("newton and kottwitz points") {
  RootDatum a1 = datum("A1");
  Frobenius id = named_frobenius(a1, "id");
  // split translations: nu = dominant conjugate of mu
  IVec mu(1);
  mu << -3;
  NewtonKottwitz nk = newton_point(from_translation(a1, mu), id);
  CHECK(nk.newton[0] == Rational(3));
  // tau has nu = 0 and nontrivial kottwitz
  ExtAffElem tau = make_elem(a1, IVec::Ones(1), a1.weyl().simple(0));
  NewtonKottwitz nt = newton_point(tau, id);
  CHECK(nt.newton == QVec::Zero(1));
  CHECK(nt.kottwitz != id.kottwitz(aff_identity(a1)));
  // A2 with flip: t^{alpha_1^vee} has nu = (alpha_1^vee + alpha_2^vee)/2
  RootDatum a2 = datum("A2");
  Frobenius flip = named_frobenius(a2, "flip");
  NewtonKottwitz na = newton_point(from_translation(a2, a2.coroot_y[0]), flip);
  QVec expect = to_rational(IVec(a2.coroot_y[0] + a2.coroot_y[1]));
  for (int i = 0; i < 2; ++i) expect[i] /= Rational(2);
  CHECK(na.newton == expect);
  // invariance under sigma-conjugation over a ball
  for (const ExtAffElem& g : length_ball_all_classes(a2, 3)) {
    ExtAffElem x = from_translation(a2, a2.coroot_y[0]);
    CHECK(newton_point(sigma_conj(g, x, flip), flip) == na);
  }
  // the dominantized Newton point is sigma-invariant
  for (const ExtAffElem& x : length_ball_all_classes(a2, 4)) {
    QVec bar = newton_point(x, flip).newton;
    CHECK(flip.act(bar) == bar);
  }
}

TEST_CASE("semi-standard detection") {
  RootDatum a2 = datum("A2");
  Frobenius id = named_frobenius(a2, "id");
  // split translations are semi-standard
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b) {
      IVec mu(2);
      mu << a, b;
      CHECK(is_semi_standard(from_translation(a2, mu), id).semi_standard);
    }
  // Omega elements are semi-standard (nu = 0 cases included)
  Frobenius flip = named_frobenius(a2, "flip");
  for (const ExtAffElem& om : affine_data(a2).omega) {
    CHECK(is_semi_standard(om, id).semi_standard);
    CHECK(is_semi_standard(om, flip).semi_standard);
  }
  // finite-window oracle: stability of the positive Levi affine roots
  for (const ExtAffElem& x : length_ball_all_classes(a2, 4)) {
    for (const Frobenius* s : {&id, &flip}) {
      SemiStandardResult res = is_semi_standard(x, *s);
      QVec nu = res.nu;
      bool oracle = true;
      for (int r = 0; r < a2.num_roots() && oracle; ++r) {
        if (!a2.pairing<Rational>(r, nu).is_zero()) continue;
        for (Int k = -4; k <= 4; ++k) {
          AffRoot a{r, k};
          if (!is_positive_affroot(a2, a)) continue;
          AffRoot img = ws_act(x, *s, a);
          bool in_levi = a2.pairing<Rational>(img.root, nu).is_zero();
          if (!in_levi || !is_positive_affroot(a2, img)) { oracle = false; break; }
        }
      }
      CHECK(res.semi_standard == oracle);
    }
  }
}

TEST_CASE("conjugation moves") {
  RootDatum a1 = datum("A1");
  Frobenius id = named_frobenius(a1, "id");
  ExtAffElem t = from_translation(a1, a1.coroot_y[0]);
  // the finite simple does not descend t^{alpha^vee} (length oracle), so the
  // halfarrow move is refused there and applies at the affine simple instead
  CHECK(!conj_move(t, 0, id, MoveKind::HalfArrow).has_value());
  auto moved = conj_move(t, 1, id, MoveKind::HalfArrow);
  REQUIRE(moved.has_value());
  CHECK(*moved == from_translation(a1, IVec(-a1.coroot_y[0])));
  // halfarrow needs a strict left descent; the identity has none
  ExtAffElem e = aff_identity(a1);
  CHECK(!conj_move(e, 0, id, MoveKind::HalfArrow).has_value());
  // s e sigma(s) = e: an equal-length arrow move returning the element itself
  auto self_e = conj_move(e, 0, id, MoveKind::Arrow);
  REQUIRE(self_e.has_value());
  CHECK(*self_e == e);
  // fixed point with positive length: s_alpha is its own arrow image
  ExtAffElem sa = from_weyl(weyl_simple(a1, 0));
  auto self = conj_move(sa, 0, id, MoveKind::Arrow);
  REQUIRE(self.has_value());
  CHECK(*self == sa);
  // and a genuinely length-raising conjugation is refused
  ExtAffElem tau = make_elem(a1, IVec::Ones(1), a1.weyl().simple(0));
  CHECK(!conj_move(tau, 0, id, MoveKind::Arrow).has_value());
}

TEST_CASE("partial conjugation") {
  RootDatum a2 = datum("A2");
  Frobenius flip = named_frobenius(a2, "flip");
  std::vector<int> s0 = finite_simple_indices(a2);
  // already minimal: empty trace
  ExtAffElem e = aff_identity(a2);
  PartialConjResult r0 = partial_conjugation(e, s0, flip);
  CHECK(r0.x == e);
  CHECK(r0.trace.empty());
  PartialConjResult rk = partial_conjugation(e, {}, flip);
  CHECK(rk.x == e);
  // random small elements: validated output
  for (const ExtAffElem& w : length_ball_all_classes(a2, 5)) {
    PartialConjResult res = partial_conjugation(w, s0, flip);
    CHECK(is_min_coset_rep(res.x, s0));
    CHECK(in_parabolic(res.u, res.i_set));
    ExtAffElem cur = w;
    for (auto& [s, elem] : res.trace) {
      auto m = conj_move(cur, s, flip, MoveKind::Arrow);
      REQUIRE(m.has_value());
      CHECK(*m == elem);
      cur = elem;
    }
    CHECK(cur == compose(res.u, res.x));
    // uniqueness across the W_0-sigma-conjugacy class
    for (const ExtAffElem& g : parabolic_subgroup(a2, s0)) {
      if (length(g) > 1) continue;  // keep the test quick
      CHECK(partial_conjugation(sigma_conj(g, w, flip), s0, flip).x == res.x);
    }
  }
}

TEST_CASE("flat invariant") {
  RootDatum a1 = datum("A1");
  Frobenius id = named_frobenius(a1, "id");
  IVec alpha = a1.coroot_y[0];
  // w~ = t^{alpha^vee}: N = 1, flat = alpha^vee
  FlatInvariant f1 = flat_invariant(from_translation(a1, alpha), id, alpha);
  CHECK(f1.n_order == 1);
  CHECK(f1.vec == to_rational(alpha));
  // w~ = t^{alpha^vee} s: M = 3, flat = (2/3) alpha^vee
  ExtAffElem ts = make_elem(a1, alpha, a1.weyl().simple(0));
  FlatInvariant f2 = flat_invariant(ts, id, alpha);
  CHECK(f2.m_base == 3);
  CHECK(f2.n_order == 2);
  QVec expect = to_rational(alpha);
  expect[0] *= Rational(2, 3);
  CHECK(f2.vec == expect);
  CHECK(a1.pairing<Rational>(0, f2.vec) == Rational(4, 3));
  // the defining inequality M |<alpha,eta>| > 2A
  for (int r = 0; r < a1.n_pos; ++r) {
    Int p = a1.pairing<Int>(r, alpha);
    if (p != 0) CHECK(f2.m_base * (p < 0 ? -p : p) > 2 * f2.a_bound);
  }
  // wrong orbit is rejected
  CHECK_THROWS_AS(flat_invariant(from_translation(a1, IVec::Ones(1)), id, alpha),
                  Error);
  // dominant flat: z0 = identity
  MinZ0Result mz = min_z0(from_translation(a1, alpha), id, alpha);
  CHECK(mz.z0.length() == 0);
}

TEST_CASE("permissible roots") {
  RootDatum a2 = datum("A2");
  Frobenius id = named_frobenius(a2, "id");
  IVec lambda(2);
  lambda << 2, 2;
  AdmissibleSet adm = adm_set(a2, lambda);
  // regular dominant translation: every backward orbit exits at once
  IVec mu(2);
  mu << 1, 1;
  ExtAffElem t = from_translation(a2, mu);
  PermissibleData p = permissible(t, id, adm);
  for (auto& [root, m] : p.m_map) CHECK(m == 1);
  CHECK(p.m_map.size() == 3);  // nu regular: all positive roots counted
  // oracle agreement for the backward exit on assorted elements
  Frobenius flip = named_frobenius(a2, "flip");
  for (const ExtAffElem& x : adm.elements) {
    for (const Frobenius* s : {&id, &flip}) {
      QVec nu = newton_raw(x, *s);
      for (int r = 0; r < a2.n_pos; ++r) {
        if (a2.pairing<Rational>(r, nu).is_zero()) continue;
        CHECK(backward_exit(x, *s, r) == backward_exit_oracle(x, *s, r));
      }
    }
  }
  CHECK_THROWS_AS(permissible(from_translation(a2, IVec(5 * mu)), id, adm), Error);
}

TEST_CASE("pi1 fixed points and coinvariants") {
  RootDatum a2 = datum("A2");
  Frobenius flip = named_frobenius(a2, "flip");
  // sigma acts by inversion on Z/3: no fixed points, trivial coinvariants
  CHECK(pi1_sigma_fixed(flip).order() == 1);
  CHECK(pi1_sigma_coinvariants(flip).order() == 1);
  Frobenius id = named_frobenius(a2, "id");
  CHECK(pi1_sigma_fixed(id).order() == 3);
  CHECK(pi1_sigma_coinvariants(id).order() == 3);
  RootDatum a1 = datum("A1");
  CHECK(pi1_sigma_fixed(named_frobenius(a1, "id")).order() == 2);
}
