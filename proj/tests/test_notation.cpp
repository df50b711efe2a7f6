#include <doctest.h>

#include "adlv/notation.hpp"

using namespace adlv;

TEST_CASE("element notation round trip") {
  RootDatum d = build_root_datum(parse_datum_name("A2"));
  for (const char* text : {"t[0,0]", "t[1,0]", "t[-2,3].s1", "t[0,0].s1.s2",
                           "t[1,-1].s2.s1.s2"}) {
    ExtAffElem x = parse_elem(d, text);
    // canonical print uses the greedy word; reparse must reproduce the element
    CHECK(parse_elem(d, print_elem(x)) == x);
  }
  // canonical strings are fixed points of parse-then-print
  for (const ExtAffElem& x : length_ball_all_classes(d, 4)) {
    std::string s = print_elem(x);
    CHECK(print_elem(parse_elem(d, s)) == s);
  }
  // bare words parse with zero translation
  CHECK(parse_elem(d, "s1.s2") == parse_elem(d, "t[0,0].s1.s2"));
  CHECK_THROWS_AS(parse_elem(d, "t[1]"), Error);
  CHECK_THROWS_AS(parse_elem(d, "t[1,0].s9"), Error);
  CHECK_THROWS_AS(parse_elem(d, "t[1,0]x"), Error);
}

TEST_CASE("datum names and specs") {
  CHECK(datum_name(parse_datum_name("A2")) == "A2");
  CHECK(datum_name(parse_datum_name("A1x2")) == "A1x2");
  CHECK(datum_name(parse_datum_name("D4")) == "D4");
  CHECK(datum_name(parse_datum_name("A2+B2")) == "A2+B2");
  DatumSpec spec = parse_datum_name("A2x2");
  Json j = datum_spec_to_json(spec);
  DatumSpec back = datum_spec_from_json(j);
  CHECK(back.size() == 1);
  CHECK(back[0].copies == 2);
  CHECK_THROWS_AS(parse_datum_name("2A"), Error);
}

TEST_CASE("frobenius specs") {
  RootDatum d = build_root_datum(parse_datum_name("A2"));
  Frobenius f = frobenius_from_json(d, Json{{"perm", {2, 1}}});
  CHECK(f.order == 2);
  Frobenius g = frobenius_from_json(d, Json("flip"));
  CHECK(g.simple_perm == f.simple_perm);
  RootDatum d2 = build_root_datum(parse_datum_name("A2x2"));
  // per-component template with a shift: order 4 twist
  Frobenius tw = frobenius_from_json(
      d2, Json{{"perm", {1, 2}}, {"components_shift", 1}});
  CHECK(tw.order == 2);  // plain shift
  CHECK_THROWS_AS(frobenius_from_json(d, Json{{"perm", {1, 1}}}), Error);
}

TEST_CASE("ivec parsing") {
  IVec v = parse_ivec("1,-2,3", 3);
  CHECK(v[1] == -2);
  CHECK_THROWS_AS(parse_ivec("1,2", 3), Error);
  CHECK(print_ivec(v) == "1,-2,3");
}
