#include "doctest.h"

#include "weyl/io.hpp"

using namespace weyl;

TEST_CASE("word parsing") {
  const RootDatum& b3a = RootDatum::get("B3~");
  CHECK(parse_word(b3a, "23210").letters() == std::vector<int>{2, 3, 2, 1, 0});
  CHECK(parse_word(b3a, "s2 s3 s2 1 0").letters() == std::vector<int>{2, 3, 2, 1, 0});
  CHECK(parse_word(b3a, "s_232 s_1").letters() == std::vector<int>{2, 3, 2, 1});
  CHECK_THROWS_AS(parse_word(b3a, "2x"), ParseError);
  CHECK_THROWS_AS(parse_word(b3a, "294"), InvalidNode);
  CHECK_THROWS_AS(parse_word(RootDatum::get("B3"), "230"), InvalidNode);

  // rank >= 10 switches to one node per token
  const RootDatum& a12 = RootDatum::get("A12");
  CHECK(parse_word(a12, "12 3").letters() == std::vector<int>{12, 3});
}

TEST_CASE("root parsing") {
  const RootDatum& b3a = RootDatum::get("B3~");
  CHECK(parse_root(b3a, "a12233").coords == Vec{Rat(1), Rat(2), Rat(2), Rat(0)});
  CHECK(parse_root(b3a, "a0").coords == Vec{Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(parse_root(b3a, "a3+d").coords == Vec{Rat(1), Rat(2), Rat(3), Rat(1)});
  CHECK(parse_root(b3a, "-a3+2d").coords == Vec{Rat(2), Rat(4), Rat(3), Rat(2)});
  CHECK(parse_root(b3a, "[1,2,2,0]").coords == Vec{Rat(1), Rat(2), Rat(2), Rat(0)});
  CHECK(parse_root(b3a, "1,2,2,0").coords == Vec{Rat(1), Rat(2), Rat(2), Rat(0)});
  CHECK(parse_root(b3a, "[1/2,0,0,1]").coords == Vec{Rat(1, 2), Rat(0), Rat(0), Rat(1)});
  CHECK_THROWS_AS(parse_root(b3a, "a12x"), ParseError);
  CHECK_THROWS_AS(parse_root(b3a, "[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_root(b3a, "a9"), InvalidNode);
}

TEST_CASE("weight parsing") {
  const RootDatum& e8a = RootDatum::get("E8~");
  DualVec f = parse_weight(e8a, "2h1-h6");
  CHECK(f.coords[0] == Rat(2));
  CHECK(f.coords[5] == Rat(-1));
  CHECK(x_level(f).is_zero());
  CHECK(parse_weight(e8a, "h8").coords[7] == Rat(1));
  CHECK(parse_weight(e8a, "h1+3h2-2h1").coords[0] == Rat(-1));
  CHECK_THROWS_AS(parse_weight(e8a, "h9"), InvalidNode);
  CHECK_THROWS_AS(parse_weight(e8a, "2x1"), ParseError);
}

TEST_CASE("rationals as p/q strings") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(rat_to_string(Rat(-5, 10)) == "-1/2");
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
}

TEST_CASE("json round trips") {
  const RootDatum& c3a = RootDatum::get("C3~");
  RootVec v = parse_root(c3a, "a1223+2d");
  json jv = to_json(v);
  CHECK(vec_from_json(jv["coords"]) == v.coords);

  DualVec f = parse_weight(c3a, "h2-3h3");
  CHECK(vec_from_json(to_json(f)["coords"]) == f.coords);

  Vec with_fraction{Rat(1, 2), Rat(-3), Rat(7, 5)};
  CHECK(vec_from_json(to_json(with_fraction)) == with_fraction);

  WeylWord w = parse_word(c3a, "010 2321232");
  json jw = to_json(w);
  CHECK(parse_word(c3a, jw["word"].get<std::string>()).same_element(w));

  TranslationDecomp dec = decompose(w);
  json jd = to_json(dec);
  CHECK(vec_from_json(jd["lattice"]["coroot_coeffs"]) == dec.coroot_coeffs);
  CHECK(parse_word(c3a, jd["finite"].get<std::string>()).same_element(dec.finite_part));

  ExtElement u3 = weight_translation(c3a, 3);
  json ju = to_json(u3);
  CHECK(ju["auto"].get<std::string>() == "(0 3)(1 2)");
  CHECK(parse_word(c3a, ju["word"].get<std::string>()).same_element(u3.word));
}
