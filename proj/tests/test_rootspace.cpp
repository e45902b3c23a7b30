#include <set>

#include "doctest.h"

#include "weyl/rootspace.hpp"

using namespace weyl;

namespace {

using IVec = std::vector<std::int64_t>;

std::set<IVec> tagged(const RootSystemTable& t, bool want_long) {
  std::set<IVec> out;
  for (const PositiveRoot& r : t.positive)
    if (r.long_root == want_long) out.insert(r.coords);
  return out;
}

}  // namespace

TEST_CASE("bilinear forms") {
  const RootDatum& b3 = RootDatum::get("B3");
  Mat expect(3, 3);
  int vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) expect.at(i, j) = Rat(vals[i][j]);
  CHECK(bilinear_form(b3) == expect);

  const RootDatum& f4 = RootDatum::get("F4");
  CHECK(bilinear_form(f4).at(2, 3) == Rat(-1, 2));

  for (const char* type : {"A3~", "B3~", "C3~", "D4~", "E6~", "F4~", "G2~"}) {
    const RootDatum& d = RootDatum::get(type);
    CHECK(norm2(null_root(d)).is_zero());
    for (int label : d.labels()) CHECK(inner(simple_root(d, label), null_root(d)).is_zero());
  }
}

TEST_CASE("simple reflections") {
  const RootDatum& b3 = RootDatum::get("B3");
  RootVec a2 = simple_root(b3, 2);
  RootVec img = simple_reflection(b3, 3, a2);
  CHECK(img.coords == Vec{Rat(0), Rat(1), Rat(2)});  // alpha_2 + 2 alpha_3

  CHECK(simple_reflection(b3, 2, a2).coords == Vec{Rat(0), Rat(-1), Rat(0)});

  const RootDatum& b3a = RootDatum::get("B3~");
  RootVec a0 = simple_root(b3a, 0);
  CHECK(simple_reflection(b3a, 2, a0).coords == Vec{Rat(0), Rat(1), Rat(0), Rat(1)});

  CHECK_THROWS_AS(simple_reflection(b3, 0, a2), InvalidNode);
  CHECK_THROWS_AS(simple_reflection(b3a, 1, a2), ContextMismatch);

  // involution, form-preserving, fixes delta
  for (int label : b3a.labels()) {
    const Mat& m = b3a.reflection(label);
    CHECK((m * m).is_identity());
    CHECK(m.apply(b3a.delta()) == b3a.delta());
    Mat form = b3a.bilinear();
    CHECK(m.transposed() * form * m == form);
  }
}

TEST_CASE("root enumeration: B3 per the worked table") {
  const RootSystemTable& t = enumerate_roots(RootDatum::get("B3"));
  CHECK(t.positive.size() == 9);
  CHECK(t.num_long == 6);
  CHECK(t.num_short == 3);
  std::set<IVec> expect_long{{1, 2, 2}, {1, 1, 2}, {0, 1, 2}, {1, 1, 0}, {0, 1, 0}, {1, 0, 0}};
  std::set<IVec> expect_short{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  CHECK(tagged(t, true) == expect_long);
  CHECK(tagged(t, false) == expect_short);
}

TEST_CASE("root enumeration: C3, G2, F4, A1") {
  const RootSystemTable& c3 = enumerate_roots(RootDatum::get("C3"));
  std::set<IVec> c3_short{{1, 2, 1}, {1, 1, 1}, {0, 1, 1}, {1, 1, 0}, {0, 1, 0}, {1, 0, 0}};
  std::set<IVec> c3_long{{2, 2, 1}, {0, 2, 1}, {0, 0, 1}};
  CHECK(tagged(c3, false) == c3_short);
  CHECK(tagged(c3, true) == c3_long);

  const RootSystemTable& g2 = enumerate_roots(RootDatum::get("G2"));
  std::set<IVec> g2_long{{3, 2}, {3, 1}, {0, 1}};
  std::set<IVec> g2_short{{2, 1}, {1, 1}, {1, 0}};
  CHECK(tagged(g2, true) == g2_long);
  CHECK(tagged(g2, false) == g2_short);

  const RootSystemTable& f4 = enumerate_roots(RootDatum::get("F4"));
  CHECK(f4.positive.size() == 24);
  CHECK(f4.num_long == 12);
  CHECK(f4.num_short == 12);

  const RootSystemTable& a1 = enumerate_roots(RootDatum::get("A1"));
  CHECK(a1.positive.size() == 1);
  CHECK(a1.num_short == 0);
}

TEST_CASE("B_n and C_n root counts") {
  for (int n : {2, 3, 4, 5, 6}) {
    const RootSystemTable& b = enumerate_roots(RootDatum::get(Family::B, n, false));
    CHECK(int(b.positive.size()) == n * n);
    CHECK(b.num_long == n * (n - 1));
    CHECK(b.num_short == n);
    const RootSystemTable& c = enumerate_roots(RootDatum::get(Family::C, n, false));
    CHECK(int(c.positive.size()) == n * n);
    CHECK(c.num_short == n * (n - 1));
    CHECK(c.num_long == n);
  }
}

TEST_CASE("witness words take the highest root of the class to each root") {
  for (const char* type : {"B3", "C3", "F4", "G2", "D4", "A4"}) {
    const RootDatum& d = RootDatum::get(type);
    const RootSystemTable& t = enumerate_roots(d);
    RootVec hl = highest_root(d);
    for (const PositiveRoot& r : t.positive) {
      RootVec start = r.long_root ? hl : highest_short_root(d);
      RootVec v = start;
      for (auto it = r.witness.rbegin(); it != r.witness.rend(); ++it)
        v = simple_reflection(d, *it, v);
      Vec expect;
      for (auto x : r.coords) expect.push_back(Rat(x));
      CHECK(v.coords == expect);
    }
  }
}

TEST_CASE("highest roots") {
  const RootDatum& f4 = RootDatum::get("F4");
  CHECK(highest_root(f4).coords == Vec{Rat(2), Rat(3), Rat(4), Rat(2)});
  CHECK(highest_short_root(f4).coords == Vec{Rat(1), Rat(2), Rat(3), Rat(2)});
  const RootDatum& c3 = RootDatum::get("C3");
  CHECK(highest_root(c3).coords == Vec{Rat(2), Rat(2), Rat(1)});
  CHECK(highest_short_root(c3).coords == Vec{Rat(1), Rat(2), Rat(1)});
  CHECK_THROWS_AS(highest_short_root(RootDatum::get("A3")), NoShortRoots);
  // highest-root coefficients agree with the marks of the affine extension
  for (const char* type : {"A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    const RootDatum& d = RootDatum::get(type);
    RootVec hr = highest_root(d);
    std::vector<std::int64_t> c = d.affine_datum().marks();
    for (int i = 0; i < d.rank(); ++i) CHECK(hr.coords[i] == Rat(c[i]));
  }
}

TEST_CASE("affine components") {
  const RootDatum& b3a = RootDatum::get("B3~");
  AffineComponents ac = affine_components(simple_root(b3a, 0));
  CHECK(ac.level == Rat(1));
  CHECK(ac.finite_part.coords == Vec{Rat(-1), Rat(-2), Rat(-2)});  // -highest root

  ac = affine_components(simple_root(b3a, 2));
  CHECK(ac.level == Rat(0));
  CHECK(ac.finite_part.coords == Vec{Rat(0), Rat(1), Rat(0)});

  ac = affine_components(null_root(b3a));
  CHECK(ac.level == Rat(1));
  CHECK(ac.finite_part.coords == Vec{Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("root membership") {
  const RootDatum& b3a = RootDatum::get("B3~");
  CHECK(is_root(simple_root(b3a, 0)));
  CHECK_FALSE(is_root(null_root(b3a)));
  CHECK(is_root(add(simple_root(b3a, 1), scale(Rat(2), null_root(b3a)))));
  RootVec not_root = add(simple_root(b3a, 1), simple_root(b3a, 3));
  CHECK_FALSE(is_root(not_root));
  RootVec neg = scale(Rat(-1), simple_root(b3a, 2));
  CHECK(is_root(neg));
  CHECK(is_positive(simple_root(b3a, 2)));
  CHECK(is_negative(neg));
  CHECK_FALSE(is_positive(zero_vec(b3a)));
}

TEST_CASE("reflection words") {
  const RootDatum& b3a = RootDatum::get("B3~");
  // beta = alpha_j gives the one-letter word
  CHECK(reflection_word(simple_root(b3a, 2)) == std::vector<int>{2});

  // s_{highest root} acts like the direct reflection formula
  const RootDatum& b3 = RootDatum::get("B3");
  RootVec at = highest_root(b3);
  std::vector<int> w = reflection_word(RootVec{&b3, at.coords});
  Mat m = Mat::identity(3);
  for (int l : w) m = m * b3.reflection(l);
  // compare against s_beta(v) = v - (2 v.beta / beta.beta) beta on the basis
  for (int label : b3.labels()) {
    RootVec v = simple_root(b3, label);
    Rat coef = Rat(2) * inner(v, at) / norm2(at);
    RootVec expect = sub(v, scale(coef, at));
    CHECK(m.apply(v.coords) == expect.coords);
  }

  // C3: s_{-alpha_3+delta} equals the word s_21 s_0 s_12
  const RootDatum& c3a = RootDatum::get("C3~");
  RootVec beta = add(scale(Rat(-1), simple_root(c3a, 3)), null_root(c3a));
  std::vector<int> rw = reflection_word(beta);
  Mat got = Mat::identity(4);
  for (int l : rw) got = got * c3a.reflection(l);
  Mat expected = Mat::identity(4);
  for (int l : {2, 1, 0, 1, 2}) expected = expected * c3a.reflection(l);
  CHECK(got == expected);

  // level bound and root validation
  RootVec high = add(simple_root(c3a, 1), scale(Rat(9), null_root(c3a)));
  CHECK_THROWS_AS(reflection_word(high), LevelBoundExceeded);
  CHECK(reflection_word(high, 12).size() > 0);
  CHECK_THROWS_AS(reflection_word(null_root(c3a)), NotARoot);
}
