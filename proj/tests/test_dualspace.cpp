#include "doctest.h"

#include "weyl/dualspace.hpp"

using namespace weyl;

TEST_CASE("pairing against the dual basis") {
  const RootDatum& b3a = RootDatum::get("B3~");
  CHECK(pair(simple_root(b3a, 2), fundamental_weight(b3a, 2)) == Rat(1));
  CHECK(pair(simple_root(b3a, 2), fundamental_weight(b3a, 1)) == Rat(0));
  CHECK(pair(simple_root(b3a, 0), fundamental_weight(b3a, 2)) == Rat(-2));  // -c_2
  CHECK(pair(null_root(b3a), fundamental_weight(b3a, 3)) == Rat(0));
  CHECK(pair(null_root(b3a), h_delta(b3a)) == Rat(1));
  CHECK(pair(simple_root(b3a, 0), h_delta(b3a)) == Rat(1));

  const RootDatum& c3a = RootDatum::get("C3~");
  CHECK_THROWS_AS(pair(simple_root(c3a, 1), fundamental_weight(b3a, 1)), ContextMismatch);
}

TEST_CASE("pi map") {
  const RootDatum& b3a = RootDatum::get("B3~");
  DualVec z = pi_map(null_root(b3a));
  for (const Rat& x : z.coords) CHECK(x.is_zero());

  // pi lands in X0
  for (int label : b3a.labels()) CHECK(x_level(pi_map(simple_root(b3a, label))).is_zero());

  // B3: pi(alpha_1-check) = 2h_1 - h_2
  CHECK(coroot(simple_root(b3a, 1)).coords == Vec{Rat(2), Rat(-1), Rat(0), Rat(0)});

  // E8: coroot of alpha_j has the j-th Cartan column as weight coordinates
  const RootDatum& e8a = RootDatum::get("E8~");
  for (int j = 1; j <= 8; ++j) {
    DualVec c = coroot(simple_root(e8a, j));
    for (int k = 0; k < 8; ++k) CHECK(c.coords[k] == e8a.cartan_finite().at(k, j - 1));
    // simply laced: pi(alpha-check) = pi(alpha)
    CHECK(c == pi_map(simple_root(e8a, j)));
  }
}

TEST_CASE("coroots of the highest roots") {
  const RootDatum& b3a = RootDatum::get("B3~");
  RootVec ats = root_from_digits(b3a, "123");
  CHECK(coroot(ats).coords == Vec{Rat(2), Rat(0), Rat(0), Rat(0)});  // 2h_1
  RootVec at = root_from_digits(b3a, "12233");
  CHECK(coroot(at).coords == Vec{Rat(0), Rat(1), Rat(0), Rat(0)});  // h_2
  CHECK(coroot(simple_root(b3a, 0)).coords == Vec{Rat(0), Rat(-1), Rat(0), Rat(0)});

  const RootDatum& f4a = RootDatum::get("F4~");
  RootVec f4s = root_from_digits(f4a, "12233344");
  CHECK(coroot(f4s).coords == Vec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)});  // h_4
  CHECK(coroot_coefficients(f4s) == Vec{Rat(2), Rat(4), Rat(3), Rat(2)});

  CHECK_THROWS_AS(coroot(null_root(b3a)), NotARoot);

  // coroots are level-independent
  RootVec shifted = add(at, scale(Rat(3), null_root(b3a)));
  CHECK(coroot(shifted) == coroot(at));
}

TEST_CASE("weights over simple coroots") {
  CHECK(weight_in_coroots(RootDatum::get("B3"), 3) == Vec{Rat(1), Rat(2), Rat(3, 2)});
  CHECK(weight_in_coroots(RootDatum::get("G2"), 1) == Vec{Rat(2), Rat(3)});
  CHECK(weight_in_coroots(RootDatum::get("A1"), 1) == Vec{Rat(1, 2)});
}

TEST_CASE("the X0 form") {
  const RootDatum& b3 = RootDatum::get("B3");
  int gram[3][3] = {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(x0_form(fundamental_weight(b3, i), fundamental_weight(b3, j)) == Rat(gram[i - 1][j - 1]));

  CHECK(weight_norm2(fundamental_weight(RootDatum::get("E8"), 8)) == Rat(2));
  CHECK(weight_norm2(fundamental_weight(RootDatum::get("C3"), 3)) == Rat(3, 4));

  // levels must agree; equal nonzero levels reduce to X0 differences
  const RootDatum& b3a = RootDatum::get("B3~");
  DualVec f = fundamental_weight(b3a, 1);
  DualVec g = fundamental_weight(b3a, 2);
  CHECK_THROWS_AS(x0_form(f, h_delta(b3a)), NotInSameXk);
  DualVec f1 = f, g1 = g;
  f1.coords[3] = Rat(1);
  g1.coords[3] = Rat(1);
  CHECK(x0_form(f1, g1) == x0_form(f, g));
}

TEST_CASE("coroot norms") {
  CHECK(coroot_norms(RootDatum::get("B3")) == Vec{Rat(2), Rat(2), Rat(4)});
  CHECK(coroot_norms(RootDatum::get("G2")) == Vec{Rat(2), Rat(2, 3)});
  CHECK(coroot_norms(RootDatum::get("A4")) == Vec{Rat(2), Rat(2), Rat(2), Rat(2)});
}

TEST_CASE("dual system shapes") {
  // simple-coroot Gram of B3 equals the C3 root Gram, and vice versa
  auto coroot_gram = [](const RootDatum& d) {
    Mat g(d.rank(), d.rank());
    for (int i = 1; i <= d.rank(); ++i)
      for (int j = 1; j <= d.rank(); ++j)
        g.at(i - 1, j - 1) =
            x0_form(coroot(simple_root(d.affine_datum(), i)), coroot(simple_root(d.affine_datum(), j)));
    return g;
  };
  CHECK(coroot_gram(RootDatum::get("B3")) == RootDatum::get("C3").bilinear());
  CHECK(coroot_gram(RootDatum::get("C3")) == RootDatum::get("B3").bilinear());

  // F4 and G2 are self-dual up to reversing the arrow: the dual Cartan
  // matrix is C^T, and relabeling nodes by the diagram flip returns C.
  for (const char* type : {"F4", "G2"}) {
    const RootDatum& d = RootDatum::get(type);
    Mat g = coroot_gram(d);
    Mat dual_cartan(d.rank(), d.rank());
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j) dual_cartan.at(i, j) = Rat(2) * g.at(i, j) / g.at(j, j);
    CHECK(dual_cartan == d.cartan_finite().transposed());
    // F4 flip: 1<->4, 2<->3; G2 flip: 1<->2
    auto flip = [&](int i) { return d.rank() - 1 - i; };
    for (int i = 0; i < d.rank(); ++i)
      for (int j = 0; j < d.rank(); ++j)
        CHECK(dual_cartan.at(flip(i), flip(j)) == d.cartan_finite().at(i, j));
  }

  // B3: pi of the highest short/long coroots are long/short in the dual
  const RootDatum& b3a = RootDatum::get("B3~");
  CHECK(weight_norm2(coroot(root_from_digits(b3a, "123"))) == Rat(4));
  CHECK(weight_norm2(coroot(root_from_digits(b3a, "12233"))) == Rat(2));
}

TEST_CASE("mixed pairing identity (pi(alpha_i), pi(alpha_j-check)) = a_ij") {
  for (const char* type : {"B3", "C3", "F4", "G2", "A3"}) {
    const RootDatum& d = RootDatum::get(type).affine_datum();
    for (int i = 1; i <= d.rank(); ++i)
      for (int j = 1; j <= d.rank(); ++j)
        CHECK(x0_form(pi_map(simple_root(d, i)), coroot(simple_root(d, j))) ==
              d.cartan().at(i - 1, j - 1));
  }
}
