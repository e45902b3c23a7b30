#include "doctest.h"

#include "weyl/linalg.hpp"

using namespace weyl;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(7) / Rat(2) == Rat(7, 2));
  CHECK((Rat(2, 3) * Rat(3, 4)).str() == "1/2");
  CHECK(Rat(-4).str() == "-4");
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(0).is_zero());
  CHECK(Rat(6, 3).is_integer());
  CHECK_FALSE(Rat(1, 3).is_integer());
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("overflow in narrowing is detected") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("matrix inverse and kernel") {
  Mat m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = -1;
  m.at(1, 0) = -3;
  m.at(1, 1) = 2;
  Mat inv = m.inverse();
  CHECK((m * inv).is_identity());
  CHECK(inv.at(0, 0) == Rat(2));
  CHECK(inv.at(0, 1) == Rat(1));

  // kernel of a rank-deficient matrix: [[1,-2],[2,-4]] has kernel (2,1)
  Mat k(2, 2);
  k.at(0, 0) = 1;
  k.at(0, 1) = -2;
  k.at(1, 0) = 2;
  k.at(1, 1) = -4;
  CHECK(kernel_vector(k) == Vec{Rat(2), Rat(1)});

  Mat sing(2, 2);
  CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}
