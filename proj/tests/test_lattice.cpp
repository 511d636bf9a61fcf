#include <doctest.h>

#include <random>

#include "k3c/lattice.hpp"

using namespace k3c;

TEST_CASE("gram matrix from (n,d,g)") {
  IntersectionLattice l1(3, 7, 4);
  CHECK(l1.gram() == std::array<std::array<i64, 2>, 2>{{{6, 7}, {7, 6}}});
  IntersectionLattice l2(2, 3, 1);
  CHECK(l2.gram() == std::array<std::array<i64, 2>, 2>{{{4, 3}, {3, 0}}});
  CHECK(l1.discriminant() == 13);
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(IntersectionLattice(2, 3, 3), std::domain_error);  // disc = 9 - 16 < 0
  CHECK_THROWS_AS(IntersectionLattice(1, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(IntersectionLattice(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(IntersectionLattice(2, 3, -1), std::invalid_argument);
}

TEST_CASE("pairing values") {
  IntersectionLattice l(2, 5, 1);
  CHECK(l.intersect({1, 0}, {0, 1}) == 5);
  CHECK(IntersectionLattice(8, 8, 2).self({1, -1}) == 2);
  CHECK(IntersectionLattice(2, 3, 1).self({1, -1}) == -2);
}

TEST_CASE("degree is pairing with H") {
  CHECK(IntersectionLattice(2, 3, 1).degree({1, -1}) == 1);
  CHECK(IntersectionLattice(8, 8, 2).degree({1, -2}) == 0);
  CHECK(IntersectionLattice(3, 7, 4).degree({0, 1}) == 7);
}

TEST_CASE("disc_pair basics") {
  IntersectionLattice l(2, 5, 3);
  CHECK(l.disc_pair({1, 0}, {0, 1}) == 9);
  CHECK(l.disc_pair({3, -4}, {3, -4}) == 0);
  CHECK(IntersectionLattice(3, 7, 4).disc_pair({1, 0}, {0, 1}) == 13);
}

TEST_CASE("disc_pair determinant identity on random classes") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<i64> coord(-500, 500);
  const IntersectionLattice lattices[] = {
      {2, 3, 1}, {3, 7, 4}, {5, 9, 2}, {9, 17, 8}, {7, 20, 11}};
  for (const auto& l : lattices) {
    for (int i = 0; i < 2500; ++i) {
      DivisorClass A{coord(rng), coord(rng)};
      DivisorClass B{coord(rng), coord(rng)};
      i64 det = sub(mul(A.a, B.b), mul(B.a, A.b));
      CHECK(l.disc_pair(A, B) == mul(l.discriminant(), mul(det, det)));
    }
  }
}

TEST_CASE("pairing is symmetric, bilinear and even on the diagonal") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> coord(-200, 200);
  IntersectionLattice l(4, 9, 3);
  for (int i = 0; i < 3000; ++i) {
    DivisorClass A{coord(rng), coord(rng)};
    DivisorClass B{coord(rng), coord(rng)};
    DivisorClass X{coord(rng), coord(rng)};
    CHECK(l.intersect(A, B) == l.intersect(B, A));
    CHECK(l.intersect(A + X, B) == add(l.intersect(A, B), l.intersect(X, B)));
    CHECK(l.self(A) % 2 == 0);
  }
}

TEST_CASE("ampleness criterion for H") {
  CHECK(IntersectionLattice(2, 3, 1).ample_h());
  CHECK(IntersectionLattice(3, 7, 4).ample_h());
  // disc = n with d = n (mod 2n)
  CHECK_FALSE(IntersectionLattice(5, 5, 2).ample_h());
  // disc = 4n with d = 0 (mod 2n)
  CHECK_FALSE(IntersectionLattice(3, 6, 3).ample_h());
}

TEST_CASE("class rendering") {
  CHECK(to_string(DivisorClass{1, -1}) == "H-C");
  CHECK(to_string(DivisorClass{0, 1}) == "C");
  CHECK(to_string(DivisorClass{0, 0}) == "0");
  CHECK(to_string(DivisorClass{2, 3}) == "2H+3C");
}
