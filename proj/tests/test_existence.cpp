#include <doctest.h>

#include "k3c/existence.hpp"

using namespace k3c;

namespace {

i64 disc_of(i64 n, i64 d, i64 g) { return sub(mul(d, d), mul(mul(4, n), sub(g, 1))); }

}  // namespace

TEST_CASE("curve existence on degree-2n K3 surfaces") {
  auto v = k3_curve_exists(2, 9, 5);
  CHECK(v.exists);
  CHECK(v.case_label == "mainthm.iv");
  CHECK(v.picard_note == "rank2");

  auto w = k3_curve_exists(2, 5, 3);
  CHECK_FALSE(w.exists);
  CHECK(w.case_label == "mainthm.iv.excl.pair");

  auto x = k3_curve_exists(4, 8, 5);
  CHECK(x.exists);
  CHECK(x.case_label == "mainthm.i");
  CHECK(x.km == std::pair<i64, i64>{1, 4});
  CHECK(x.picard_note == "rank1");

  auto y = k3_curve_exists(2, 4, 3);
  CHECK(y.exists);
  CHECK(y.km == std::pair<i64, i64>{1, 2});

  CHECK_THROWS_AS(k3_curve_exists(1, 3, 0), std::invalid_argument);
}

TEST_CASE("certificates in the rank-1 boundary case are valid") {
  for (i64 n = 2; n <= 16; ++n)
    for (i64 d = 1; d <= 60; ++d)
      for (i64 g = 0; g <= 60; ++g) {
        if (disc_of(n, d, g) != 0) continue;
        auto v = k3_curve_exists(n, d, g);
        if (!v.km) continue;
        auto [k, m] = *v.km;
        CHECK(n == mul(mul(k, k), m));
        CHECK_FALSE((k == 2 && m == 1));
        CHECK(mul(k, d) % mul(2, n) == 0);
      }
}

TEST_CASE("exactly one discriminant band fires") {
  for (i64 n = 2; n <= 6; ++n)
    for (i64 d = 1; d <= 30; ++d)
      for (i64 g = 0; g <= 30; ++g) {
        auto v = k3_curve_exists(n, d, g);
        i64 disc = disc_of(n, d, g);
        std::string expect;
        if (disc < 0) expect = "mainthm.none";
        else if (disc == 0) expect = "mainthm.i";
        else if (disc < 4 * n) expect = "mainthm.ii";
        else if (disc == 4 * n) expect = "mainthm.iii";
        else expect = "mainthm.iv";
        CHECK(v.case_label.substr(0, expect.size()) == expect);
        if (disc < 0) CHECK_FALSE(v.exists);
      }
}

TEST_CASE("middle-band exclusion (d) is always subsumed for n <= 9") {
  for (i64 n = 2; n <= 9; ++n)
    for (i64 d = 1; d <= 4 * n; ++d)
      for (i64 g = 0; g <= 4 * n; ++g) {
        i64 disc = disc_of(n, d, g);
        if (disc <= 0 || disc >= 4 * n) continue;
        CHECK(k3_curve_exists(n, d, g).case_label != "mainthm.ii.excl.d");
      }
}

TEST_CASE("quadric generation of the embedding") {
  CHECK(quadric_generation(4, 5, 2) == QuadricGen::QuadricsAndCubics);
  CHECK(quadric_generation(4, 8, 5) == QuadricGen::Quadrics);
  CHECK(quadric_generation(3, 7, 4) == QuadricGen::NotApplicable);
}

TEST_CASE("curves on BN general K3 surfaces of genus 3..10") {
  CHECK_FALSE(bn_curve_exists(3, 5, 3).exists);
  CHECK(bn_curve_exists(3, 5, 3).case_label == "bncurves.i.excl.pair");

  auto a = bn_curve_exists(4, 6, 4);
  CHECK(a.exists);
  CHECK(a.case_label == "bncurves.ii.a");
  CHECK(a.hypersurface_degree == 1);

  auto b = bn_curve_exists(5, 12, 9);
  CHECK(b.exists);
  CHECK(b.case_label == "bncurves.iii.b");

  CHECK_FALSE(bn_curve_exists(10, 19, 10).exists);
  CHECK(bn_curve_exists(10, 19, 10).case_label == "bncurves.viii.excl.pair");

  CHECK_THROWS_AS(bn_curve_exists(2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(bn_curve_exists(11, 3, 1), std::invalid_argument);
}

TEST_CASE("genus-9 middle clause: the two readings differ exactly as expected") {
  // Corrected reading fires at d = 8 (mod 16) with d^2 = 32g.
  CHECK(bn_curve_exists(9, 8, 2, ClauseMode::Corrected).exists);
  CHECK(bn_curve_exists(9, 8, 2, ClauseMode::Corrected).case_label == "bncurves.vii.b");
  CHECK_FALSE(bn_curve_exists(9, 8, 2, ClauseMode::Literal).exists);
  CHECK(bn_curve_exists(9, 24, 18, ClauseMode::Corrected).exists);
  CHECK_FALSE(bn_curve_exists(9, 24, 18, ClauseMode::Literal).exists);
  // The literal reading (d^2 = 28g with d = 8 mod 16) has no points below 56.
  for (i64 d = 1; d <= 40; ++d)
    for (i64 g = 0; g <= 40; ++g)
      if (d % 16 == 8 && mul(d, d) == mul(28, g))
        FAIL("unexpected literal clause point");
}

TEST_CASE("dependent-case certificates divide") {
  for (i64 mu = 3; mu <= 10; ++mu)
    for (i64 d = 1; d <= 40; ++d)
      for (i64 g = 0; g <= 40; ++g) {
        auto v = bn_curve_exists(mu, d, g);
        if (v.hypersurface_degree) {
          CHECK(*v.hypersurface_degree == d / (2 * (mu - 1)));
          CHECK(d % (2 * (mu - 1)) == 0);
          CHECK(mul(d, d) == mul(mul(4, mu - 1), sub(g, 1)));
        }
      }
}

TEST_CASE("projective model registry") {
  CHECK(mukai_model(8).model == "(1^6) ∩ G(V^6,2) ⊆ P^8");
  CHECK(mukai_model(3).model == "(4) ⊆ P^3");
  CHECK(mukai_model(2).model == "double covering with branch sextic");
  CHECK(mukai_model(7).model == "(1^8) ∩ Σ^10_12 ⊆ P^7");
  for (i64 mu = 2; mu <= 10; ++mu) CHECK(mukai_model(mu).n == mu - 1);
  CHECK_THROWS_AS(mukai_model(11), std::invalid_argument);
}
