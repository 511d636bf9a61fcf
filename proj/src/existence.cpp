#include "k3c/existence.hpp"

#include <stdexcept>

namespace k3c {

namespace {

void check_range(i64 n, i64 d, i64 g) {
  if (n < 2) throw std::invalid_argument("k3_curve_exists requires n >= 2");
  if (d < 1) throw std::invalid_argument("k3_curve_exists requires d >= 1");
  if (g < 0) throw std::invalid_argument("k3_curve_exists requires g >= 0");
}

// d == c or d == -c modulo 2n, on least nonnegative residues.
bool cong_pm(i64 d, i64 c, i64 two_n) {
  i64 r = ((d % two_n) + two_n) % two_n;
  i64 cp = ((c % two_n) + two_n) % two_n;
  i64 cm = ((two_n - cp) % two_n);
  return r == cp || r == cm;
}

bool divides(i64 a, i64 b) { return a > 0 && b % a == 0; }

const char* roman(i64 mu) {
  switch (mu) {
    case 3: return "i";
    case 4: return "ii";
    case 5: return "iii";
    case 6: return "iv";
    case 7: return "v";
    case 8: return "vi";
    case 9: return "vii";
    case 10: return "viii";
  }
  return "?";
}

}  // namespace

ExistenceVerdict k3_curve_exists(i64 n, i64 d, i64 g) {
  check_range(n, d, g);
  ExistenceVerdict v;
  i64 disc = sub(mul(d, d), mul(mul(4, n), sub(g, 1)));
  i64 two_n = mul(2, n);
  v.picard_note = "rank2";

  if (disc < 0) {
    // g > d^2/4n + 1: no discriminant band applies, no such curve.
    v.case_label = "mainthm.none";
    return v;
  }
  if (disc == 0) {
    v.picard_note = "rank1";
    for (i64 k = 1; mul(k, k) <= n; ++k) {
      if (n % mul(k, k) != 0) continue;
      i64 m = n / mul(k, k);
      if (k == 2 && m == 1) continue;
      if (mul(k, d) % two_n == 0) {
        v.exists = true;
        v.case_label = "mainthm.i";
        v.km = {k, m};
        return v;
      }
    }
    v.case_label = "mainthm.i.excl";
    return v;
  }
  if (disc < mul(4, n)) {
    const char* excl = nullptr;
    if (cong_pm(d, 1, two_n) || cong_pm(d, 2, two_n)) excl = "a";
    else if (disc == 1 && cong_pm(d, n + 1, two_n)) excl = "b";
    else if (disc == n && ((d - n) % two_n + two_n) % two_n == 0) excl = "c";
    else if (disc == 1 && (divides(d - 1, two_n) || divides(d + 1, two_n))) excl = "d";
    if (excl) {
      v.case_label = std::string("mainthm.ii.excl.") + excl;
      return v;
    }
    v.exists = true;
    v.case_label = "mainthm.ii";
    return v;
  }
  if (disc == mul(4, n)) {
    v.exists = d % two_n != 0;
    v.case_label = v.exists ? "mainthm.iii" : "mainthm.iii.excl";
    return v;
  }
  v.exists = !(d == add(two_n, 1) && g == add(n, 1));
  v.case_label = v.exists ? "mainthm.iv" : "mainthm.iv.excl.pair";
  return v;
}

std::string to_string(QuadricGen q) {
  switch (q) {
    case QuadricGen::Quadrics: return "quadrics";
    case QuadricGen::QuadricsAndCubics: return "quadrics-and-cubics";
    case QuadricGen::NotApplicable: return "not-applicable";
  }
  return "?";
}

QuadricGen quadric_generation(i64 n, i64 d, i64 g) {
  check_range(n, d, g);
  if (n < 4) return QuadricGen::NotApplicable;
  ExistenceVerdict v = k3_curve_exists(n, d, g);
  if (!v.exists) return QuadricGen::NotApplicable;
  i64 disc = sub(mul(d, d), mul(mul(4, n), sub(g, 1)));
  i64 two_n = mul(2, n);
  bool case_ii = disc > 0 && disc < mul(4, n);
  if (case_ii && ((disc == 1 && cong_pm(mul(3, d), 3, two_n)) ||
                  (disc == 9 && cong_pm(d, 3, two_n))))
    return QuadricGen::QuadricsAndCubics;
  return QuadricGen::Quadrics;
}

ExistenceVerdict bn_curve_exists(i64 mu, i64 d, i64 g, ClauseMode mode) {
  if (mu < 3 || mu > 10) throw std::invalid_argument("bn_curve_exists requires 3 <= mu <= 10");
  if (d < 1) throw std::invalid_argument("bn_curve_exists requires d >= 1");
  if (g < 0) throw std::invalid_argument("bn_curve_exists requires g >= 0");

  ExistenceVerdict v;
  v.picard_note = "rank2";
  i64 n = mu - 1;
  i64 two_n = mul(2, n);
  i64 q = mul(4, n);  // the coefficient of g in all clauses for this mu
  i64 dd = mul(d, d);
  std::string prefix = std::string("bncurves.") + roman(mu);
  bool has_middle = mu != 3 && mu != 7;

  // (a): disc = 0 together with H primitive (forced by the dependent-Picard
  // clause, which cuts the curve by a hypersurface of degree d/2n).
  if (dd == mul(q, sub(g, 1)) && d % two_n == 0) {
    v.exists = true;
    v.case_label = prefix + ".a";
    v.hypersurface_degree = d / two_n;
    v.picard_note = "rank1";
    return v;
  }

  bool middle = false;
  switch (mu) {
    case 4: middle = dd == sub(mul(12, g), 3); break;
    case 5: middle = dd == mul(16, g) && d % 8 == 4; break;
    case 6: middle = dd == sub(mul(20, g), 4); break;
    case 8: middle = dd == sub(mul(28, g), 3); break;
    case 9:
      middle = (mode == ClauseMode::Corrected ? dd == mul(32, g) : dd == mul(28, g)) &&
               d % 16 == 8;
      break;
    case 10: middle = dd == mul(36, g) && (d % 18 == 6 || d % 18 == 12); break;
    default: break;
  }
  if (middle) {
    v.exists = true;
    v.case_label = prefix + ".b";
    return v;
  }

  std::pair<i64, i64> pair_excl{add(two_n, 1), add(n, 1)};  // (2n+1, n+1)
  if (dd > mul(q, g)) {
    if (d == pair_excl.first && g == pair_excl.second) {
      v.case_label = prefix + ".excl.pair";
      return v;
    }
    v.exists = true;
    v.case_label = prefix + (has_middle ? ".c" : ".b");
    return v;
  }
  v.case_label = prefix + ".none";
  return v;
}

K3Model mukai_model(i64 mu) {
  if (mu < 2 || mu > 10) throw std::invalid_argument("mukai_model requires 2 <= mu <= 10");
  static const char* models[] = {
      "double covering with branch sextic",
      "(4) ⊆ P^3",
      "(2,3) ⊆ P^4",
      "(2,2,2) ⊆ P^5",
      "(1,1,1,2) ∩ G(2,V^5) ⊆ P^6",
      "(1^8) ∩ Σ^10_12 ⊆ P^7",
      "(1^6) ∩ G(V^6,2) ⊆ P^8",
      "(1^4) ∩ Σ^6_16 ⊆ P^9",
      "(1^3) ∩ Σ^5_18 ⊆ P^10",
  };
  static const char* ambients[] = {
      "P^2", "P^3", "P^4", "P^5", "G(2,V^5)", "Σ^10_12", "G(V^6,2)", "Σ^6_16",
      "Σ^5_18",
  };
  return {mu, models[mu - 2], ambients[mu - 2], mu - 1};
}

}  // namespace k3c
