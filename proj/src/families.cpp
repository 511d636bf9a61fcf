#include "k3c/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3c {

namespace {

std::vector<CyFamily> build_registry() {
  auto con = [](std::vector<i64> type, std::string desc, i64 m, i64 mu) {
    K3Construction c;
    c.k3_type = std::move(type);
    c.k3_descriptor = std::move(desc);
    c.m = m;
    c.mu = mu;
    c.min_a = *std::min_element(c.k3_type.begin(), c.k3_type.end());
    return c;
  };
  auto quad = [](i64 coeff, i64 offset, i64 gmax, bool strict = false) {
    TheoremClause t;
    t.quad_coeff = coeff;
    t.quad_offset = offset;
    t.quad_gmax = gmax;
    t.quad_strict = strict;
    return t;
  };

  std::vector<CyFamily> r;

  {
    CyFamily f{'a', "(5) ⊆ P^4",
               {con({4, 1}, "(4,1) ⊆ P^4", 16, 3), con({3, 2}, "(3,2) ⊆ P^4", 36, 4)},
               quad(12, 3, 12)};
    f.clause.linear_halved = true;
    f.clause.linear_c = 6;
    f.clause.lin_gmin = 13;
    f.clause.lin_gmax = 34;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'b', "(4,2) ⊆ P^5",
               {con({4, 1, 1}, "(4,1,1) ⊆ P^5", 4, 3), con({3, 2, 1}, "(3,2,1) ⊆ P^5", 18, 4),
                con({2, 2, 2}, "(2,2,2) ⊆ P^5", 32, 5)},
               quad(16, 0, 15)};
    f.clause.special_pairs = {{3, 1}, {5, 2}};
    f.clause.linear_halved = true;
    f.clause.linear_c = 8;
    f.clause.lin_gmin = 16;
    f.clause.lin_gmax = 30;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'c', "(3,3) ⊆ P^5",
               {con({3, 2, 1}, "(3,2,1) ⊆ P^5", 12, 4), con({2, 2, 2}, "(2,2,2) ⊆ P^5", 32, 5)},
               quad(16, 0, 15)};
    f.clause.special_pairs = {{3, 1}, {5, 2}};
    f.clause.linear_halved = true;
    f.clause.linear_c = 8;
    f.clause.lin_gmin = 16;
    f.clause.lin_gmax = 30;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'d', "(3,2,2) ⊆ P^6",
               {con({3, 2, 1, 1}, "(3,2,1,1) ⊆ P^6", 6, 4),
                con({2, 2, 2, 1}, "(2,2,2,1) ⊆ P^6", 16, 5)},
               quad(16, 0, 4)};
    f.clause.special_pairs = {{3, 1}, {5, 2}};
    f.clause.linear_c = 4;
    f.clause.lin_gmin = 5;
    f.clause.lin_gmax = 14;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'e', "(2,2,2,2) ⊆ P^7",
               {con({2, 2, 2, 1, 1}, "(2,2,2,1,1) ⊆ P^7", 8, 5)}, quad(16, 0, 3)};
    f.clause.linear_c = 4;
    f.clause.lin_gmin = 4;
    f.clause.lin_gmax = 6;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'f', "(3,1,1) ∩ G(2,V^5) ⊆ P^7",
               {con({2, 1, 1, 1}, "(2,1,1,1) ∩ G(2,V^5) ⊆ P^6", 20, 6)}, quad(20, 4, 4)};
    f.clause.linear_c = 5;
    f.clause.lin_gmin = 5;
    f.clause.lin_gmax = 18;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'g', "(2,2,1) ∩ G(2,V^5) ⊆ P^8",
               {con({2, 1, 1, 1}, "(2,1,1,1) ∩ G(2,V^5) ⊆ P^6", 10, 6)}, quad(20, 4, 4)};
    f.clause.linear_c = 5;
    f.clause.lin_gmin = 5;
    f.clause.lin_gmax = 8;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'h', "(2,1^6) ∩ Σ^10_12 ⊆ P^9",
               {con({1, 1, 1, 1, 1, 1, 1, 1}, "(1^8) ∩ Σ^10_12 ⊆ P^7", 12, 7)},
               quad(24, 0, 5, /*strict=*/true)};
    f.clause.linear_c = 6;
    f.clause.lin_gmin = 6;
    f.clause.lin_gmax = 10;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'i', "(2,1^4) ∩ G(V^6,2) ⊆ P^10",
               {con({1, 1, 1, 1, 1, 1}, "(1^6) ∩ G(V^6,2) ⊆ P^8", 14, 8)}, quad(28, 3, 6)};
    f.clause.linear_c = 7;
    f.clause.lin_gmin = 7;
    f.clause.lin_gmax = 12;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'j', "(2,1,1) ∩ Σ^6_16 ⊆ P^11",
               {con({1, 1, 1, 1}, "(1^4) ∩ Σ^6_16 ⊆ P^9", 16, 9)}, quad(32, 0, 7)};
    f.clause.linear_c = 8;
    f.clause.lin_gmin = 8;
    f.clause.lin_gmax = 14;
    r.push_back(std::move(f));
  }
  {
    CyFamily f{'k', "(2,1) ∩ Σ^5_18 ⊆ P^12",
               {con({1, 1, 1}, "(1^3) ∩ Σ^5_18 ⊆ P^10", 18, 10)}, quad(36, 0, 8)};
    f.clause.linear_c = 9;
    f.clause.lin_gmin = 9;
    f.clause.lin_gmax = 16;
    r.push_back(std::move(f));
  }

  // Registry self-check: the genus cap of each family must equal m - 2 for
  // the construction with the most nodes.
  for (const CyFamily& f : r) {
    i64 max_m = 0;
    for (const K3Construction& c : f.constructions) max_m = std::max(max_m, c.m);
    if (f.clause.lin_gmax != max_m - 2)
      throw std::logic_error(std::string("registry: genus cap mismatch in family ") + f.label);
  }
  return r;
}

}  // namespace

const std::vector<CyFamily>& registry() {
  static const std::vector<CyFamily> r = build_registry();
  return r;
}

const CyFamily& family(char label) {
  for (const CyFamily& f : registry())
    if (f.label == label) return f;
  throw std::invalid_argument(std::string("unknown family label: ") + label);
}

bool a2_gate(i64 m, i64 g) { return m >= add(g, 2); }

bool a3_gate(i64 mu, i64 min_a, i64 d, i64 g) {
  if (min_a == 1) return d <= mul(2, sub(mu, 1)) || d > sub(add(mu, g), 1);
  if (min_a == 2) return d <= mul(4, sub(mu, 1)) || mul(2, d) > sub(add(mul(4, mu), g), 4);
  throw std::invalid_argument("a3_gate requires min_a in {1,2}");
}

FamilyVerdict theorem_result(char label, i64 d, i64 g) {
  if (d < 1) throw std::invalid_argument("theorem_result requires d >= 1");
  if (g < 0) throw std::invalid_argument("theorem_result requires g >= 0");
  const CyFamily& f = family(label);
  const TheoremClause& t = f.clause;
  FamilyVerdict v;
  v.via = "literal";
  v.clause = "none";

  for (const auto& [pd, pg] : t.special_pairs) {
    if (d == pd && g == pg) {
      v.admissible = true;
      v.clause = "special-pair";
      return v;
    }
  }
  if (g <= t.quad_gmax) {
    i64 lhs = mul(d, d);
    i64 rhs = sub(mul(t.quad_coeff, g), t.quad_offset);
    if (t.quad_strict ? lhs > rhs : lhs >= rhs) {
      v.admissible = true;
      v.clause = "quadratic-clause";
      return v;
    }
  }
  if (g >= t.lin_gmin && g <= t.lin_gmax) {
    // "d > g/2 + c" is evaluated as 2d > g + 2c; no rationals anywhere.
    bool ok = t.linear_halved ? mul(2, d) > add(g, mul(2, t.linear_c))
                              : d > add(g, t.linear_c);
    if (ok) {
      v.admissible = true;
      v.clause = "linear-clause";
      return v;
    }
  }
  return v;
}

FamilyVerdict derived_admissible(char label, i64 d, i64 g, ClauseMode mode) {
  if (d < 1) throw std::invalid_argument("derived_admissible requires d >= 1");
  if (g < 0) throw std::invalid_argument("derived_admissible requires g >= 0");
  const CyFamily& f = family(label);
  FamilyVerdict v;
  v.via = "derived";
  v.clause = "none";
  for (const K3Construction& c : f.constructions) {
    if (!a2_gate(c.m, g)) continue;
    if (!a3_gate(c.mu, c.min_a, d, g)) continue;
    ExistenceVerdict e = bn_curve_exists(c.mu, d, g, mode);
    if (!e.exists) continue;
    v.admissible = true;
    v.construction = c;
    v.clause = e.case_label;
    return v;
  }
  return v;
}

i64 rigid_curve_count(char label, const K3Construction& construction, i64 g) {
  family(label);  // validates the label
  if (!a2_gate(construction.m, g))
    throw std::invalid_argument("rigid_curve_count requires m >= g + 2");
  return binomial(sub(construction.m, 2), g);
}

}  // namespace k3c
