#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3c/existence.hpp"

namespace k3c {

struct K3Construction {
  std::vector<i64> k3_type;   // intersection degrees a_j of the K3
  std::string k3_descriptor;  // e.g. "(3,2) ⊆ P^4"
  i64 m = 0;                  // ordinary double points of the nodal threefold
  i64 mu = 0;                 // genus of the K3
  i64 min_a = 0;              // min over a_j (1 or 2)
};

/// The printed sufficient conditions of the main classification: optional
/// special pairs, a quadratic low-genus band d^2 >= q g - c (strict for one
/// family), and a linear high-genus band d > g + c or 2d > g + 2c.
struct TheoremClause {
  std::vector<std::pair<i64, i64>> special_pairs;
  bool quad_strict = false;
  i64 quad_coeff = 0;
  i64 quad_offset = 0;  // d^2 >= quad_coeff * g - quad_offset
  i64 quad_gmax = 0;    // band 0 <= g <= quad_gmax
  bool linear_halved = false;  // true: 2d > g + 2c; false: d > g + c
  i64 linear_c = 0;
  i64 lin_gmin = 0;
  i64 lin_gmax = 0;  // the family's genus cap, equal to max(m) - 2
};

struct CyFamily {
  char label = '?';
  std::string cy_descriptor;
  std::vector<K3Construction> constructions;
  TheoremClause clause;
};

/// The eleven families a..k with their K3 constructions and node counts.
const std::vector<CyFamily>& registry();

const CyFamily& family(char label);

/// Node-count gate: m >= g + 2.
bool a2_gate(i64 m, i64 g);

/// Degree gate: min_a = 1: d <= 2(mu-1) or d > mu+g-1;
///              min_a = 2: d <= 4(mu-1) or 2d > 4mu+g-4.
bool a3_gate(i64 mu, i64 min_a, i64 d, i64 g);

struct FamilyVerdict {
  bool admissible = false;
  std::string via;  // "literal" or "derived"
  std::optional<K3Construction> construction;
  std::string clause;  // "special-pair", "quadratic-clause", "linear-clause" or "none"
};

/// The printed sufficient conditions, evaluated literally in integers.
FamilyVerdict theorem_result(char label, i64 d, i64 g);

/// Compositional classifier: some construction passes the curve-existence
/// test and both numeric gates.
FamilyVerdict derived_admissible(char label, i64 d, i64 g,
                                 ClauseMode mode = ClauseMode::Corrected);

/// binomial(m-2, g); requires the a2 gate.
i64 rigid_curve_count(char label, const K3Construction& construction, i64 g);

}  // namespace k3c
