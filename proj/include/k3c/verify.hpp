#pragma once

#include <string>
#include <vector>

#include "k3c/existence.hpp"

namespace k3c {

struct SweepReport {
  std::string suite;
  i64 checked = 0;
  i64 admissible = 0;
  i64 excluded = 0;
  i64 errors = 0;
  /// Findings that make the sweep fail.
  std::vector<std::string> violations;
  /// Findings the sweep reports but does not fail on (e.g. points where the
  /// derived classifier reaches beyond the printed theorem).
  std::vector<std::string> notes;
  double wall_seconds = 0;
  bool pass = false;
};

/// The twelve residual triples, via closed form and via the oracle.
SweepReport verify_bn_residual();

/// Oracle-computed minimal d with BN generality at g = 1 for n = 2..9.
SweepReport verify_ell_thresholds();

/// theorem_result => derived_admissible over (d,g) in [1,box] x [0,box].
SweepReport verify_subset(i64 box = 40);

/// bn_curve_exists => k3_curve_exists over mu in [3,10], d,g in the box;
/// in literal mode additionally locates all points where the two clause
/// readings disagree and checks they are confined to the genus-9 middle
/// clause.
SweepReport verify_consistency(ClauseMode mode, i64 box = 40);

/// disc_pair(A,B) = disc * (a_A b_B - a_B b_A)^2 over random class pairs.
SweepReport verify_hodge(int num_lattices = 20, int pairs_per_lattice = 10000,
                         unsigned long long seed = 0x5eed'0001ULL);

/// Oracle structural suite: h0(H) = n+2, stripping order-independence, and
/// emptiness of |k(H-C)| for d > n+g, over all ample-H lattices with
/// n <= 9, d <= 2n, g <= n+1.
SweepReport verify_stripping(i64 degree_cap = 20);

std::string render(const SweepReport& report);

}  // namespace k3c
