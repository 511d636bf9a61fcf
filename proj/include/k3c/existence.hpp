#pragma once

#include <optional>
#include <string>
#include <utility>

#include "k3c/num.hpp"

namespace k3c {

struct ExistenceVerdict {
  bool exists = false;
  std::string case_label;
  /// For the rank-1 boundary case: the pair (k,m) with n = k^2 m and 2n | kd.
  std::optional<std::pair<i64, i64>> km;
  /// For dependent cases: the degree of the cutting hypersurface.
  std::optional<i64> hypersurface_degree;
  std::string picard_note;  // "rank1" or "rank2"
};

/// Existence of a smooth curve of degree d and genus g on some K3 surface
/// of degree 2n in P^{n+1}, decided by the four discriminant bands
/// (disc = 0, 0 < disc < 4n, disc = 4n, disc > 4n) in cleared-denominator
/// integer arithmetic.
ExistenceVerdict k3_curve_exists(i64 n, i64 d, i64 g);

enum class QuadricGen { Quadrics, QuadricsAndCubics, NotApplicable };

std::string to_string(QuadricGen q);

/// Whether the surface of k3_curve_exists is cut out by quadrics alone or
/// needs cubics as well; only meaningful for n >= 4 and existing cases.
QuadricGen quadric_generation(i64 n, i64 d, i64 g);

/// Reading of the genus-9 middle clause: as printed (g = d^2/28) or with
/// the discriminant-consistent constant (d^2 = 32 g).
enum class ClauseMode { Corrected, Literal };

/// Existence of a smooth curve of degree d and genus g on a BN general
/// polarized K3 surface of genus mu, 3 <= mu <= 10.
ExistenceVerdict bn_curve_exists(i64 mu, i64 d, i64 g, ClauseMode mode = ClauseMode::Corrected);

struct K3Model {
  i64 genus = 0;
  std::string model;
  std::string ambient;
  i64 n = 0;  // genus - 1
};

/// The projective model of a BN general polarized K3 surface of genus mu.
K3Model mukai_model(i64 mu);

}  // namespace k3c
