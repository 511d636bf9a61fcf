#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "k3c/lattice.hpp"

namespace k3c {

/// Which irreducible (-2)-curve to remove first when several qualify.
/// Used by tests to confirm the result does not depend on the choice.
enum class StripOrder { LexSmallest, LexLargest, SmallestDegree, LargestDegree };

struct H0Result {
  i64 h0 = 0;
  DivisorClass nef_model;
  std::vector<DivisorClass> stripped;
};

struct EffectivityResult {
  bool effective = false;
  bool zero = false;
  /// For a deep-negative effective class, the (-2)-classes peeled off to
  /// reach a class with self-intersection >= -2.
  std::vector<DivisorClass> chain;
};

/// Brute-force decision procedures on S(n,d,g): effectivity, nefness and h^0
/// by Riemann-Roch plus degree induction. Requires ample H; every branch of
/// the induction relies on effective classes having positive H-degree.
///
/// Results are memoized per class; a context may be shared across threads.
class OracleContext {
 public:
  explicit OracleContext(const IntersectionLattice& lattice);

  const IntersectionLattice& lattice() const { return lat_; }
  bool ample_ok() const { return ample_; }

  /// All classes X with X.H = t and X^2 >= min_self, sorted by (a,b).
  ///
  /// On the line X.H = t the form satisfies 2n X^2 = t^2 - disc * b^2
  /// (the H-complement is negative definite), so
  ///   |b| <= sqrt((t^2 - 2n * min_self) / disc)
  /// and each admissible b determines a = (t - d b) / 2n when integral.
  std::vector<DivisorClass> classes_on_degree_line(i64 t, i64 min_self) const;

  /// Exactly the classes G with G^2 = -2 and 0 < G.H <= degree_bound.
  std::vector<DivisorClass> minus_two_classes(i64 degree_bound) const;

  bool is_effective(const DivisorClass& D) const;
  EffectivityResult effectivity(const DivisorClass& D) const;

  /// An effective (-2)-class is irreducible when it admits no splitting
  /// G = A + B with A^2 >= -2, 0 < A.H < G.H and G - A effective.
  bool is_irreducible_minus_two(const DivisorClass& G) const;

  bool is_nef(const DivisorClass& D) const;

  H0Result h0(const DivisorClass& D, StripOrder order = StripOrder::LexSmallest) const;
  i64 h0_value(const DivisorClass& D) const { return h0(D).h0; }

 private:
  void require_ample() const;
  bool effective_or_zero(const DivisorClass& D) const;
  bool compute_effective(const DivisorClass& D) const;
  bool compute_irreducible(const DivisorClass& G) const;

  IntersectionLattice lat_;
  bool ample_;
  mutable std::mutex mu_;
  mutable std::map<DivisorClass, bool> eff_memo_;
  mutable std::map<DivisorClass, bool> irr_memo_;
  // (-2)-classes found so far, ordered by degree; covers degrees up to m2_bound_.
  mutable std::vector<DivisorClass> m2_cache_;
  mutable i64 m2_bound_ = 0;
};

}  // namespace k3c
