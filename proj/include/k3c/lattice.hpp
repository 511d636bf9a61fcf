#pragma once

#include <array>
#include <compare>
#include <string>

#include "k3c/num.hpp"

namespace k3c {

/// An integer divisor class a*H + b*C in the rank-2 lattice ZH + ZC.
struct DivisorClass {
  i64 a = 0;
  i64 b = 0;

  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  DivisorClass operator+(const DivisorClass& o) const { return {add(a, o.a), add(b, o.b)}; }
  DivisorClass operator-(const DivisorClass& o) const { return {sub(a, o.a), sub(b, o.b)}; }
  DivisorClass operator-() const { return {sub(0, a), sub(0, b)}; }
  DivisorClass operator*(i64 k) const { return {mul(a, k), mul(b, k)}; }
  bool is_zero() const { return a == 0 && b == 0; }
};

inline DivisorClass hyperplane_class() { return {1, 0}; }
inline DivisorClass curve_class() { return {0, 1}; }

std::string to_string(const DivisorClass& D);

/// The rank-2 lattice of S(n,d,g): H^2 = 2n, H.C = d, C^2 = 2(g-1),
/// restricted to the hyperbolic case d^2 - 4n(g-1) > 0.
class IntersectionLattice {
 public:
  IntersectionLattice(i64 n, i64 d, i64 g);

  i64 n() const { return n_; }
  i64 d() const { return d_; }
  i64 g() const { return g_; }

  std::array<std::array<i64, 2>, 2> gram() const;

  /// d^2 - 4n(g-1), positive by construction.
  i64 discriminant() const;

  i64 intersect(const DivisorClass& A, const DivisorClass& B) const;
  i64 self(const DivisorClass& D) const { return intersect(D, D); }
  i64 degree(const DivisorClass& D) const { return intersect(D, hyperplane_class()); }

  /// (A.B)^2 - A^2 B^2.
  i64 disc_pair(const DivisorClass& A, const DivisorClass& B) const;

  /// Lemma: H fails to be ample exactly when disc = n with d = n (mod 2n),
  /// or disc = 4n with d = 0 (mod 2n).
  bool ample_h() const;

 private:
  i64 n_, d_, g_;
};

}  // namespace k3c
