#include "k3c/lattice.hpp"

#include <stdexcept>

namespace k3c {

std::string to_string(const DivisorClass& D) {
  if (D.is_zero()) return "0";
  std::string s;
  auto term = [&](i64 c, const char* sym) {
    if (c == 0) return;
    if (s.empty()) {
      if (c == -1) s += "-";
      else if (c != 1) s += std::to_string(c);
    } else {
      s += (c > 0) ? "+" : "-";
      i64 m = c > 0 ? c : -c;
      if (m != 1) s += std::to_string(m);
    }
    s += sym;
  };
  term(D.a, "H");
  term(D.b, "C");
  return s;
}

IntersectionLattice::IntersectionLattice(i64 n, i64 d, i64 g) : n_(n), d_(d), g_(g) {
  if (n < 2) throw std::invalid_argument("lattice requires n >= 2, got n = " + std::to_string(n));
  if (d < 1) throw std::invalid_argument("lattice requires d >= 1, got d = " + std::to_string(d));
  if (g < 0) throw std::invalid_argument("lattice requires g >= 0, got g = " + std::to_string(g));
  i64 disc = sub(mul(d, d), mul(mul(4, n), sub(g, 1)));
  if (disc <= 0)
    throw std::domain_error("lattice requires d^2 - 4n(g-1) > 0, got " + std::to_string(disc));
}

std::array<std::array<i64, 2>, 2> IntersectionLattice::gram() const {
  return {{{mul(2, n_), d_}, {d_, mul(2, sub(g_, 1))}}};
}

i64 IntersectionLattice::discriminant() const {
  return sub(mul(d_, d_), mul(mul(4, n_), sub(g_, 1)));
}

i64 IntersectionLattice::intersect(const DivisorClass& A, const DivisorClass& B) const {
  // 2n aA aB + d (aA bB + aB bA) + 2(g-1) bA bB
  i64 r = mul(mul(2, n_), mul(A.a, B.a));
  r = add(r, mul(d_, add(mul(A.a, B.b), mul(A.b, B.a))));
  r = add(r, mul(mul(2, sub(g_, 1)), mul(A.b, B.b)));
  return r;
}

i64 IntersectionLattice::disc_pair(const DivisorClass& A, const DivisorClass& B) const {
  i64 ab = intersect(A, B);
  return sub(mul(ab, ab), mul(self(A), self(B)));
}

bool IntersectionLattice::ample_h() const {
  i64 disc = discriminant();
  i64 two_n = mul(2, n_);
  if (disc == n_ && (d_ - n_) % two_n == 0) return false;
  if (disc == mul(4, n_) && d_ % two_n == 0) return false;
  return true;
}

}  // namespace k3c
