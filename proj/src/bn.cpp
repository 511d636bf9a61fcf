#include "k3c/bn.hpp"

#include <array>
#include <stdexcept>

namespace k3c {

std::string to_string(BnRoute route) {
  switch (route) {
    case BnRoute::Divisibility: return "divisibility";
    case BnRoute::Rational: return "rational";
    case BnRoute::Triangle: return "triangle";
    case BnRoute::EllipticThreshold: return "elliptic-threshold";
    case BnRoute::Reduction: return "reduction";
    case BnRoute::ResidualTable: return "residual-table";
    case BnRoute::Oracle: return "oracle";
  }
  return "?";
}

namespace {

i64 discriminant(i64 n, i64 d, i64 g) {
  return sub(mul(d, d), mul(mul(4, n), sub(g, 1)));
}

// The residual triples of the n <= 9 analysis; BN generality there is the
// product test (n-d+g+1)(g+1) < n+2, which holds only at (8,8,2) and (9,9,2).
constexpr std::array<std::array<i64, 3>, 12> kResidualTriples = {{
    {6, 6, 2},
    {7, 7, 2}, {7, 6, 2}, {7, 8, 3},
    {8, 8, 2}, {8, 7, 2}, {8, 6, 2}, {8, 8, 3},
    {9, 9, 2}, {9, 8, 2}, {9, 7, 2}, {9, 9, 3},
}};

bool in_residual_table(i64 n, i64 d, i64 g) {
  for (const auto& t : kResidualTriples)
    if (t[0] == n && t[1] == d && t[2] == g) return true;
  return false;
}

}  // namespace

const std::array<std::array<i64, 3>, 12>& residual_triples() { return kResidualTriples; }

namespace {

void transform_witness(BnVerdict& v, i64 shift_small1, bool small2) {
  if (!v.witness) return;
  auto map = [&](DivisorClass X) {
    // small2 is the base change C -> H - C: (a,b) -> (a+b, -b).
    if (small2) X = {add(X.a, X.b), sub(0, X.b)};
    // k steps of small1 are C -> C - kH: (a,b) -> (a - kb, b).
    X.a = sub(X.a, mul(shift_small1, X.b));
    return X;
  };
  v.witness->m = map(v.witness->m);
  v.witness->n = map(v.witness->n);
}

}  // namespace

Small1Result reduce_small1(i64 n, i64 d, i64 g) {
  if (n < 2 || d < 1 || g < 0 || discriminant(n, d, g) <= 0)
    throw std::invalid_argument("reduce_small1 requires n >= 2, d >= 1, 0 <= g < d^2/4n + 1");
  Small1Result r{d, g, 0};
  while (!(r.g0 < r.d0 - n) && r.d0 > mul(2, n)) {
    r.g0 = add(sub(r.g0, r.d0), n);
    r.d0 = sub(r.d0, mul(2, n));
    ++r.steps;
  }
  return r;
}

std::pair<i64, i64> reduce_small2(i64 n, i64 d, i64 g) {
  if (add(sub(n, d), g) < 0)
    throw std::invalid_argument("reduce_small2 requires n - d + g >= 0");
  if (d > sub(mul(2, n), 1))
    throw std::invalid_argument("reduce_small2 requires d <= 2n - 1");
  return {sub(mul(2, n), d), add(sub(n, d), g)};
}

i64 prodell(i64 n, i64 d, i64 b) {
  if (mul(b, d) > add(n, 1)) return 0;
  return mul(add(sub(n, mul(b, d)), 2), add(b, 1));
}

BnVerdict bn_general(i64 n, i64 d, i64 g) {
  if (n < 2) throw std::invalid_argument("bn_general requires n >= 2");
  if (d < 1) throw std::invalid_argument("bn_general requires d >= 1");
  if (g < 0) throw std::invalid_argument("bn_general requires g >= 0");
  i64 disc = discriminant(n, d, g);
  if (disc < 0)
    throw std::domain_error("bn_general requires d^2 - 4n(g-1) >= 0, got " + std::to_string(disc));

  if (disc == 0) {
    // Picard rank 1 boundary: BN general iff H is primitive, i.e. 2n | d.
    return {d % mul(2, n) == 0, BnRoute::Divisibility, std::nullopt};
  }
  if (g == 0) return {true, BnRoute::Rational, std::nullopt};
  if (d > add(n, g)) return {true, BnRoute::Triangle, std::nullopt};
  if (g == 1) {
    for (i64 b = 1; mul(b, d) <= add(n, 1); ++b) {
      i64 p = prodell(n, d, b);
      if (p >= add(n, 2)) {
        BnWitness w{{1, -b}, {0, b}, add(sub(n, mul(b, d)), 2), add(b, 1)};
        return {false, BnRoute::EllipticThreshold, w};
      }
    }
    return {true, BnRoute::EllipticThreshold, std::nullopt};
  }

  // Reductions: first translate d below 2n+1, then reflect to d <= n.
  Small1Result s1 = reduce_small1(n, d, g);
  if (s1.steps > 0) {
    BnVerdict v = bn_general(n, s1.d0, s1.g0);
    transform_witness(v, s1.steps, false);
    if (v.route != BnRoute::ResidualTable && v.route != BnRoute::Oracle)
      v.route = BnRoute::Reduction;
    return v;
  }
  if (d > n && add(sub(n, d), g) >= 0 && d <= sub(mul(2, n), 1) && !in_residual_table(n, d, g)) {
    auto [d2, g2] = reduce_small2(n, d, g);
    BnVerdict v = bn_general(n, d2, g2);
    transform_witness(v, 0, true);
    if (v.route != BnRoute::ResidualTable && v.route != BnRoute::Oracle)
      v.route = BnRoute::Reduction;
    return v;
  }

  if (in_residual_table(n, d, g)) {
    i64 p = mul(add(add(sub(n, d), g), 1), add(g, 1));
    if (p < add(n, 2)) return {true, BnRoute::ResidualTable, std::nullopt};
    BnWitness w{{1, -1}, {0, 1}, add(add(sub(n, d), g), 1), add(g, 1)};
    return {false, BnRoute::ResidualTable, w};
  }

  IntersectionLattice lat(n, d, g);
  if (!lat.ample_h())
    throw std::runtime_error("undecided: H not ample for (" + std::to_string(n) + "," +
                             std::to_string(d) + "," + std::to_string(g) + ")");
  OracleContext ctx(lat);
  BnVerdict v = oracle_bn_general(ctx);
  v.route = BnRoute::Oracle;
  return v;
}

BnVerdict oracle_bn_general_traced(const OracleContext& ctx, std::vector<DivisorClass>* visited) {
  const IntersectionLattice& lat = ctx.lattice();
  if (!ctx.ample_ok()) throw std::domain_error("oracle requires ample H");
  i64 n = lat.n(), d = lat.d(), g = lat.g();
  DivisorClass H = hyperplane_class();
  DivisorClass C = curve_class();
  bool c_nef = g >= 1 && !(d == add(mul(2, n), 1) && g == add(n, 1));

  for (i64 t = 1; t < mul(2, n); ++t) {
    // Any effective class of degree t is a sum of at most t irreducible
    // curves, each with square >= -2, so M^2 >= -2 t^2 on this line.
    i64 s_min = mul(-2, mul(t, t));
    for (const DivisorClass& M : ctx.classes_on_degree_line(t, s_min)) {
      if (M.is_zero()) continue;
      DivisorClass N = H - M;
      if (N.is_zero()) continue;
      if (c_nef && (lat.intersect(M, C) < 0 || lat.intersect(N, C) < 0)) continue;
      if (!ctx.is_effective(M) || !ctx.is_effective(N)) continue;
      if (visited) visited->push_back(M);
      i64 hm = ctx.h0_value(M);
      i64 hn = ctx.h0_value(N);
      if (mul(hm, hn) >= add(n, 2)) {
        BnWitness w{M, N, hm, hn};
        return {false, BnRoute::Oracle, w};
      }
    }
  }
  return {true, BnRoute::Oracle, std::nullopt};
}

BnVerdict oracle_bn_general(const OracleContext& ctx) {
  return oracle_bn_general_traced(ctx, nullptr);
}

}  // namespace k3c
