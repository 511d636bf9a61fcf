#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "k3c/oracle.hpp"

namespace k3c {

enum class BnRoute {
  Divisibility,  // boundary disc = 0, BN general iff 2n | d
  Rational,
  Triangle,
  EllipticThreshold,
  Reduction,
  ResidualTable,
  Oracle,
};

std::string to_string(BnRoute route);

struct BnWitness {
  DivisorClass m;
  DivisorClass n;
  i64 h0_m = 0;
  i64 h0_n = 0;
};

struct BnVerdict {
  bool bn_general = false;
  BnRoute route = BnRoute::Oracle;
  std::optional<BnWitness> witness;  // set when bn_general is false
};

struct Small1Result {
  i64 d0 = 0;
  i64 g0 = 0;
  int steps = 0;
};

/// Iterates (d,g) <- (d-2n, g-d+n) while d > 2n, stopping early once
/// g < d - n. Preserves d^2 - 4n(g-1) at every step.
Small1Result reduce_small1(i64 n, i64 d, i64 g);

/// The reflection (d,g) <- (2n-d, n-d+g); involutive, preserves the
/// discriminant. Requires n-d+g >= 0 and d <= 2n-1.
std::pair<i64, i64> reduce_small2(i64 n, i64 d, i64 g);

/// h0(H-bC) * h0(bC) on S(n,d,1): (n-bd+2)(b+1) when bd <= n+1, else 0.
i64 prodell(i64 n, i64 d, i64 b);

/// The twelve (n,d,g) triples left over by the n <= 9 case analysis.
const std::array<std::array<i64, 3>, 12>& residual_triples();

/// Brill-Noether generality by closed forms with oracle fallback.
BnVerdict bn_general(i64 n, i64 d, i64 g);

/// Exhaustive decomposition search H = M + N over effective nonzero pairs.
BnVerdict oracle_bn_general(const OracleContext& ctx);

/// Like oracle_bn_general but also reports the (a,b) coordinates of every
/// candidate M that survived the degree and nef-pruning filters and turned
/// out effective with effective complement.
BnVerdict oracle_bn_general_traced(const OracleContext& ctx,
                                   std::vector<DivisorClass>* visited);

}  // namespace k3c
